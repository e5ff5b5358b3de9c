#pragma once

// Dense univariate polynomials over Z/n for a (possibly very large) prime n.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace stickel {

class ModPoly {
public:
    explicit ModPoly(mpz_class modulus);
    /// coeffs[i] multiplies X^i; reduced and trimmed on construction.
    ModPoly(mpz_class modulus, std::vector<mpz_class> coeffs);

    static ModPoly x_power(const mpz_class& modulus, std::size_t k);
    static ModPoly constant(const mpz_class& modulus, const mpz_class& c);

    const mpz_class& modulus() const { return n_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const mpz_class& leading() const { return c_.back(); }
    mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }

    ModPoly monic() const;
    mpz_class eval(const mpz_class& x) const;

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const mpz_class& s);
    bool operator==(const ModPoly& o) const { return n_ == o.n_ && c_ == o.c_; }

    std::string to_string() const;

private:
    void normalize();

    mpz_class n_;
    std::vector<mpz_class> c_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly operator%(const ModPoly& a, const ModPoly& b);

/// Monic gcd (zero if both inputs are zero).
ModPoly gcd(ModPoly a, ModPoly b);

/// base^e mod m.
ModPoly powmod(const ModPoly& base, const mpz_class& e, const ModPoly& m);

/// Distinct roots in Z/n, sorted ascending. Isolates the split part with
/// gcd(X^n - X, f), then splits with gcd((X+a)^{(n-1)/2} - 1, .) for
/// pseudo-random a from a fixed seed.
std::vector<mpz_class> roots(const ModPoly& f);

}  // namespace stickel
