#pragma once

// Exact arithmetic in Z[zeta_p] and Z[zeta_p, zeta_q].
//
// Elements are stored in the power basis 1, zeta, ..., zeta^{p-2}; the
// relation zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}) is applied after
// every operation, so two equal ring elements have identical coefficients.
// BiCycInt applies the same relation independently in each variable.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace stickel {

/// The automorphism zeta_n -> zeta_n^t for t a unit modulo n.
class GaloisIndex {
public:
    GaloisIndex(std::int64_t t, std::int64_t modulus);

    std::int64_t t() const { return t_; }
    std::int64_t modulus() const { return modulus_; }

    /// (this o other): zeta -> zeta^{t * t'}.
    GaloisIndex compose(const GaloisIndex& other) const;
    GaloisIndex inverse() const;

    bool operator==(const GaloisIndex&) const = default;

private:
    std::int64_t t_;
    std::int64_t modulus_;
};

class CycInt {
public:
    explicit CycInt(int p);
    CycInt(int p, std::vector<mpz_class> coeffs);

    static CycInt integer(int p, const mpz_class& n);
    static CycInt zeta_power(int p, std::int64_t k);
    static CycInt lambda(int p);

    /// Reduces a length-p vector indexed by exponents 0..p-1.
    static CycInt from_redundant(int p, std::vector<mpz_class> redundant);

    int p() const { return p_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& operator[](std::size_t j) const { return c_[j]; }

    bool is_zero() const;
    bool is_rational() const;

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt& operator*=(const mpz_class& s);

    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator-(CycInt a) { return a *= mpz_class(-1); }
    friend CycInt operator*(CycInt a, const mpz_class& s) { return a *= s; }
    friend CycInt operator*(const CycInt& a, const CycInt& b);

    bool operator==(const CycInt& o) const { return p_ == o.p_ && c_ == o.c_; }

    std::string to_string() const;

private:
    int p_;
    std::vector<mpz_class> c_;
};

CycInt pow(const CycInt& a, std::uint64_t e);
CycInt galois(const CycInt& a, const GaloisIndex& t);
CycInt conj(const CycInt& a);
mpz_class norm(const CycInt& a);

/// Quotient a/b when it lies in Z[zeta_p]; std::nullopt means "not divisible".
std::optional<CycInt> exact_div(const CycInt& a, const CycInt& b);

/// Reduce every coefficient into [0, modulus).
CycInt reduce_mod(const CycInt& a, const mpz_class& modulus);
CycInt mul_mod(const CycInt& a, const CycInt& b, const mpz_class& modulus);

class BiCycInt {
public:
    BiCycInt(int p, int q);

    static BiCycInt embed(const CycInt& a, int q);
    static BiCycInt monomial(int p, int q, std::int64_t j, std::int64_t k,
                             const mpz_class& coefficient = 1);

    /// Reduces a p x q grid stored as grid[k * p + j] for zeta_p^j zeta_q^k.
    static BiCycInt from_redundant(int p, int q, std::vector<mpz_class> grid);

    int p() const { return p_; }
    int q() const { return q_; }
    const mpz_class& at(int j, int k) const { return c_[idx(j, k)]; }

    /// The zeta_q^k coefficient as an element of Z[zeta_p], k in 0..q-2.
    CycInt column(int k) const;
    static BiCycInt from_columns(int q, std::span<const CycInt> columns);

    bool is_zero() const;

    BiCycInt& operator+=(const BiCycInt& o);
    BiCycInt& operator-=(const BiCycInt& o);
    BiCycInt& operator*=(const mpz_class& s);

    friend BiCycInt operator+(BiCycInt a, const BiCycInt& b) { return a += b; }
    friend BiCycInt operator-(BiCycInt a, const BiCycInt& b) { return a -= b; }
    friend BiCycInt operator-(BiCycInt a) { return a *= mpz_class(-1); }
    friend BiCycInt operator*(const BiCycInt& a, const BiCycInt& b);
    friend BiCycInt operator*(const CycInt& a, const BiCycInt& b);

    bool operator==(const BiCycInt& o) const {
        return p_ == o.p_ && q_ == o.q_ && c_ == o.c_;
    }

private:
    std::size_t idx(int j, int k) const {
        return static_cast<std::size_t>(k) * static_cast<std::size_t>(p_ - 1) +
               static_cast<std::size_t>(j);
    }

    int p_;
    int q_;
    std::vector<mpz_class> c_;
};

BiCycInt pow(const BiCycInt& a, std::uint64_t e);
/// zeta_p -> zeta_p^t, zeta_q fixed.
BiCycInt galois_p(const BiCycInt& a, const GaloisIndex& t);
/// zeta_q -> zeta_q^m, zeta_p fixed.
BiCycInt galois_q(const BiCycInt& a, const GaloisIndex& m);
BiCycInt conj_p(const BiCycInt& a);
/// Complex conjugation of both roots of unity.
BiCycInt conj(const BiCycInt& a);

struct NotInBaseRing {
    int first_offending_k;
};

using Projection = std::variant<CycInt, NotInBaseRing>;

/// Succeeds iff every zeta_q^k coefficient with k >= 1 vanishes.
Projection project_to_cyc(const BiCycInt& x);

}  // namespace stickel
