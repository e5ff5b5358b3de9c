#pragma once

// Small extension fields F_{q^f} = F_q[X]/(g) with g primitive, so X
// generates the multiplicative group.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace stickel {

class FiniteField {
public:
    using Elem = std::vector<std::int64_t>;
    static constexpr int kMaxDegree = 64;

    /// modulus holds g_0..g_{f-1} of the monic g = X^f + sum g_j X^j.
    /// Throws UsageError unless X has order q^f - 1.
    FiniteField(std::int64_t q, int f, std::vector<std::int64_t> modulus);

    /// First g in order of the integer sum_j g_j q^j for which X is primitive.
    static FiniteField smallest_primitive(std::int64_t q, int f);

    std::int64_t q() const { return q_; }
    int f() const { return f_; }
    const std::vector<std::int64_t>& modulus() const { return g_; }
    const mpz_class& group_order() const { return order_; }

    Elem zero() const { return Elem(static_cast<std::size_t>(f_), 0); }
    Elem one() const;
    Elem x() const;
    Elem constant(std::int64_t c) const;

    void mul_x_inplace(Elem& y) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, const mpz_class& e) const;
    bool is_zero(const Elem& a) const;

    /// Absolute trace to F_q, via the precomputed traces of 1, X, ..., X^{f-1}.
    std::int64_t trace(const Elem& a) const;
    const std::vector<std::int64_t>& trace_row() const { return trace_row_; }

    /// "X^3+2*X+1" style rendering.
    std::string describe() const;

private:
    bool x_is_primitive() const;

    std::int64_t q_;
    int f_;
    std::vector<std::int64_t> g_;
    mpz_class order_;
    std::vector<std::int64_t> trace_row_;
};

/// Distinct primes dividing q^f - 1, obtained from the cyclotomic values
/// Phi_d(q), d | f.
std::vector<mpz_class> group_order_primes(std::int64_t q, int f);

/// Row-reduced null space of a matrix over F_q (rows are equations).
std::vector<std::vector<std::int64_t>> null_space_mod(std::vector<std::vector<std::int64_t>> rows,
                                                      int ncols, std::int64_t q);

}  // namespace stickel
