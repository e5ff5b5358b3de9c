#pragma once

// Integral group ring of Gal(Q(zeta_p)/Q), written in powers of the
// generator sigma: zeta -> zeta^v, with sigma^{p-1} = 1.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "stickel/cyclo_ring.hpp"
#include "stickel/report.hpp"

namespace stickel {

class GroupRingEl {
public:
    /// coeffs[i] multiplies sigma^i; v must be a primitive root mod p.
    GroupRingEl(int p, std::int64_t v, std::vector<mpz_class> coeffs);

    static GroupRingEl zero(int p, std::int64_t v);
    static GroupRingEl sigma_power(int p, std::int64_t v, std::int64_t i,
                                   const mpz_class& coefficient = 1);
    static GroupRingEl scalar(int p, std::int64_t v, const mpz_class& c);

    int p() const { return p_; }
    std::int64_t v() const { return v_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& operator[](std::size_t i) const { return c_[i]; }

    GroupRingEl& operator+=(const GroupRingEl& o);
    GroupRingEl& operator-=(const GroupRingEl& o);
    GroupRingEl& operator*=(const mpz_class& s);
    friend GroupRingEl operator+(GroupRingEl a, const GroupRingEl& b) { return a += b; }
    friend GroupRingEl operator-(GroupRingEl a, const GroupRingEl& b) { return a -= b; }
    friend GroupRingEl operator*(GroupRingEl a, const mpz_class& s) { return a *= s; }
    friend GroupRingEl operator*(const GroupRingEl& a, const GroupRingEl& b);

    bool operator==(const GroupRingEl& o) const {
        return p_ == o.p_ && v_ == o.v_ && c_ == o.c_;
    }

    /// Substitutes sigma -> X and reduces modulo n.
    mpz_class eval_mod(const mpz_class& X, const mpz_class& n) const;
    std::int64_t eval_mod(std::int64_t X, std::int64_t n) const;

    /// Largest index with a nonzero coefficient, -1 for zero.
    int degree() const;

private:
    void check_compatible(const GroupRingEl& o) const;

    int p_;
    std::int64_t v_;
    std::vector<mpz_class> c_;
};

GroupRingEl build_P(int p, std::int64_t v);

/// delta_i = (v^{-(i-1)} - v^{-i} v) / p with residues lifted to 1..p-1.
std::int64_t delta(int p, std::int64_t v, int i);
/// The same quantity through -floor(v^{-i} v / p), for cross-checking.
std::int64_t delta_floor(int p, std::int64_t v, int i);

GroupRingEl build_Q(int p, std::int64_t v);

/// (1 - sigma) sum_{i<=(p-3)/2} delta_i sigma^i + (1 - v) sigma^{(p-1)/2}.
GroupRingEl build_Q1(int p, std::int64_t v);

/// v^{-(p-2)} prod_{k=0, k!=1}^{p-2} (X - v^k) as an ordinary polynomial of degree p-2.
std::vector<mpz_class> build_T_poly(int p, std::int64_t v);

/// Checks P(sigma - v) = pQ, the factorization of Q, P = T + pR with
/// deg R < p-2, and P(sigma-v)(sigma-1) = p Q1 (sigma^{(p-1)/2} - 1).
CheckReport verify_PQ_identity(int p, std::int64_t v);

/// Element for residue degree f > 1 of q: coefficient i < m = (p-1)/f is
/// (sum_{j<f} v^{-(i+jm)}) / p.
GroupRingEl build_S2(int p, std::int64_t q, std::int64_t v);

/// prod_i sigma^i(a)^{theta_i}. Without k the result is exact, otherwise it
/// is computed modulo p^M for valuation comparisons below k.
CycInt apply_multiplicative(const CycInt& a, const GroupRingEl& theta,
                            std::optional<std::int64_t> k = std::nullopt);

}  // namespace stickel
