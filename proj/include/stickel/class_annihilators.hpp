#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "stickel/cyclo_ring.hpp"
#include "stickel/modpoly.hpp"
#include "stickel/report.hpp"

namespace stickel {

// ---- gcd annihilators modulo h -------------------------------------------

struct AnnihilatorGcds {
    ModPoly P;        // sum v^{-i} X^i
    ModPoly T;        // sum X^i
    ModPoly D;        // gcd(P, T)
    ModPoly D_minus;  // gcd(P, X^{(p-1)/2} + 1)
    std::vector<mpz_class> roots_D;
    std::vector<mpz_class> roots_D_minus;
};

AnnihilatorGcds annihilator_gcds(int p, std::int64_t v, const mpz_class& h);

/// A published example: V(X) = X - nu when rho = 1. beta and nu may be absent.
struct AnnihilatorExample {
    int p;
    mpz_class h;
    std::optional<int> beta;
    int rho;
    std::int64_t d;
    std::optional<mpz_class> nu;
};

/// D nonconstant, d = gcd(h-1, p-1), root orders, re-substitution, and
/// the expected nu matched directly or up to reindexing nu -> nu^t.
CheckReport annihilator_check(const AnnihilatorExample& ex, std::optional<std::int64_t> v = std::nullopt);

// ---- imaginary quadratic subfield -----------------------------------------

/// sum_{i=0}^{p-2} (-1)^i v^{-i}, residues lifted to 1..p-1.
mpz_class quad_alternating_sum(int p, std::int64_t v);

/// -quad_alternating_sum / p for p = 3 mod 4.
std::int64_t dirichlet_h(int p);

/// Number of reduced forms of discriminant -p.
std::int64_t quad_class_oracle(int p);

/// Odd prime divisors of the oracle class number.
std::vector<std::int64_t> odd_class_primes(int p);

/// sum over i with v^{-i} odd of (-1)^i.
std::int64_t odd_subsum(int p, std::int64_t v);

struct IDelta {
    std::vector<int> indices;
    std::int64_t alternating_sum;
};

/// I_delta = {i : v_{(p-1)/2-i} + v_{(p-1)/2-i+ind_v(delta)} > p}, v_n = v^n lifted.
IDelta i_delta_sum(int p, std::int64_t v, std::int64_t delta);

CheckReport quad_class_report(int p, std::optional<std::int64_t> v = std::nullopt);
CheckReport odd_subsum_report(int p, std::optional<std::int64_t> v = std::nullopt);
CheckReport i_delta_report(int p, std::int64_t delta, std::optional<std::int64_t> v = std::nullopt);

// ---- biquadratic subfield -------------------------------------------------

/// (sum (-1)^i v^{2i})^2 + (sum (-1)^i v^{2i+1})^2 over i = 0..(p-3)/2; p = 5 mod 8.
mpz_class biquadratic_S(int p, std::int64_t v);
CheckReport biquadratic_report(int p, std::optional<std::int64_t> v = std::nullopt);

// ---- residue degree f > 1 -------------------------------------------------

CheckReport f_gt1_congruences(int p, std::int64_t q, std::optional<std::int64_t> v = std::nullopt);

// ---- principal primes -----------------------------------------------------

/// q1 = a + lambda^{p+1} r; when N(q1) is a prime q, p^{(q-1)/p} = 1 mod q.
CheckReport principal_prime_test(int p, std::int64_t a, const CycInt& r);

/// Walks small r in a fixed order until `wanted` prime norms are found.
std::vector<CheckReport> principal_prime_scan(int p, std::int64_t a, int wanted, int coefficient_bound = 2);

// ---- singular numbers ----------------------------------------------------

/// Valuations of A^{P(sigma)} -+ 1 at truncation 2p+1 and the case analysis
/// on q. With g given (q = 1 mod p), also matches g^{p^2} against
/// +-zeta^w sigma_t(A^{P(sigma)}).
CheckReport singular_padic_profile(const CycInt& A, std::int64_t expected_q,
                                   std::optional<std::int64_t> v = std::nullopt,
                                   const BiCycInt* g = nullptr);

/// Parses "c0,c1,..." (at most p coefficients, the power basis in zeta).
CycInt parse_cyc(int p, const std::string& text);

}  // namespace stickel
