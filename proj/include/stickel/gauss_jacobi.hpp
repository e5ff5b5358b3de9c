#pragma once

// Gauss sums attached to a prime above q in Q(zeta_p), Jacobi resolvents
// and the cyclotomic numbers psi_{a,b}.
//
// Character convention: chi(gamma^k) = zeta_p^{v k} where gamma is the
// generator of F_{q^f}^* (u itself when f = 1, the class of X otherwise).
// With this choice
//     g = sum_x chi(x) zeta_q^{Tr x} = sum_i zeta_p^{-i v} zeta_q^{u^{-i}}   (f = 1).

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stickel/cyclo_ring.hpp"
#include "stickel/finite_field.hpp"
#include "stickel/padic.hpp"
#include "stickel/report.hpp"

namespace stickel {

class IndexTable {
public:
    IndexTable(std::int64_t q, std::int64_t u);

    std::int64_t q() const { return q_; }
    std::int64_t u() const { return u_; }
    /// s in 0..q-2 with i = u^s mod q; i must be a unit.
    std::int64_t operator()(std::int64_t i) const;

private:
    std::int64_t q_;
    std::int64_t u_;
    std::vector<std::int64_t> ind_;
};

struct GaussSumParams {
    int p;
    std::int64_t q;
    std::int64_t u;
    std::int64_t v;
    int f;
    std::optional<FiniteField> field;  // present iff f > 1

    /// Validates everything; missing u, v default to the smallest primitive roots.
    static GaussSumParams make(int p, std::int64_t q, std::optional<std::int64_t> u = std::nullopt,
                               std::optional<std::int64_t> v = std::nullopt);

    Json params_json() const;
    Json convention() const;
};

/// Limits on brute-force work, in elementary steps.
struct GaussBudget {
    std::uint64_t full_enumeration = 200'000;
    std::uint64_t coset_scan = 30'000'000;
    std::uint64_t projective_points = 8'000'000;
};

enum class GaussMethod { explicit_formula, character_sum, subfield_reduction };
std::string_view to_string(GaussMethod m);

struct GaussSum {
    BiCycInt value;
    GaussMethod method;
    std::string detail;
};

struct BeyondBudget {
    std::string reason;
};

using GaussOutcome = std::variant<GaussSum, BeyondBudget>;

/// f = 1 only: sum_{i=0}^{q-2} zeta_p^{-i v} zeta_q^{u^{-i}}.
BiCycInt gauss_sum_explicit(const GaussSumParams& gp);

/// Brute force over the whole multiplicative group of F_{q^f}.
BiCycInt gauss_sum_charsum(const GaussSumParams& gp);

/// f > 1. The character is trivial on F_{q^d}^* (d the largest proper
/// divisor of f), so g = q^d * sum over F_{q^d}-lines in ker Tr_{q^f/q^d}
/// of chi(line). nullopt when every strategy exceeds the budget.
std::optional<CycInt> gauss_sum_reduced(const GaussSumParams& gp, const GaussBudget& budget,
                                        std::string* detail = nullptr);

/// Picks the cheapest exact path: explicit for f = 1, full enumeration
/// when small, subfield reduction otherwise.
GaussOutcome gauss_sum(const GaussSumParams& gp, const GaussBudget& budget = {});

/// All structure checks for one pair: norm, congruence mod pi, base-ring
/// membership, tau-eigenvalue, even-f shape.
CheckReport gauss_structure(const GaussSumParams& gp, const GaussBudget& budget = {});

/// Smallest rho with tau(g) = zeta_p^rho g, tau: zeta_q -> zeta_q^u.
std::optional<int> tau_eigenvalue(const GaussSumParams& gp, const BiCycInt& g);
CheckReport verify_tau_eigen(const GaussSumParams& gp, const BiCycInt& g);

struct EvenForm {
    int sign;
    int w;
};
/// (sign, w) with g = sign * zeta_p^w * q^{f/2}, if any.
std::optional<EvenForm> even_form(const GaussSumParams& gp, const BiCycInt& g);
CheckReport verify_f_even_form(const GaussSumParams& gp, const BiCycInt& g);

/// pi-adic valuation of g^p + 1 (q = 1 mod p).
PiValuation val_gp_plus_1(const GaussSumParams& gp, const BiCycInt& g);
CheckReport gp_plus_1_check(const GaussSumParams& gp, const BiCycInt& g);

/// sum_{i=1}^{q-2} zeta_p^{a ind(i) - (a+b) ind(i+1)}.
CycInt psi(int p, std::int64_t q, std::int64_t u, std::int64_t a, std::int64_t b);

/// R(a) = sum_x zeta_p^{a ind_u(x)} zeta_q^x; g = R(v).
BiCycInt resolvent(int p, std::int64_t q, std::int64_t u, std::int64_t a);

/// R(a) R(b) = psi_{a,b} R(a+b).
CheckReport verify_resolvent_identity(int p, std::int64_t q, std::int64_t u, std::int64_t a,
                                      std::int64_t b);

/// sigma(g) - (-1)^{v-1} g^v.
BiCycInt delta_g(const GaussSumParams& gp, const BiCycInt& g);

/// psi_{a,b} = -1 mod pi together with the resolvent identity.
CheckReport psi_report(int p, std::int64_t q, std::int64_t u, std::int64_t a, std::int64_t b);

/// v_pi(Delta(g)) >= 2; exact valuation 3 and the p = 5, q = 11 case are
/// recorded as witnesses only.
CheckReport delta_g_report(const GaussSumParams& gp);

/// Power sums of the exponents of psi_{a,b} modulo p, asserted only in the
/// range where the measured valuation of psi + 1 forces them to vanish.
CheckReport power_sum_check(int p, std::int64_t q, std::int64_t u, std::int64_t a, std::int64_t b,
                            int k);

}  // namespace stickel
