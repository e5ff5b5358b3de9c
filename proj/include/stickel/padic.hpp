#pragma once

// pi-adic valuation on Z[zeta_p] where pi = (lambda), lambda = zeta - 1.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "stickel/cyclo_ring.hpp"

namespace stickel {

/// Coefficients c_j with element = sum_j c_j lambda^j, j = 0..p-2.
struct LambdaExpansion {
    int p;
    std::vector<mpz_class> coeffs;
};

LambdaExpansion to_lambda(const CycInt& a);
CycInt from_lambda(const LambdaExpansion& e);

/// value == nullopt encodes +infinity (the zero element). When exact is
/// false the value is only a lower bound (truncated arithmetic ran out of
/// precision).
struct PiValuation {
    std::optional<std::int64_t> value;
    bool exact = true;

    bool infinite() const { return !value.has_value(); }
    /// True when the valuation is known to be at least k.
    bool at_least(std::int64_t k) const { return !value || *value >= k; }
    /// True when the valuation is known to equal k.
    bool equals(std::int64_t k) const { return exact && value && *value == k; }

    bool operator==(const PiValuation&) const = default;
};

PiValuation pi_val(const CycInt& a);
/// Coefficientwise minimum over the zeta_q-power basis.
PiValuation pi_val_bi(const BiCycInt& x);

/// Exponent M such that arithmetic mod p^M preserves valuations below k.
int truncation_exponent(int p, std::int64_t k);

/// a^e with coefficients reduced mod p^M, M = truncation_exponent(p, k).
CycInt truncated_pow_mod(const CycInt& a, const mpz_class& e, std::int64_t k);

/// Valuation of an element known only modulo p^M.
PiValuation pi_val_truncated(const CycInt& a, int M);

}  // namespace stickel
