#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "stickel/report.hpp"

namespace stickel {

/// Exact B_k (B_1 = -1/2), memoized per process.
mpq_class bernoulli(int k);

/// B_k mod p for even 0 <= k with (p-1) not dividing k.
std::int64_t bernoulli_mod_p(int p, int k);

/// Even k <= p-3 with p | numerator(B_k).
std::vector<int> irregular_indices(int p);

/// X in 1..p-1 with sum_{i=1}^{p-2} delta_i X^i = 0 mod p and X^{(p-1)/2} = -1.
/// X = v is itself a root exactly when v^{p-1} = 1 mod p^2.
std::vector<std::int64_t> q_odd_roots(int p, std::int64_t v);

struct IrregularityReport {
    int p;
    std::int64_t v;
    std::vector<std::int64_t> odd_roots;  // excludes the Fermat-quotient root X = v
    std::optional<std::int64_t> fermat_quotient_root;  // v, when v^{p-1} = 1 mod p^2
    std::vector<int> bernoulli_irregular_indices;
    std::string verdict;  // "regular", "irregular" or "discrepancy"

    CheckReport to_report() const;
};

IrregularityReport regular_check(int p, std::optional<std::int64_t> v = std::nullopt);

/// For p = 3 mod 4: the alternating delta sum is nonzero mod p and the
/// identity p * sum = V(1+v) + v - v^{-(p-2)} holds.
CheckReport b_half_check(int p, std::optional<std::int64_t> v = std::nullopt);

}  // namespace stickel
