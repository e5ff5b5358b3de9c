#include "stickel/regularity.hpp"

#include <mutex>
#include <optional>

#include "stickel/arith.hpp"
#include "stickel/group_ring.hpp"

namespace stickel {

namespace {

std::mutex bernoulli_mutex;
std::vector<mpq_class> bernoulli_cache{mpq_class(1)};

}  // namespace

mpq_class bernoulli(int k) {
    if (k < 0) throw UsageError("Bernoulli index must be nonnegative");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    while (static_cast<int>(bernoulli_cache.size()) <= k) {
        const int m = static_cast<int>(bernoulli_cache.size());
        mpq_class s = 0;
        if (m % 2 == 1 && m > 1) {
            bernoulli_cache.emplace_back(0);
            continue;
        }
        for (int j = 0; j < m; ++j) {
            if (bernoulli_cache[static_cast<std::size_t>(j)] == 0) continue;
            s += mpq_class(binomial(m + 1, j)) * bernoulli_cache[static_cast<std::size_t>(j)];
        }
        mpq_class b = -s / (m + 1);
        b.canonicalize();
        bernoulli_cache.push_back(b);
    }
    return bernoulli_cache[static_cast<std::size_t>(k)];
}

std::int64_t bernoulli_mod_p(int p, int k) {
    if (k < 0 || k % 2 != 0) throw UsageError("Bernoulli index must be even and nonnegative");
    if (k > 0 && k % (p - 1) == 0) throw UsageError("p divides the denominator of B_k");
    const mpq_class b = bernoulli(k);
    const std::int64_t num = mpz_fdiv_ui(b.get_num_mpz_t(), static_cast<unsigned long>(p));
    const std::int64_t den = mpz_fdiv_ui(b.get_den_mpz_t(), static_cast<unsigned long>(p));
    return mulmod(num, invmod(den, p), p);
}

std::vector<int> irregular_indices(int p) {
    std::vector<int> out;
    for (int k = 2; k <= p - 3; k += 2) {
        if (bernoulli_mod_p(p, k) == 0) out.push_back(k);
    }
    return out;
}

std::vector<std::int64_t> q_odd_roots(int p, std::int64_t v) {
    const GroupRingEl Q = build_Q(p, v);
    std::vector<std::int64_t> roots;
    for (std::int64_t X = 1; X < p; ++X) {
        if (powmod(X, (p - 1) / 2, p) != p - 1) continue;
        if (Q.eval_mod(X, p) == 0) roots.push_back(X);
    }
    return roots;
}

IrregularityReport regular_check(int p, std::optional<std::int64_t> v) {
    if (p < 3 || !is_prime(static_cast<std::int64_t>(p))) throw UsageError("p must be an odd prime");
    IrregularityReport rep;
    rep.p = p;
    rep.v = v.value_or(smallest_primitive_root(p));
    for (auto x : q_odd_roots(p, rep.v)) {
        if (x == mod(rep.v, p) && powmod(x, p - 1, static_cast<std::int64_t>(p) * p) == 1) {
            rep.fermat_quotient_root = x;
        } else {
            rep.odd_roots.push_back(x);
        }
    }
    rep.bernoulli_irregular_indices = irregular_indices(p);
    const bool a = rep.odd_roots.empty();
    const bool b = rep.bernoulli_irregular_indices.empty();
    if (a && b) {
        rep.verdict = "regular";
    } else if (!a && !b) {
        rep.verdict = "irregular";
    } else {
        rep.verdict = "discrepancy";
    }
    return rep;
}

CheckReport IrregularityReport::to_report() const {
    CheckReport r;
    r.check = "regular_check";
    r.params = {{"p", p}};
    r.convention = {{"v", v}};
    Json roots = Json::array();
    for (auto x : odd_roots) roots.push_back(x);
    Json idx = Json::array();
    for (auto k : bernoulli_irregular_indices) idx.push_back(k);
    r.witnesses["verdict"] = verdict;
    r.witnesses["odd_roots"] = roots;
    r.witnesses["bernoulli_irregular_indices"] = idx;
    if (fermat_quotient_root) r.witnesses["fermat_quotient_root"] = *fermat_quotient_root;
    r.witnesses["counts_agree"] = odd_roots.size() == bernoulli_irregular_indices.size();
    if (verdict == "discrepancy") {
        r.degrade(Status::fail);
    } else if (odd_roots.size() != bernoulli_irregular_indices.size()) {
        r.degrade(Status::monitored);
    }
    return r;
}

CheckReport b_half_check(int p, std::optional<std::int64_t> v_opt) {
    if (p < 7 || p % 4 != 3 || !is_prime(static_cast<std::int64_t>(p))) {
        throw UsageError("b_half_check needs a prime p = 3 mod 4, p >= 7");
    }
    const std::int64_t v = v_opt.value_or(smallest_primitive_root(p));
    CheckReport r;
    r.check = "b_half";
    r.params = {{"p", p}};
    r.convention = {{"v", v}};

    std::int64_t alt = 0;
    mpz_class lhs = 0;  // sum (-1)^i (v^{-(i-1)} - v^{-i} v)
    for (int i = 1; i <= p - 2; ++i) {
        const std::int64_t sign = i % 2 == 0 ? 1 : -1;
        alt += sign * delta(p, v, i);
        lhs += sign * (lifted_power(v, -(i - 1), p) - lifted_power(v, -i, p) * v);
    }
    mpz_class V = 0;
    for (int i = 0; i <= p - 2; ++i) V += (i % 2 == 0 ? -1 : 1) * lifted_power(v, -i, p);
    const mpz_class rhs = V * (1 + v) + v - lifted_power(v, -(p - 2), p);

    const std::int64_t alt_mod = mod(alt, p);
    const std::int64_t b_half = bernoulli_mod_p(p, (p + 1) / 2);
    r.witnesses["alternating_delta_sum"] = dec(alt);
    r.witnesses["alternating_delta_sum_mod_p"] = alt_mod;
    r.witnesses["identity_holds"] = lhs == rhs && lhs == p * mpz_class(static_cast<long>(alt));
    r.witnesses["V"] = dec(V);
    r.witnesses["bernoulli_half_mod_p"] = b_half;
    if (alt_mod == 0 || !(lhs == rhs) || b_half == 0) r.degrade(Status::fail);
    return r;
}

}  // namespace stickel
