#include "stickel/padic.hpp"

#include <algorithm>

#include "stickel/arith.hpp"

namespace stickel {

namespace {

// Binomial rows 0..n, cached per p since every valuation reuses them.
const std::vector<std::vector<mpz_class>>& pascal(int p) {
    thread_local std::vector<std::vector<std::vector<mpz_class>>> cache;
    if (cache.size() <= static_cast<std::size_t>(p)) cache.resize(static_cast<std::size_t>(p) + 1);
    auto& rows = cache[static_cast<std::size_t>(p)];
    if (rows.empty()) {
        rows.resize(static_cast<std::size_t>(p - 1));
        for (int n = 0; n < p - 1; ++n) {
            auto& row = rows[static_cast<std::size_t>(n)];
            row.resize(static_cast<std::size_t>(n + 1));
            for (int k = 0; k <= n; ++k) row[static_cast<std::size_t>(k)] = binomial(n, k);
        }
    }
    return rows;
}

}  // namespace

LambdaExpansion to_lambda(const CycInt& a) {
    const int p = a.p();
    const auto& C = pascal(p);
    // zeta^k = (1 + lambda)^k = sum_j C(k, j) lambda^j
    std::vector<mpz_class> c(static_cast<std::size_t>(p - 1));
    for (int k = 0; k < p - 1; ++k) {
        const mpz_class& ak = a[static_cast<std::size_t>(k)];
        if (ak == 0) continue;
        for (int j = 0; j <= k; ++j) {
            mpz_addmul(c[static_cast<std::size_t>(j)].get_mpz_t(), ak.get_mpz_t(),
                       C[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)].get_mpz_t());
        }
    }
    return {p, std::move(c)};
}

CycInt from_lambda(const LambdaExpansion& e) {
    const int p = e.p;
    if (e.coeffs.size() != static_cast<std::size_t>(p - 1)) {
        throw UsageError("lambda expansion needs p-1 coefficients");
    }
    const auto& C = pascal(p);
    // lambda^j = sum_k C(j, k) (-1)^{j-k} zeta^k
    std::vector<mpz_class> a(static_cast<std::size_t>(p - 1));
    for (int j = 0; j < p - 1; ++j) {
        const mpz_class& cj = e.coeffs[static_cast<std::size_t>(j)];
        if (cj == 0) continue;
        for (int k = 0; k <= j; ++k) {
            const mpz_class& b = C[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            if ((j - k) % 2 == 0) {
                mpz_addmul(a[static_cast<std::size_t>(k)].get_mpz_t(), cj.get_mpz_t(), b.get_mpz_t());
            } else {
                mpz_submul(a[static_cast<std::size_t>(k)].get_mpz_t(), cj.get_mpz_t(), b.get_mpz_t());
            }
        }
    }
    return CycInt(p, std::move(a));
}

PiValuation pi_val(const CycInt& a) {
    if (a.is_zero()) return {};
    const int p = a.p();
    const LambdaExpansion e = to_lambda(a);
    std::int64_t best = -1;
    for (int j = 0; j < p - 1; ++j) {
        const mpz_class& c = e.coeffs[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        // Terms j + (p-1) v_p(c_j) have distinct residues mod p-1, so no cancellation.
        const std::int64_t t = j + static_cast<std::int64_t>(p - 1) * valuation(c, p);
        if (best < 0 || t < best) best = t;
    }
    return {best, true};
}

PiValuation pi_val_bi(const BiCycInt& x) {
    PiValuation best;
    for (int k = 0; k < x.q() - 1; ++k) {
        const PiValuation v = pi_val(x.column(k));
        if (v.infinite()) continue;
        if (best.infinite() || *v.value < *best.value) best = v;
    }
    return best;
}

int truncation_exponent(int p, std::int64_t k) {
    if (k < 1) throw UsageError("truncation level must be positive");
    const std::int64_t num = k + p - 2;
    return static_cast<int>((num + p - 2) / (p - 1)) + 1;
}

CycInt truncated_pow_mod(const CycInt& a, const mpz_class& e, std::int64_t k) {
    if (e < 0) throw UsageError("truncated_pow_mod needs a nonnegative exponent");
    const int p = a.p();
    mpz_class modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(truncation_exponent(p, k)));
    CycInt result = reduce_mod(CycInt::integer(p, 1), modulus);
    CycInt base = reduce_mod(a, modulus);
    const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mul_mod(result, base, modulus);
        if (i + 1 < bits) base = mul_mod(base, base, modulus);
    }
    return result;
}

PiValuation pi_val_truncated(const CycInt& a, int M) {
    const int p = a.p();
    mpz_class modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(M));
    const std::int64_t ceiling = static_cast<std::int64_t>(p - 1) * M;
    const PiValuation v = pi_val(reduce_mod(a, modulus));
    if (v.infinite() || *v.value >= ceiling) return {ceiling, false};
    return v;
}

}  // namespace stickel
