#include <doctest.h>

#include "generators.hpp"
#include "stickel/padic.hpp"

using namespace stickel;

namespace {

// Independent oracle: divide by lambda until the quotient leaves Z[zeta].
std::int64_t valuation_by_division(CycInt a) {
    std::int64_t k = 0;
    const CycInt lambda = CycInt::lambda(a.p());
    while (auto q = exact_div(a, lambda)) {
        a = *q;
        ++k;
    }
    return k;
}

}  // namespace

TEST_CASE("valuation matches the exact-division oracle") {
    for (int p : {5, 7, 11, 13}) {
        testgen::Gen gen(100 + static_cast<std::uint64_t>(p));
        for (int trial = 0; trial < 500; ++trial) {
            const CycInt a = trial % 2 == 0 ? gen.nonzero_cyc(p, 30) : gen.with_valuation_bias(p);
            const PiValuation v = pi_val(a);
            REQUIRE(v.value.has_value());
            CHECK(v.exact);
            CHECK(*v.value == valuation_by_division(a));
        }
    }
}

TEST_CASE("valuation is additive and respects the ultrametric bound") {
    for (int p : {5, 7, 11, 13}) {
        testgen::Gen gen(200 + static_cast<std::uint64_t>(p));
        for (int trial = 0; trial < 500; ++trial) {
            const CycInt a = gen.with_valuation_bias(p), b = gen.with_valuation_bias(p);
            const auto va = *pi_val(a).value, vb = *pi_val(b).value;
            CHECK(*pi_val(a * b).value == va + vb);
            CHECK(pi_val(a + b).at_least(std::min(va, vb)));
        }
    }
}

TEST_CASE("fixed values") {
    CHECK(pi_val(CycInt::integer(5, 5)) == PiValuation{4, true});
    CHECK(pi_val(CycInt::integer(7, 49)) == PiValuation{12, true});
    CHECK(pi_val(CycInt(5)).infinite());
    CHECK(pi_val(CycInt::zeta_power(11, 3) - CycInt::integer(11, 1)) == PiValuation{1, true});
}

TEST_CASE("lambda expansion round trip") {
    testgen::Gen gen(300);
    for (int p : {5, 7, 13}) {
        for (int trial = 0; trial < 50; ++trial) {
            const CycInt a = gen.cyc(p, 50);
            CHECK(from_lambda(to_lambda(a)) == a);
        }
    }
}

TEST_CASE("truncated powers preserve valuations below the bound") {
    testgen::Gen gen(400);
    for (int p : {5, 7}) {
        const std::int64_t k = 2 * p + 1;
        const int M = truncation_exponent(p, k);
        for (int trial = 0; trial < 60; ++trial) {
            const CycInt a = gen.nonzero_cyc(p, 4);
            const auto e = static_cast<std::uint64_t>(gen.integer(1, 30));
            const CycInt exact = pow(a, e) - CycInt::integer(p, 1);
            const CycInt trunc = truncated_pow_mod(a, mpz_class(static_cast<unsigned long>(e)), k) - CycInt::integer(p, 1);
            const PiValuation ve = pi_val(exact);
            const PiValuation vt = pi_val_truncated(trunc, M);
            if (ve.value && *ve.value < k) {
                CHECK(vt == ve);
            } else {
                CHECK(vt.at_least(k));
            }
        }
    }
}

TEST_CASE("bicyclotomic valuation is the columnwise minimum") {
    testgen::Gen gen(500);
    const int p = 5, q = 11;
    for (int trial = 0; trial < 40; ++trial) {
        const BiCycInt x = gen.bicyc(p, q, 8);
        std::optional<std::int64_t> best;
        for (int k = 0; k < q - 1; ++k) {
            const PiValuation v = pi_val(x.column(k));
            if (v.value && (!best || *v.value < *best)) best = v.value;
        }
        CHECK(pi_val_bi(x).value == best);
        const BiCycInt y = CycInt::lambda(p) * x;
        if (best) CHECK(*pi_val_bi(y).value == *best + 1);
    }
}
