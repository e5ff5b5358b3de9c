#include <doctest.h>

#include <set>

#include "stickel/arith.hpp"
#include "stickel/class_annihilators.hpp"
#include "stickel/gauss_jacobi.hpp"

using namespace stickel;

TEST_CASE("quadratic alternating sums") {
    CHECK(quad_alternating_sum(131, 2) == -5 * 131);
    CHECK(quad_alternating_sum(167, 5) == -11 * 167);
    CHECK(dirichlet_h(131) == 5);
    CHECK(dirichlet_h(167) == 11);
    CHECK(quad_class_oracle(23) == 3);
    CHECK(quad_class_oracle(47) == 5);
    CHECK(quad_class_oracle(71) == 7);
    const CheckReport r = quad_class_report(131);
    CHECK(r.status == Status::pass);
    CHECK(r.witnesses["alternating_sum"] == "-655");
    CHECK_THROWS_AS(dirichlet_h(13), UsageError);
}

TEST_CASE("Dirichlet class number equals the forms count for p < 500") {
    for (auto p64 : primes_between(7, 499)) {
        const int p = static_cast<int>(p64);
        if (p % 4 != 3) continue;
        CAPTURE(p);
        CHECK(dirichlet_h(p) == quad_class_oracle(p));
    }
}

TEST_CASE("I_delta: literal definition against the simplified condition") {
    for (auto p64 : primes_between(5, 103)) {
        const int p = static_cast<int>(p64);
        const std::int64_t v = smallest_primitive_root(p);
        for (std::int64_t delta = 1; delta <= p - 2; ++delta) {
            CAPTURE(p);
            CAPTURE(delta);
            const IDelta I = i_delta_sum(p, v, delta);
            std::vector<int> simple;
            for (int i = 0; i <= p - 2; ++i) {
                const std::int64_t a = lifted_power(v, -i, p);
                if (a + mulmod(delta, a, p) < p) simple.push_back(i);
            }
            CHECK(I.indices == simple);
            if (p % 4 == 3) CHECK(I.indices.size() % 2 == 1);
        }
    }
}

TEST_CASE("odd subsum and I_delta sums for p = 131") {
    CHECK(odd_subsum_report(131).status != Status::fail);
    CHECK(i_delta_report(131, 2).status != Status::fail);
    CHECK(i_delta_sum(131, 2, 2).alternating_sum % 5 == 0);
}

TEST_CASE("biquadratic S") {
    CHECK(biquadratic_S(13, 2) == 338);
    for (auto p64 : primes_between(5, 101)) {
        const int p = static_cast<int>(p64);
        if (p % 8 != 5) continue;
        CAPTURE(p);
        CHECK(biquadratic_report(p).status != Status::fail);
        CHECK(biquadratic_S(p, smallest_primitive_root(p)) % p == 0);
    }
    CHECK(biquadratic_report(5).status == Status::monitored);
    CHECK_THROWS_AS(biquadratic_S(7, 3), UsageError);
}

TEST_CASE("f > 1 congruences") {
    const CheckReport r = f_gt1_congruences(7, 11, 3);
    CHECK(r.witnesses["S2"] == Json::array({"1", "2"}));
    CHECK(r.witnesses["congruence_values"] == Json::array({-1}));
    CHECK(r.witnesses["verdict"] == "p-principal");
    // Corollary: p = 3 mod 4 and f = (p-1)/2 always gives a p-principal prime.
    for (auto p64 : primes_between(7, 100)) {
        const int p = static_cast<int>(p64);
        if (p % 4 != 3) continue;
        for (auto q : primes_between(3, 2000)) {
            if (q != p && multiplicative_order(q, p) == (p - 1) / 2) {
                CAPTURE(p);
                const CheckReport c = f_gt1_congruences(p, q);
                CHECK(c.status == Status::pass);
                CHECK(c.witnesses["verdict"] == "p-principal");
                break;
            }
        }
    }
}

TEST_CASE("annihilator gcds for p = 131, h = 3 contain X^3 + 2X^2 + 1") {
    const AnnihilatorGcds g = annihilator_gcds(131, 2, 3);
    const ModPoly V(mpz_class(3), {1, 0, 2, 1});
    CHECK((g.D_minus % V).is_zero());
    CHECK(g.D.degree() > 0);
}

TEST_CASE("annihilator examples and the reindexing path") {
    const AnnihilatorExample direct{137, 17, 2, 1, 8, mpz_class(-8)};
    CheckReport r = annihilator_check(direct);
    CHECK(r.status == Status::pass);
    CHECK(r.witnesses["nu_match"] == "direct");

    AnnihilatorExample reindexed = direct;
    reindexed.nu = mpz_class(15);  // 9^3 mod 17
    r = annihilator_check(reindexed);
    CHECK(r.status == Status::monitored);
    CHECK(r.witnesses["nu_match"] == "galois_reindexing");

    AnnihilatorExample wrong = direct;
    wrong.nu = mpz_class(1);
    CHECK(annihilator_check(wrong).status == Status::fail);

    AnnihilatorExample bad_d = direct;
    bad_d.d = 4;
    CHECK(annihilator_check(bad_d).status == Status::fail);
}

TEST_CASE("principal primes") {
    const auto reports = principal_prime_scan(5, 1, 3);
    CHECK(reports.size() == 3);
    for (const auto& r : reports) CHECK(r.status == Status::pass);
    const CheckReport unit = principal_prime_test(5, 1, CycInt(5));
    CHECK(unit.status == Status::inapplicable);
    CHECK_THROWS_AS(principal_prime_test(5, 5, CycInt(5)), UsageError);
}

TEST_CASE("singular profile, q = 1 mod p: p = 5, q = 11") {
    const CycInt alpha = parse_cyc(5, "0,0,0,2,1");
    CHECK(norm(alpha) == 11);
    const CycInt A = pow(alpha, 5);
    const auto gp = GaussSumParams::make(5, 11, 6, 2);
    const BiCycInt g = gauss_sum_explicit(gp);
    const CheckReport r = singular_padic_profile(A, 11, 2, &g);
    CHECK(r.status == Status::pass);
    CHECK(r.witnesses["val_plus_1"] == 9);
    CHECK(r.witnesses["case"] == "exactly 2p-1");
    CHECK(r.witnesses["stickelberger_identity"]["conjugate_t"] == 1);
    CHECK(r.witnesses["stickelberger_identity"]["zeta_power"] == 0);
}

TEST_CASE("singular profile, q != 1 mod p and rational A") {
    const CycInt alpha = parse_cyc(5, "4,0,-1,-1");
    CHECK(norm(alpha) == 361);
    const CycInt A = pow(alpha, 5);
    CheckReport r = singular_padic_profile(A, 19);
    CHECK(r.status == Status::pass);
    CHECK(r.witnesses["val_plus_1"] == 12);
    CHECK(singular_padic_profile(A, 0).status == Status::pass);
    // The same A claimed to come from a split prime is inconsistent.
    r = singular_padic_profile(pow(parse_cyc(5, "0,0,0,2,1"), 5), 19);
    CHECK(r.status == Status::fail);
}

TEST_CASE("parse_cyc") {
    CHECK(parse_cyc(5, "1,2") == CycInt(5, {1, 2, 0, 0}));
    CHECK(parse_cyc(5, "0,0,0,0,1") == CycInt(5, {-1, -1, -1, -1}));
    CHECK_THROWS_AS(parse_cyc(5, "1,2,3,4,5,6"), UsageError);
    CHECK_THROWS_AS(parse_cyc(5, "1,x"), UsageError);
}
