#include <doctest.h>

#include "stickel/arith.hpp"
#include "stickel/finite_field.hpp"

using namespace stickel;

TEST_CASE("smallest primitive polynomial generates the whole group") {
    for (auto [q, f] : std::vector<std::pair<std::int64_t, int>>{{3, 2}, {5, 3}, {7, 2}, {11, 3}, {3, 5}}) {
        const FiniteField F = FiniteField::smallest_primitive(q, f);
        const unsigned long N = F.group_order().get_ui();
        FiniteField::Elem y = F.one();
        for (unsigned long k = 1; k < N; ++k) {
            F.mul_x_inplace(y);
            REQUIRE(y != F.one());
        }
        F.mul_x_inplace(y);
        CHECK(y == F.one());
    }
}

TEST_CASE("field ordering picks the first candidate") {
    // X^2 + X + 2 is the first primitive quadratic over F_3 in the g0 + 3 g1 order.
    CHECK(FiniteField::smallest_primitive(3, 2).describe() == "X^2+X+2 over F_3");
    CHECK_THROWS_AS(FiniteField(3, 2, {1, 0}), UsageError);  // X^2+1 is not primitive
}

TEST_CASE("trace is additive, Frobenius invariant and onto") {
    const FiniteField F = FiniteField::smallest_primitive(5, 3);
    FiniteField::Elem y = F.one();
    std::vector<int> hits(5, 0);
    for (int k = 0; k < 124; ++k) {
        const auto yq = F.pow(y, mpz_class(5));
        CHECK(F.trace(yq) == F.trace(y));
        hits[static_cast<std::size_t>(F.trace(y))] += 1;
        F.mul_x_inplace(y);
    }
    CHECK(hits[0] == 24);
    for (int t = 1; t < 5; ++t) CHECK(hits[static_cast<std::size_t>(t)] == 25);
}

TEST_CASE("group order primes") {
    CHECK(group_order_primes(3, 4) == std::vector<mpz_class>{2, 5});
    CHECK(group_order_primes(7, 3) == std::vector<mpz_class>{2, 3, 19});
}

TEST_CASE("null space over F_q") {
    const auto basis = null_space_mod({{1, 2, 3}}, 3, 7);
    CHECK(basis.size() == 2);
    for (const auto& b : basis) CHECK(mod(b[0] + 2 * b[1] + 3 * b[2], 7) == 0);
}
