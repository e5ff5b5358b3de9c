#include <doctest.h>

#include "stickel/arith.hpp"

using namespace stickel;

TEST_CASE("modular helpers agree with naive loops") {
    for (std::int64_t n : {7, 13, 101}) {
        for (std::int64_t a = -20; a <= 20; ++a) {
            std::int64_t naive = 1;
            for (int e = 0; e < 9; ++e) {
                CHECK(powmod(a, e, n) == naive);
                naive = mod(naive * a, n);
            }
            if (mod(a, n) != 0) CHECK(mulmod(invmod(a, n), a, n) == 1);
        }
    }
    CHECK(powmod(3, -1, 7) == 5);
    CHECK_THROWS_AS(invmod(14, 7), UsageError);
}

TEST_CASE("primality and factoring") {
    CHECK(primes_between(1, 30) == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(is_prime(std::int64_t{1000000007}));
    CHECK_FALSE(is_prime(std::int64_t{561}));
    CHECK(is_prime(mpz_class("5123189985484229035947419")));
    CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
}

TEST_CASE("primitive roots and lifted powers") {
    CHECK(smallest_primitive_root(131) == 2);
    CHECK(smallest_primitive_root(137) == 3);
    CHECK(smallest_primitive_root(167) == 5);
    CHECK(multiplicative_order(2, 167) == 83);
    CHECK(lifted_power(2, -1, 5) == 3);
    CHECK(lifted_power(3, 0, 7) == 1);
    const auto ind = index_table(3, 7);
    for (std::int64_t k = 0; k < 6; ++k) CHECK(ind[static_cast<std::size_t>(powmod(3, k, 7))] == k);
}

TEST_CASE("integer valuations and binomials") {
    CHECK(valuation(mpz_class(250), 5) == 3);
    CHECK(valuation(mpz_class(-7), 7) == 1);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(4, 7) == 0);
}
