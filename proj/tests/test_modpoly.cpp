#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "stickel/modpoly.hpp"

using namespace stickel;

namespace {

ModPoly from_roots(const mpz_class& n, const std::vector<mpz_class>& rs) {
    ModPoly f = ModPoly::constant(n, 1);
    for (const auto& r : rs) f = f * ModPoly(n, {-r, 1});
    return f;
}

}  // namespace

TEST_CASE("division identity and gcd") {
    testgen::Gen gen(700);
    const mpz_class n = 101;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<mpz_class> a(8), b(4);
        for (auto& c : a) c = gen.integer(0, 100);
        for (auto& c : b) c = gen.integer(0, 100);
        b.back() = 1;
        const ModPoly A(n, a), B(n, b);
        const auto [q, r] = divmod(A, B);
        CHECK(q * B + r == A);
        CHECK(r.degree() < B.degree());
        const ModPoly C(n, {3, 1});
        CHECK((gcd(A * C, B * C) % C).is_zero());
    }
}

TEST_CASE("roots agree with brute force for small moduli") {
    testgen::Gen gen(701);
    for (long n : {7L, 31L, 97L}) {
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<mpz_class> c(6);
            for (auto& x : c) x = gen.integer(0, n - 1);
            c.back() = 1;
            const ModPoly f(n, c);
            std::vector<mpz_class> brute;
            for (long x = 0; x < n; ++x) {
                if (f.eval(x) == 0) brute.emplace_back(x);
            }
            CHECK(roots(f) == brute);
        }
    }
}

TEST_CASE("roots over a large prime field") {
    const mpz_class n("5123189985484229035947419");
    std::vector<mpz_class> rs{mpz_class(0), mpz_class(17), mpz_class("4425059047731884603384640"), n - 1};
    std::sort(rs.begin(), rs.end());
    // Times X^2 - 3, which may or may not split; its roots are checked by substitution.
    const ModPoly f = from_roots(n, rs) * ModPoly(n, {-3, 0, 1});
    const auto found = roots(f);
    for (const auto& r : rs) CHECK(std::find(found.begin(), found.end(), r) != found.end());
    for (const auto& r : found) CHECK(f.eval(r) == 0);
    CHECK((found.size() == 4 || found.size() == 6));
}

TEST_CASE("powmod") {
    const mpz_class n = 13;
    const ModPoly m(n, {2, 0, 0, 1});
    const ModPoly x = ModPoly::x_power(n, 1);
    ModPoly acc = ModPoly::constant(n, 1);
    for (int e = 0; e < 40; ++e) {
        CHECK(powmod(x, e, m) == acc);
        acc = (acc * x) % m;
    }
}
