#include "stickel/arith.hpp"

#include <numeric>

namespace stickel {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t n) {
    return static_cast<std::int64_t>(
        (static_cast<__int128>(mod(a, n)) * mod(b, n)) % n);
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t n) {
    if (exp < 0) {
        return powmod(invmod(base, n), -exp, n);
    }
    std::int64_t result = 1 % n;
    std::int64_t b = mod(base, n);
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, b, n);
        b = mulmod(b, b, n);
        exp >>= 1;
    }
    return result;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t invmod(std::int64_t a, std::int64_t n) {
    std::int64_t old_r = mod(a, n), r = n;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) {
        throw UsageError("invmod: " + std::to_string(a) + " is not a unit modulo " +
                         std::to_string(n));
    }
    return mod(old_s, n);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) return n == small;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::int64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::int64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const mpz_class& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = std::max<std::int64_t>(lo, 2); n <= hi; ++n) {
        if (is_prime(n)) out.push_back(n);
    }
    return out;
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t n) {
    if (gcd(mod(a, n), n) != 1) {
        throw UsageError("multiplicative_order: argument not a unit");
    }
    // n is prime in every caller, so the group order is n-1.
    std::int64_t order = n - 1;
    for (std::uint64_t ell : prime_factors(static_cast<std::uint64_t>(n - 1))) {
        auto l = static_cast<std::int64_t>(ell);
        while (order % l == 0 && powmod(a, order / l, n) == 1) order /= l;
    }
    return order;
}

bool is_primitive_root(std::int64_t g, std::int64_t p) {
    if (mod(g, p) == 0) return false;
    return multiplicative_order(g, p) == p - 1;
}

std::int64_t smallest_primitive_root(std::int64_t p) {
    if (!is_prime(p)) throw UsageError("smallest_primitive_root: modulus not prime");
    for (std::int64_t g = 1; g < p; ++g) {
        if (is_primitive_root(g, p)) return g;
    }
    throw InternalError("no primitive root found");
}

std::int64_t lifted_power(std::int64_t v, std::int64_t e, std::int64_t p) {
    return powmod(v, mod(e, p - 1), p);
}

std::vector<std::int64_t> index_table(std::int64_t g, std::int64_t p) {
    std::vector<std::int64_t> ind(static_cast<std::size_t>(p), -1);
    std::int64_t x = 1;
    for (std::int64_t s = 0; s < p - 1; ++s) {
        ind[static_cast<std::size_t>(x)] = s;
        x = mulmod(x, g, p);
    }
    return ind;
}

std::int64_t valuation(const mpz_class& x, std::int64_t p) {
    if (x == 0) throw UsageError("valuation of zero");
    mpz_class t = x;
    std::int64_t v = 0;
    while (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p));
        ++v;
    }
    return v;
}

mpz_class binomial(std::int64_t n, std::int64_t k) {
    mpz_class r;
    if (k < 0 || k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::string to_decimal(const mpz_class& x) { return x.get_str(10); }

}  // namespace stickel
