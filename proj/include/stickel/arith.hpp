#pragma once

// Small-integer number theory shared by every module: modular powers,
// primitive roots, orders, p-adic valuations of integers.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace stickel {

/// Raised when a caller violates an operation's precondition.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an internal invariant breaks (a bug, never bad input).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Residue of a in [0, n).
inline std::int64_t mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t n);
std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t n);
std::int64_t invmod(std::int64_t a, std::int64_t n);
std::int64_t gcd(std::int64_t a, std::int64_t b);

bool is_prime(std::int64_t n);
bool is_prime(const mpz_class& n);

/// Distinct prime factors by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi);

/// Multiplicative order of a modulo n; a must be a unit.
std::int64_t multiplicative_order(std::int64_t a, std::int64_t n);

bool is_primitive_root(std::int64_t g, std::int64_t p);
std::int64_t smallest_primitive_root(std::int64_t p);

/// Lifted residue of v^e mod p in 1..p-1; e may be negative.
std::int64_t lifted_power(std::int64_t v, std::int64_t e, std::int64_t p);

/// Discrete log table of a primitive root g modulo prime p: ind[x] for x in 1..p-1.
std::vector<std::int64_t> index_table(std::int64_t g, std::int64_t p);

/// Exponent of p in x (x != 0).
std::int64_t valuation(const mpz_class& x, std::int64_t p);

mpz_class binomial(std::int64_t n, std::int64_t k);

std::string to_decimal(const mpz_class& x);

}  // namespace stickel
