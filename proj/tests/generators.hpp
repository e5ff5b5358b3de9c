#pragma once

// Seeded random elements for the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "stickel/cyclo_ring.hpp"

namespace testgen {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    stickel::CycInt cyc(int p, long bound = 20) {
        std::vector<mpz_class> c(static_cast<std::size_t>(p - 1));
        for (auto& x : c) x = integer(-bound, bound);
        return stickel::CycInt(p, c);
    }

    stickel::CycInt nonzero_cyc(int p, long bound = 20) {
        for (;;) {
            auto a = cyc(p, bound);
            if (!a.is_zero()) return a;
        }
    }

    /// lambda^k times a random unit-ish factor, so high valuations show up.
    stickel::CycInt with_valuation_bias(int p) {
        const auto k = static_cast<std::uint64_t>(integer(0, 2 * p));
        return pow(stickel::CycInt::lambda(p), k) * nonzero_cyc(p, 6);
    }

    stickel::BiCycInt bicyc(int p, int q, long bound = 5) {
        std::vector<mpz_class> grid(static_cast<std::size_t>(p) * static_cast<std::size_t>(q));
        for (auto& x : grid) x = integer(-bound, bound);
        return stickel::BiCycInt::from_redundant(p, q, grid);
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace testgen
