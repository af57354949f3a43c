#pragma once

#include <random>

#include "zagier/rational.hpp"

namespace zagier::testutil {

/// Deterministic rational generator for property-style tests.
class RationalGen {
public:
    explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

    Rational next(long num_bound = 99, long den_bound = 99) {
        std::uniform_int_distribution<long> num(-num_bound, num_bound);
        std::uniform_int_distribution<long> den(1, den_bound);
        return Rational(num(rng_), den(rng_));
    }
    Rational next_nonzero(long num_bound = 99, long den_bound = 99) {
        Rational r;
        do {
            r = next(num_bound, den_bound);
        } while (r.is_zero());
        return r;
    }
    /// 2-integral rational (odd denominator).
    Rational next_2integral(long num_bound = 99) {
        std::uniform_int_distribution<long> num(-num_bound, num_bound);
        std::uniform_int_distribution<long> den(0, 49);
        return Rational(num(rng_), 2 * den(rng_) + 1);
    }
    long next_long(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(rng_);
    }

private:
    std::mt19937_64 rng_;
};

} // namespace zagier::testutil
