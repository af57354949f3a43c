#pragma once

#include <stdexcept>
#include <vector>

#include "zagier/rational.hpp"

namespace zagier {

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
inline Integer binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Generalized binomial C(a, b) with integer (possibly negative) upper index:
/// a(a-1)...(a-b+1)/b! for b >= 0, zero for b < 0.
inline Integer binom_gen(long a, long b) {
    if (b < 0) return Integer(0);
    if (b == 0) return Integer(1);
    Integer num(1);
    for (long t = 0; t < b; ++t) num *= Integer(a - t);
    Integer r = num / factorial(static_cast<unsigned long>(b));
    return r;
}

/// One memoized row C(n, 0..n), for sweeps that revisit a row many times.
class BinomialRow {
public:
    explicit BinomialRow(unsigned long n) : row_(n + 1) {
        row_[0] = 1;
        for (unsigned long k = 0; k < n; ++k)
            row_[k + 1] = row_[k] * Integer(n - k) / Integer(k + 1);
    }
    const Integer& operator[](unsigned long k) const { return row_.at(k); }
    Integer at(long k) const {
        if (k < 0 || static_cast<unsigned long>(k) >= row_.size()) return Integer(0);
        return row_[static_cast<unsigned long>(k)];
    }

private:
    std::vector<Integer> row_;
};

} // namespace zagier
