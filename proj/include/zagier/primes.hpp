#pragma once

#include <utility>
#include <vector>

#include "zagier/rational.hpp"

namespace zagier {

inline std::vector<unsigned long> primes_upto(unsigned long n) {
    std::vector<bool> sieve(n + 1, true);
    std::vector<unsigned long> primes;
    for (unsigned long p = 2; p <= n; ++p) {
        if (!sieve[p]) continue;
        primes.push_back(p);
        for (unsigned long q = p * p; q <= n; q += p) sieve[q] = false;
    }
    return primes;
}

/// Trial division by primes <= bound. Returns (prime, multiplicity) pairs and
/// leaves any remaining cofactor > 1 in *cofactor.
inline std::vector<std::pair<unsigned long, unsigned>> factor_trial(Integer n, unsigned long bound,
                                                                    Integer* cofactor) {
    std::vector<std::pair<unsigned long, unsigned>> factors;
    for (unsigned long p : primes_upto(bound)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (cofactor) *cofactor = n;
    return factors;
}

} // namespace zagier
