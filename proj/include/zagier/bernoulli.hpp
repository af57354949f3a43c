#pragma once

#include <mutex>
#include <vector>

#include "zagier/binomial.hpp"
#include "zagier/ratpoly.hpp"
#include "zagier/rational.hpp"

namespace zagier {

/// Bernoulli number B_n (B_1 = -1/2), by the defining recurrence
/// sum_{k=0}^{n} C(n+1, k) B_k = [n = 0]. The table is process-wide and
/// grows on demand; insertion is serialized behind a mutex.
inline Rational bernoulli_number(unsigned n) {
    static std::vector<Rational> table{Rational(1)};
    static std::mutex mu;
    std::scoped_lock lk(mu);
    while (table.size() <= n) {
        unsigned long m = table.size();
        if (m > 1 && m % 2 == 1) {
            table.emplace_back(0);
            continue;
        }
        Rational sum(0);
        Integer c(1); // running C(m+1, k)
        for (unsigned long k = 0; k < m; ++k) {
            if (!(k > 1 && k % 2 == 1)) sum += Rational(c) * table[k];
            c = c * Integer(m + 1 - k) / Integer(k + 1);
        }
        table.push_back(-sum / Rational(static_cast<long>(m) + 1));
    }
    return table[n];
}

/// Bernoulli polynomial B_n(x) = sum_k C(n,k) B_{n-k} x^k; monic of degree n.
inline RatPoly bernoulli_poly(unsigned n) {
    static std::vector<RatPoly> table;
    static std::mutex mu;
    std::scoped_lock lk(mu);
    while (table.size() <= n) {
        unsigned long m = table.size();
        std::vector<Rational> c(m + 1);
        BinomialRow row(m);
        for (unsigned long k = 0; k <= m; ++k)
            c[k] = Rational(row[k]) * bernoulli_number(static_cast<unsigned>(m - k));
        table.push_back(RatPoly::from_coeffs(std::move(c)));
    }
    return table[n];
}

} // namespace zagier
