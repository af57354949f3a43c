#pragma once

#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zagier/binomial.hpp"
#include "zagier/ratpoly.hpp"
#include "zagier/rational.hpp"
#include "zagier/series.hpp"
#include "zagier/verify.hpp"

namespace zagier {

/// Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}), by the recurrence
/// B_{n,k} = sum_j C(n-1, j-1) x_j B_{n-j,k-1} with B_{0,0} = 1.
inline Rational bell_partial(unsigned n, unsigned k, std::span<const Rational> args) {
    if (k < 1 || k > n) throw std::invalid_argument("bell_partial: 1 <= k <= n required");
    if (args.size() != n - k + 1)
        throw std::invalid_argument("bell_partial: args length must be n - k + 1");
    // table[m][q] = B_{m,q}; only q <= k and m <= n are needed
    std::vector<std::vector<Rational>> table(n + 1, std::vector<Rational>(k + 1));
    table[0][0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        BinomialRow row(m - 1);
        for (unsigned q = 1; q <= k && q <= m; ++q) {
            Rational acc(0);
            for (unsigned j = 1; j <= m - q + 1 && j <= args.size(); ++j)
                acc += Rational(row[j - 1]) * args[j - 1] * table[m - j][q - 1];
            table[m][q] = acc;
        }
    }
    return table[n][k];
}

/// B_{m,q}(1!, 2!, 3!, ...) = C(m-1, q-1) m!/q!, with the degenerate cases
/// B_{0,0} = 1 and B_{m,0} = 0 (m > 0) made explicit.
inline Integer bell_factorial_value(long m, long q) {
    if (q == 0) return Integer(m == 0 ? 1 : 0);
    if (q < 0 || q > m) return Integer(0);
    return binomial(static_cast<unsigned long>(m - 1), q - 1) *
           factorial(static_cast<unsigned long>(m)) / factorial(static_cast<unsigned long>(q));
}

/// Closed form of B_{n,k}(h'(z), h''(z), ...) for h(z) = z + 1/z:
///   (-1)^n n!/z^{n+k} sum_{l=0}^{k} (1/l!) c(n-k-1, k-l-1) (1-z^2)^l/(k-l)!
/// where c is the binomial carrying the Bell boundary convention
/// (the l = k term survives exactly when n = k, matching B_{0,0} = 1).
inline Rational bell_der_closed(unsigned n, unsigned k, const Rational& z) {
    if (z.is_zero()) throw std::invalid_argument("bell_der_closed: z != 0 required");
    if (k < 1 || k > n) throw std::invalid_argument("bell_der_closed: 1 <= k <= n required");
    Rational one_minus_z2 = Rational(1) - z * z;
    Rational sum(0);
    Rational pow(1); // (1 - z^2)^l
    for (unsigned l = 0; l <= k; ++l) {
        Integer inner = bell_factorial_value(static_cast<long>(n) - static_cast<long>(k),
                                             static_cast<long>(k) - static_cast<long>(l));
        if (inner != 0) {
            // reconstruct C(n-k-1, k-l-1)/(k-l)! from B_{n-k,k-l}(j!) = C(..) (n-k)!/(k-l)!
            Rational coeff =
                Rational(inner, factorial(n - k)) / Rational(factorial(l));
            sum += coeff * pow;
        }
        pow = pow * one_minus_z2;
    }
    Rational zpow(1);
    for (unsigned i = 0; i < n + k; ++i) zpow = zpow * z;
    Rational result = Rational(factorial(n)) * sum / zpow;
    return n % 2 == 0 ? result : -result;
}

/// Derivatives of h(z) = z + 1/z at a rational point: h'(z) = 1 - z^{-2},
/// h^{(i)}(z) = (-1)^i i! z^{-i-1} for i >= 2.
inline std::vector<Rational> h_derivatives(const Rational& z, unsigned count) {
    if (z.is_zero()) throw std::invalid_argument("h_derivatives: z != 0 required");
    std::vector<Rational> d(count);
    Rational zinv = Rational(1) / z;
    Rational zpow = zinv * zinv; // z^{-i-1}
    if (count >= 1) d[0] = Rational(1) - zpow;
    for (unsigned i = 2; i <= count; ++i) {
        zpow = zpow * zinv;
        d[i - 1] = Rational(factorial(i)) * zpow;
        if (i % 2 == 1) d[i - 1] = -d[i - 1];
    }
    return d;
}

/// bell_partial on h-derivatives against the closed form, at one point.
inline bool bell_der_check(unsigned n, unsigned k, const Rational& z) {
    if (z.is_zero()) throw std::invalid_argument("bell_der_check: z != 0 required");
    auto args = h_derivatives(z, n - k + 1);
    return bell_partial(n, k, args) == bell_der_closed(n, k, z);
}

/// B_{n,k}(h'(z), ...) as an exact Laurent polynomial in z, supported on
/// exponents [-(n+k), k-n]. This is the production factor of the
/// constant-term pipeline.
inline LaurentSeries bell_h_factor(unsigned n, unsigned k) {
    if (k < 1 || k > n) throw std::invalid_argument("bell_h_factor: 1 <= k <= n required");
    const RatPoly one_minus_z2 = RatPoly::from_coeffs({Rational(1), Rational(0), Rational(-1)});
    RatPoly sum;
    RatPoly pow(1);
    for (unsigned l = 0; l <= k; ++l) {
        Integer inner = bell_factorial_value(static_cast<long>(n) - static_cast<long>(k),
                                             static_cast<long>(k) - static_cast<long>(l));
        if (inner != 0)
            sum += (Rational(inner, factorial(n - k)) / Rational(factorial(l))) * pow;
        pow = pow * one_minus_z2;
    }
    Rational lead = Rational(factorial(n));
    if (n % 2 == 1) lead = -lead;
    RatPoly scaled = lead * sum;
    std::vector<Rational> coeffs(static_cast<size_t>(scaled.degree()) + 1);
    for (long i = 0; i <= scaled.degree(); ++i) coeffs[static_cast<size_t>(i)] = scaled.coeff(i);
    return LaurentSeries::laurent_poly(-static_cast<int>(n + k), std::move(coeffs));
}

/// Homogeneity, reduction and factorial-argument identities for the partial
/// Bell polynomials, sampled at random rational arguments.
inline VerifyReport bell_identity_checks(unsigned n_max, unsigned points = 20,
                                         std::uint64_t seed = 0x5eed) {
    if (n_max < 3) throw std::invalid_argument("bell_identity_checks: n_max >= 3 required");
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "bell-identities";
    rep.range = "n<=" + std::to_string(n_max) + ", " + std::to_string(points) + " samples";
    std::mt19937_64 rng(seed);
    auto rand_rational = [&rng](bool nonzero) {
        std::uniform_int_distribution<long> num(-9, 9);
        std::uniform_int_distribution<long> den(1, 9);
        Rational r;
        do {
            r = Rational(num(rng), den(rng));
        } while (nonzero && r.is_zero());
        return r;
    };

    for (unsigned sample = 0; sample < points; ++sample) {
        std::uniform_int_distribution<unsigned> pick_n(3, n_max);
        unsigned n = pick_n(rng);
        std::uniform_int_distribution<unsigned> pick_k(1, n);
        unsigned k = pick_k(rng);
        std::vector<Rational> x(n - k + 1);
        for (auto& xi : x) xi = rand_rational(false);
        Rational s = rand_rational(true), t = rand_rational(true);

        // homogeneity: B_{n,k}(x_1, s t^2 x_2, ...) = s^k t^n B_{n,k}(x_1/(st), x_2, ...)
        std::vector<Rational> lhs_args(x), rhs_args(x);
        Rational st_pow = s * t;
        for (size_t j = 1; j < x.size(); ++j) {
            st_pow = st_pow * t;
            lhs_args[j] = st_pow * x[j];
        }
        rhs_args[0] = x[0] / (s * t);
        Rational scale(1);
        for (unsigned i = 0; i < k; ++i) scale = scale * s;
        for (unsigned i = 0; i < n; ++i) scale = scale * t;
        bool hom = bell_partial(n, k, lhs_args) == scale * bell_partial(n, k, rhs_args);
        rep.record("homogeneity identity", hom,
                   "n=" + std::to_string(n) + " k=" + std::to_string(k) + " s=" + s.str() +
                       " t=" + t.str());

        // reduction: B_{n,k}(x) = n!/(n-k)! sum_l x_1^l/l! B_{n-k,k-l}(x_2/2, x_3/3, ...)
        Rational red(0);
        Rational x1pow(1);
        for (unsigned l = 0; l <= k; ++l) {
            unsigned q = k - l;
            Rational inner;
            if (q == 0)
                inner = Rational(n == k ? 1 : 0);
            else if (q <= n - k) {
                std::vector<Rational> inner_args(n - k - q + 1);
                for (size_t j = 0; j < inner_args.size(); ++j)
                    inner_args[j] = x[j + 1] / Rational(static_cast<long>(j) + 2);
                inner = bell_partial(n - k, q, inner_args);
            }
            red += x1pow / Rational(factorial(l)) * inner;
            x1pow = x1pow * x[0];
        }
        red = Rational(factorial(n), factorial(n - k)) * red;
        rep.record("reduction identity", bell_partial(n, k, x) == red,
                   "n=" + std::to_string(n) + " k=" + std::to_string(k));

        // factorial arguments: B_{n,k}(1!,2!,...) = C(n-1,k-1) n!/k!
        std::vector<Rational> fact_args(n - k + 1);
        for (size_t j = 0; j < fact_args.size(); ++j)
            fact_args[j] = Rational(factorial(static_cast<unsigned long>(j) + 1));
        rep.record("factorial-argument identity",
                   bell_partial(n, k, fact_args) == Rational(bell_factorial_value(n, k)),
                   "n=" + std::to_string(n) + " k=" + std::to_string(k));

        // closed form for h-derivative arguments at a random nonzero point
        Rational z = rand_rational(true);
        rep.record("h-derivative closed form", bell_der_check(n, k, z),
                   "n=" + std::to_string(n) + " k=" + std::to_string(k) + " z=" + z.str());
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

} // namespace zagier
