#pragma once

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "zagier/bernoulli.hpp"
#include "zagier/chebyshev.hpp"
#include "zagier/primes.hpp"
#include "zagier/ratpoly.hpp"
#include "zagier/rational.hpp"
#include "zagier/series.hpp"
#include "zagier/verify.hpp"

namespace zagier {

/// Modified Bernoulli number B*_n = sum_{r=0}^{n} C(n+r,2r) B_r/(n+r).
/// B*_0 is undefined. Values are memoized (sweeps revisit dense prefixes).
inline Rational bstar(unsigned n) {
    if (n == 0) throw std::invalid_argument("bstar: B*_0 undefined");
    static std::vector<Rational> table{Rational(0)}; // slot 0 unused
    static std::mutex mu;
    std::scoped_lock lk(mu);
    while (table.size() <= n) {
        unsigned long m = table.size();
        Rational sum(0);
        for (unsigned long r = 0; r <= m; ++r)
            sum += Rational(binomial(m + r, static_cast<long>(2 * r)), Integer(m + r)) *
                   bernoulli_number(static_cast<unsigned>(r));
        table.push_back(sum);
    }
    return table[n];
}

/// Zagier polynomial B*_n(x) = sum_{r=0}^{n} C(n+r,2r) B_r(x)/(n+r), a
/// degree-n polynomial with B*_n(0) = B*_n.
inline RatPoly bstar_poly(unsigned n) {
    if (n == 0) throw std::invalid_argument("bstar_poly: n >= 1 required");
    static std::vector<RatPoly> table{RatPoly()}; // slot 0 unused
    static std::mutex mu;
    std::scoped_lock lk(mu);
    while (table.size() <= n) {
        unsigned long m = table.size();
        RatPoly sum;
        for (unsigned long r = 0; r <= m; ++r)
            sum += Rational(binomial(m + r, static_cast<long>(2 * r)), Integer(m + r)) *
                   bernoulli_poly(static_cast<unsigned>(r));
        table.push_back(sum);
    }
    return table[n];
}

/// alpha_n = denom(B*_n).
inline Integer alpha(unsigned n) { return denom(bstar(n)); }

/// alpha_{n,j} = denom(B*_n(j)); independent of the integer j.
inline Integer alpha_at(unsigned n, const Integer& j) {
    return denom(bstar_poly(n).eval(Rational(j)));
}

/// Umbral evaluation of B*_n(x) = eval (1/n) T_n((X + x + 2)/2): expand the
/// Chebyshev polynomial in the formal variable X, then substitute
/// X^k -> B_k.
inline Rational umbral_bstar(unsigned n, const Rational& x) {
    if (n == 0) throw std::invalid_argument("umbral_bstar: n >= 1 required");
    RatPoly lin = RatPoly::from_coeffs({(x + Rational(2)) / Rational(2), Rational(1, 2)});
    RatPoly expanded = chebyshev_T(n).compose(lin);
    Rational val(0);
    for (long k = 0; k <= expanded.degree(); ++k)
        val += expanded.coeff(k) * bernoulli_number(static_cast<unsigned>(k));
    return val / Rational(static_cast<long>(n));
}

/// 2n B*_n + sum_{(p-1)|n} 1/p - sum_{(p+1)|n} 1/p is an integer (even n).
inline bool zagier_congruence_check(unsigned n) {
    if (n == 0 || n % 2 != 0)
        throw std::invalid_argument("zagier_congruence_check: n must be even, >= 2");
    Rational s = Rational(2 * static_cast<long>(n)) * bstar(n);
    for (unsigned long p : primes_upto(n + 1)) {
        if (n % (p - 1) == 0) s += Rational(1, static_cast<long>(p));
        if (n % (p + 1) == 0) s -= Rational(1, static_cast<long>(p));
    }
    return s.is_integer();
}

/// nu_2(alpha_n) = -nu_2(B*_n) = 2 + nu_2(n) - {1 if n == 6 mod 12,
/// 2 if n == 0 mod 12, 0 otherwise}; in particular 4 | alpha_n.
inline VerifyReport nu2_theorem_check(unsigned n_max) {
    if (n_max < 1) throw std::invalid_argument("nu2_theorem_check: n_max >= 1 required");
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "nu2-theorem";
    rep.range = "n<=" + std::to_string(n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
        long correction = n % 12 == 6 ? 1 : (n % 12 == 0 ? 2 : 0);
        long expected = 2 + nu_p(Rational(static_cast<long>(n)), 2).value - correction;
        Valuation got = nu2(bstar(n));
        rep.record("-nu_2(B*_n) matches the mod-12 closed form",
                   !got.infinite && -got.value == expected,
                   "n=" + std::to_string(n) + " -nu2=" + std::to_string(-got.value) +
                       " want " + std::to_string(expected));
        rep.record("alpha_n divisible by 4", alpha(n) % 4 == 0,
                   "n=" + std::to_string(n) + " alpha=" + alpha(n).get_str());
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

/// nu_2(8n B*_{2n}) realizes the 6-periodic pattern {0,0,1,0,0,2}.
inline VerifyReport nu2_8n_period_check(unsigned n_max) {
    if (n_max < 12) throw std::invalid_argument("nu2_8n_period_check: n_max >= 12 required");
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "nu2-period6";
    rep.range = "n<=" + std::to_string(n_max);
    static const long pattern[6] = {0, 0, 1, 0, 0, 2};
    std::vector<long> stream;
    for (unsigned n = 1; n <= n_max; ++n) {
        Valuation v = nu2(Rational(8 * static_cast<long>(n)) * bstar(2 * n));
        rep.record("nu_2(8n B*_{2n}) follows pattern {0,0,1,0,0,2}",
                   !v.infinite && v.value == pattern[(n - 1) % 6],
                   "n=" + std::to_string(n) + " nu2=" + v.str());
        stream.push_back(v.value);
    }
    auto period = detect_period(stream, 2);
    rep.record("pattern has smallest period 6", period.has_value() && *period == 6,
               period ? "period=" + std::to_string(*period) : "no period");
    rep.elapsed_ms = sw.ms();
    return rep;
}

/// Translation identity B*_n(x+1) = B*_n(x) + (1/2) U_{n-1}(x/2 + 1).
inline VerifyReport translation_check(unsigned n_max) {
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "translation";
    rep.range = "n<=" + std::to_string(n_max);
    const RatPoly xp1 = RatPoly::from_coeffs({Rational(1), Rational(1)});
    const RatPoly half_shift = RatPoly::from_coeffs({Rational(1), Rational(1, 2)});
    for (unsigned n = 1; n <= n_max; ++n) {
        RatPoly lhs = bstar_poly(n).compose(xp1) - bstar_poly(n);
        RatPoly rhs =
            Rational(1, 2) * chebyshev_U(static_cast<long>(n) - 1).compose(half_shift);
        rep.record("B*_n(x+1) - B*_n(x) = U_{n-1}(x/2+1)/2", lhs == rhs,
                   "n=" + std::to_string(n));
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

/// Reflection symmetry B*_n(-x-3) = (-1)^n B*_n(x).
inline VerifyReport reflection_check(unsigned n_max) {
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "reflection";
    rep.range = "n<=" + std::to_string(n_max);
    const RatPoly refl = RatPoly::from_coeffs({Rational(-3), Rational(-1)});
    for (unsigned n = 1; n <= n_max; ++n) {
        RatPoly lhs = bstar_poly(n).compose(refl);
        RatPoly rhs = n % 2 == 0 ? bstar_poly(n) : -bstar_poly(n);
        rep.record("B*_n(-x-3) = (-1)^n B*_n(x)", lhs == rhs, "n=" + std::to_string(n));
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

/// Odd-index suite: 4 B*_m(j) is an odd integer on the window, the closed
/// form B*_{2t+1}(0) = (-1)^t/4 + U_{2t}(1/2)/2, and the 6-periodicity of the
/// odd subsequence (B*_{m+12} = B*_m).
inline VerifyReport odd_index_suite(unsigned n_max, long j_lo = -6, long j_hi = 6) {
    if (n_max < 7) throw std::invalid_argument("odd_index_suite: n_max >= 7 required");
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "odd-index";
    rep.range = "odd m<=" + std::to_string(n_max) + ", j in [" + std::to_string(j_lo) + "," +
                std::to_string(j_hi) + "]";
    for (unsigned m = 1; m <= n_max; m += 2) {
        RatPoly poly = bstar_poly(m);
        for (long j = j_lo; j <= j_hi; ++j) {
            Rational q = Rational(4) * poly.eval(Rational(j));
            bool odd_int = q.is_integer() && mpz_odd_p(q.numerator().get_mpz_t()) != 0;
            rep.record("4 B*_m(j) is an odd integer", odd_int,
                       "m=" + std::to_string(m) + " j=" + std::to_string(j) + " 4B*=" + q.str());
        }
        unsigned t = (m - 1) / 2;
        Rational closed = Rational(t % 2 == 0 ? 1 : -1, 4) +
                          Rational(1, 2) * chebyshev_U(2 * static_cast<long>(t)).eval(Rational(1, 2));
        rep.record("B*_{2t+1}(0) closed form", bstar(m) == closed,
                   "m=" + std::to_string(m) + " got " + bstar(m).str() + " want " + closed.str());
        rep.record("odd subsequence is 6-periodic (B*_{m+12} = B*_m)", bstar(m + 12) == bstar(m),
                   "m=" + std::to_string(m));
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

/// Alternating-sum identity
/// sum_{r=0}^{n} (-1)^{n+r} C(n+r,2r) B_{2r}(x)/(n+r) = 2 B*_{2n}(x-2).
inline VerifyReport bstar59_check(unsigned n_max) {
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "even-shift-identity";
    rep.range = "n<=" + std::to_string(n_max);
    const RatPoly xm2 = RatPoly::from_coeffs({Rational(-2), Rational(1)});
    for (unsigned n = 1; n <= n_max; ++n) {
        RatPoly lhs;
        for (unsigned r = 0; r <= n; ++r) {
            Rational c(binomial(n + r, static_cast<long>(2 * r)), Integer(n + r));
            if ((n + r) % 2 == 1) c = -c;
            lhs += c * bernoulli_poly(2 * r);
        }
        RatPoly rhs = Rational(2) * bstar_poly(2 * n).compose(xm2);
        rep.record("alternating even-index sum equals 2 B*_{2n}(x-2)", lhs == rhs,
                   "n=" + std::to_string(n));
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

/// For every prime p | alpha_n, (p-1) | n or (p+1) | n. Reported as a scan:
/// violations are listed, none are expected.
inline VerifyReport conjecture_scan(unsigned n_max) {
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "denominator-prime-scan";
    rep.range = "n<=" + std::to_string(n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
        Integer cofactor;
        auto factors = factor_trial(alpha(n), n + 1, &cofactor);
        rep.record("all prime factors of alpha_n are <= n+1", cofactor == 1,
                   "n=" + std::to_string(n) + " cofactor=" + cofactor.get_str());
        for (const auto& [p, e] : factors) {
            bool ok = n % (p - 1) == 0 || n % (p + 1) == 0;
            rep.record("p | alpha_n implies (p-1)|n or (p+1)|n", ok,
                       "n=" + std::to_string(n) + " p=" + std::to_string(p));
        }
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

/// Denominator independence alpha_{n,j} = alpha_n over an integer window.
inline VerifyReport alpha_independence_check(unsigned n_max, long j_lo, long j_hi) {
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "alpha-independence";
    rep.range = "n<=" + std::to_string(n_max) + ", j in [" + std::to_string(j_lo) + "," +
                std::to_string(j_hi) + "]";
    for (unsigned n = 1; n <= n_max; ++n) {
        Integer a = alpha(n);
        for (long j = j_lo; j <= j_hi; ++j)
            rep.record("denom(B*_n(j)) = denom(B*_n)", alpha_at(n, Integer(j)) == a,
                       "n=" + std::to_string(n) + " j=" + std::to_string(j));
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

} // namespace zagier
