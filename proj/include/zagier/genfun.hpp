#pragma once

#include <cassert>
#include <stdexcept>
#include <string>

#include "zagier/bernoulli.hpp"
#include "zagier/series.hpp"
#include "zagier/verify.hpp"
#include "zagier/zagier.hpp"

namespace zagier {

/// Asymptotic expansion of V(z) = log z + psi(z + 1/z) as z -> 0:
///   V(z) = log(1 + z^2) - s/2 - sum_{k>=1} B_{2k}/(2k) s^{2k},  s = z/(1+z^2).
/// The divergent tail is cut at k = ceil(N/2): term k first contributes at
/// z^{2k}, so that many terms determine the coefficients through order N.
inline TruncSeries expand_V(int order) {
    if (order < 1) throw std::invalid_argument("expand_V: order >= 1 required");
    const RatPoly one_plus_z2 = RatPoly::from_coeffs({Rational(1), Rational(0), Rational(1)});
    TruncSeries s = ratfunc_expand(RatPoly::x(), one_plus_z2, order);
    TruncSeries acc = log1p(TruncSeries::monomial(1, 2, order)) - Rational(1, 2) * s;
    const int k_max = (order + 1) / 2;
    assert(2 * k_max >= order); // tail terms beyond k_max start above z^order
    TruncSeries s2 = s * s;
    TruncSeries pow = s2; // s^{2k}
    for (int k = 1; k <= k_max; ++k) {
        Rational coeff = bernoulli_number(2 * static_cast<unsigned>(k)) / Rational(2 * k);
        acc = acc - coeff * pow;
        if (k < k_max) pow = pow * s2;
    }
    return acc;
}

/// Generating function of the Zagier polynomials at a fixed argument x:
/// the log z parts of -(1/2)(log z + psi(z + 1/z - 1 - x)) cancel formally,
/// leaving, with Q(z) = 1 + (-1-x) z + z^2 and w^{-1} = z/Q(z),
///   -(1/2) log Q + (1/4) w^{-1} + (1/2) sum_k B_{2k}/(2k) w^{-2k}.
/// Coefficient n equals B*_n(x) for 1 <= n <= order.
inline TruncSeries expand_zagier_genfun(const Rational& x, int order) {
    if (order < 1) throw std::invalid_argument("expand_zagier_genfun: order >= 1 required");
    const Rational a = Rational(-1) - x;
    const RatPoly q = RatPoly::from_coeffs({Rational(1), a, Rational(1)});
    TruncSeries w_inv = ratfunc_expand(RatPoly::x(), q, order);
    TruncSeries u(order);
    if (order >= 1) u.at(1) = a;
    if (order >= 2) u.at(2) = 1;
    TruncSeries acc = Rational(-1, 2) * log1p(u) + Rational(1, 4) * w_inv;
    const int k_max = (order + 1) / 2;
    TruncSeries w2 = w_inv * w_inv;
    TruncSeries pow = w2; // w^{-2k}
    for (int k = 1; k <= k_max; ++k) {
        Rational coeff = bernoulli_number(2 * static_cast<unsigned>(k)) / Rational(4 * k);
        acc = acc + coeff * pow;
        if (k < k_max) pow = pow * w2;
    }
    return acc;
}

/// Even-index generating function: with the downward digamma iteration made
/// explicit, sum_{n>=1} B*_{2n} z^{2n} equals
///   -(1/2) V(z) - (z/4)/(z^2+1) + (z^2/2)/(1 + z^2 + z^4).
/// Checked coefficient-wise against the binomial-sum values B*_{2n} at even
/// exponents and 0 at odd exponents.
inline VerifyReport even_genfun_check(int order) {
    if (order < 2) throw std::invalid_argument("even_genfun_check: order >= 2 required");
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "even-genfun";
    rep.range = "order<=" + std::to_string(order);
    const RatPoly z2p1 = RatPoly::from_coeffs({Rational(1), Rational(0), Rational(1)});
    const RatPoly z4p = RatPoly::from_coeffs(
        {Rational(1), Rational(0), Rational(1), Rational(0), Rational(1)});
    TruncSeries rhs = Rational(-1, 2) * expand_V(order) -
                      Rational(1, 4) * ratfunc_expand(RatPoly::x(), z2p1, order) +
                      Rational(1, 2) * ratfunc_expand(RatPoly::monomial(1, 2), z4p, order);
    for (int n = 1; n <= order; ++n) {
        if (n % 2 == 0) {
            Rational expect = bstar(static_cast<unsigned>(n));
            rep.record("even coefficient equals B*_{2n}", rhs[n] == expect,
                       "n=" + std::to_string(n) + " got " + rhs[n].str() + " want " +
                           expect.str());
        } else {
            rep.record("odd coefficients vanish", rhs[n].is_zero(),
                       "n=" + std::to_string(n) + " got " + rhs[n].str());
        }
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

/// Reduction of 4n B*_n mod 8 against the four-term rational-function
/// combination, period-24 detection, and the even-part rational function
/// x(3 + x + 6x^2 + x^3 + 3x^4 + 4x^5)/(1 - x^6) for 8n B*_{2n} mod 8.
inline VerifyReport mod8_genfun_check(int order) {
    if (order < 48) throw std::invalid_argument("mod8_genfun_check: order >= 48 required");
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "mod8-genfun";
    rep.range = "order<=" + std::to_string(order);

    // exact side: stream[0] = 4, stream[n] = 4 n B*_n mod 8 (2-integral)
    std::vector<std::uint64_t> stream(static_cast<size_t>(order) + 1);
    stream[0] = 4;
    for (int n = 1; n <= order; ++n)
        stream[static_cast<size_t>(n)] =
            reduce_mod_2k(Rational(4 * n) * bstar(static_cast<unsigned>(n)), 3);

    ModSeries rhs = 2 * ModSeries::ratfunc({1}, {1, -1}, order, 3) -
                    ModSeries::ratfunc({0, 1, 1, 1, 1}, {1, -5, 10, -10, 5, -1}, order, 3) +
                    3 * ModSeries::ratfunc({2, -6, 5, -2}, {1, -4, 5, -4, 1}, order, 3) -
                    2 * ModSeries::ratfunc({2, -6, 7, -2}, {1, -4, 7, -4, 1}, order, 3);
    for (int n = 0; n <= order; ++n)
        rep.record("4n B*_n mod 8 equals rational-function coefficient",
                   stream[static_cast<size_t>(n)] == rhs[n],
                   "n=" + std::to_string(n) + " exact=" +
                       std::to_string(stream[static_cast<size_t>(n)]) + " rhs=" +
                       std::to_string(rhs[n]));

    auto period = detect_period(stream, 2);
    rep.record("mod-8 stream has period 24", period.has_value() && *period == 24,
               period ? "period=" + std::to_string(*period) : "no period");

    const int half = order / 2;
    ModSeries even = ModSeries::ratfunc({0, 3, 1, 6, 1, 3, 4}, {1, 0, 0, 0, 0, 0, -1}, half, 3);
    for (int n = 1; n <= half; ++n) {
        std::uint64_t exact =
            reduce_mod_2k(Rational(8 * n) * bstar(static_cast<unsigned>(2 * n)), 3);
        rep.record("8n B*_{2n} mod 8 equals even-part coefficient", exact == even[n],
                   "n=" + std::to_string(n) + " exact=" + std::to_string(exact) + " rhs=" +
                       std::to_string(even[n]));
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

/// The three binomial-sum generating functions with rational closed forms:
///   2 + sum_n x^n sum_k C(n+k,2k) 2n/(n+k)                EQ  (2-3x)/(1-3x+x^2)
///   2 + sum_n x^n sum_k C(n+2k,4k) 2n/(n+2k)              EQ  (1-2x)(2-2x+x^2)/((1-x+x^2)(1-3x+x^2))
///   2 + sum_n x^n sum_k (-1)^k C(n+2k,4k) 2n/(n+2k)       EQ  (2-6x+7x^2-2x^3)/(1-4x+7x^2-4x^3+x^4)
inline VerifyReport prop22_check(int order) {
    if (order < 4) throw std::invalid_argument("prop22_check: order >= 4 required");
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "cheb-genfun-closed-forms";
    rep.range = "order<=" + std::to_string(order);

    auto lhs1 = [](int n) {
        Rational s(0);
        for (int k = 0; k <= n; ++k)
            s += Rational(binomial(static_cast<unsigned long>(n + k), 2 * k) * Integer(2 * n),
                          Integer(n + k));
        return s;
    };
    auto lhs2 = [](int n, bool alternating) {
        Rational s(0);
        for (int k = 0; 2 * k <= n; ++k) {
            Rational term(binomial(static_cast<unsigned long>(n + 2 * k), 4 * k) * Integer(2 * n),
                          Integer(n + 2 * k));
            s += (alternating && k % 2 == 1) ? -term : term;
        }
        return s;
    };

    const RatPoly num1 = RatPoly::from_coeffs({Rational(2), Rational(-3)});
    const RatPoly den1 = RatPoly::from_coeffs({Rational(1), Rational(-3), Rational(1)});
    const RatPoly num2 =
        RatPoly::from_coeffs({Rational(1), Rational(-2)}) *
        RatPoly::from_coeffs({Rational(2), Rational(-2), Rational(1)});
    const RatPoly den2 =
        RatPoly::from_coeffs({Rational(1), Rational(-1), Rational(1)}) *
        RatPoly::from_coeffs({Rational(1), Rational(-3), Rational(1)});
    const RatPoly num3 =
        RatPoly::from_coeffs({Rational(2), Rational(-6), Rational(7), Rational(-2)});
    const RatPoly den3 = RatPoly::from_coeffs(
        {Rational(1), Rational(-4), Rational(7), Rational(-4), Rational(1)});

    TruncSeries r1 = ratfunc_expand(num1, den1, order);
    TruncSeries r2 = ratfunc_expand(num2, den2, order);
    TruncSeries r3 = ratfunc_expand(num3, den3, order);

    rep.record("identity 1 constant term", r1[0] == Rational(2), "got " + r1[0].str());
    rep.record("identity 2 constant term", r2[0] == Rational(2), "got " + r2[0].str());
    rep.record("identity 3 constant term", r3[0] == Rational(2), "got " + r3[0].str());
    for (int n = 1; n <= order; ++n) {
        rep.record("identity 1 coefficients", lhs1(n) == r1[n],
                   "n=" + std::to_string(n) + " lhs=" + lhs1(n).str() + " rhs=" + r1[n].str());
        rep.record("identity 2 coefficients", lhs2(n, false) == r2[n],
                   "n=" + std::to_string(n) + " lhs=" + lhs2(n, false).str() + " rhs=" +
                       r2[n].str());
        rep.record("identity 3 coefficients", lhs2(n, true) == r3[n],
                   "n=" + std::to_string(n) + " lhs=" + lhs2(n, true).str() + " rhs=" +
                       r3[n].str());
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

} // namespace zagier
