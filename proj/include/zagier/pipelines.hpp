#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "zagier/apoly.hpp"
#include "zagier/bell.hpp"
#include "zagier/bernoulli.hpp"
#include "zagier/binomial.hpp"
#include "zagier/series.hpp"
#include "zagier/verify.hpp"

namespace zagier {

/// I_k(z), the k-th derivative of psi(x) - log x composed with x = z + 1/z,
/// as a Bernoulli series in s = z/(z^2+1):
///   I_k = (-1)^{k-1} k! s^{k+1} (1/2 + sum_i B_{2i}/(k+2i) C(k+2i,k) s^{2i-1}).
/// Lowest nonzero exponent is k+1.
inline TruncSeries ik_series(unsigned k, int order) {
    if (k < 1) throw std::invalid_argument("ik_series: k >= 1 required");
    if (order < static_cast<int>(k) + 1)
        throw std::invalid_argument("ik_series: order >= k + 1 required");
    const RatPoly one_plus_z2 = RatPoly::from_coeffs({Rational(1), Rational(0), Rational(1)});
    TruncSeries s = ratfunc_expand(RatPoly::x(), one_plus_z2, order);
    TruncSeries s2 = s * s;
    TruncSeries pow = s; // s^{k+1}
    for (unsigned t = 1; t <= k; ++t) pow = pow * s;
    TruncSeries acc = Rational(1, 2) * pow;
    pow = pow * s; // s^{k+2i} for i = 1, then stepped by s^2
    for (unsigned i = 1; static_cast<int>(k + 2 * i) <= order; ++i) {
        Rational c = bernoulli_number(2 * i) *
                     Rational(binomial(k + 2 * i, static_cast<long>(k)), Integer(k + 2 * i));
        acc = acc + c * pow;
        pow = pow * s2;
    }
    Rational lead(factorial(k));
    if (k % 2 == 0) lead = -lead;
    return lead * acc;
}

/// Constant-term pipeline for even-index coefficients of V, through the
/// composition-derivative sum W^{(2n)} = sum_k I_k B_{2n,k}(h'(z), ...).
/// Every Laurent factor is carried to order 4n; the coefficients of z^i for
/// i < 0 must cancel exactly, and a nonzero one is a hard error.
inline Rational v_faa_di_bruno(unsigned m) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("v_faa_di_bruno: even m >= 2 required");
    const unsigned n = m / 2;
    const int order = 4 * static_cast<int>(n);
    LaurentSeries total(-2 * static_cast<int>(m), 0);
    bool first = true;
    for (unsigned k = 1; k <= m; ++k) {
        LaurentSeries term =
            bell_h_factor(m, k) * LaurentSeries::from_trunc(ik_series(k, order));
        total = first ? term : total + term;
        first = false;
    }
    if (!total.negative_part_vanishes())
        throw std::logic_error("v_faa_di_bruno: negative-power coefficient survives: " +
                               total.first_nonzero_negative());
    Rational v = total.constant_term() / Rational(factorial(m));
    Rational log_part(1, static_cast<long>(n));
    if (n % 2 == 0) log_part = -log_part; // (-1)^{n-1}/n
    return v + log_part;
}

namespace detail {

/// sigma^q for sigma = (z^2+1)/z, as an exact Laurent polynomial.
inline LaurentSeries sigma_power(unsigned q) {
    std::vector<Rational> c(2 * q + 1);
    for (unsigned i = 0; i <= q; ++i) c[2 * i] = Rational(binomial(q, static_cast<long>(i)));
    return LaurentSeries::laurent_poly(-static_cast<int>(q), std::move(c));
}

} // namespace detail

/// F^{(k)} evaluated along g(z) = z/(z^2+1), via the polygamma form
///   F^(k)(g) = (-1)^k k! sum_{r=1}^k C(k-1,r-1)/r! sigma^{k+r} psi_r(z+1/z)
///              + (-1)^{k-1}(k-1)! sigma^k,      sigma = (z^2+1)/z.
/// The negative powers cancel; a survivor is a truncation-order bug.
inline LaurentSeries hoppe_fk(unsigned k, int order) {
    if (k < 1) throw std::invalid_argument("hoppe_fk: k >= 1 required");
    LaurentSeries acc = Rational(0) * detail::sigma_power(k);
    for (unsigned r = 1; r <= k; ++r) {
        Rational c(binomial(k - 1, static_cast<long>(r) - 1), factorial(r));
        LaurentSeries term = detail::sigma_power(k + r) *
                             LaurentSeries::from_trunc(psi_asymptotic(r, order));
        acc = acc + c * term;
    }
    Rational lead(factorial(k));
    if (k % 2 == 1) lead = -lead;
    acc = lead * acc;
    Rational tail(factorial(k - 1));
    if (k % 2 == 0) tail = -tail;
    acc = acc + tail * detail::sigma_power(k);
    if (!acc.negative_part_vanishes())
        throw std::logic_error("hoppe_fk: negative-power coefficient survives: " +
                               acc.first_nonzero_negative());
    return acc;
}

/// P_{n,k} along g(z): z^{k-n} sum_{j=0}^k (-1)^{k-j} C(k,j) n! (z^2+1)^{j-k}
///                     sum_r (-1)^r C(j+r-1,r) C(2r+j,n) z^{2r}.
inline LaurentSeries hoppe_pnk(unsigned n, unsigned k, int order) {
    const RatPoly one_plus_z2 = RatPoly::from_coeffs({Rational(1), Rational(0), Rational(1)});
    TruncSeries inv = ratfunc_expand(RatPoly(Rational(1)), one_plus_z2, order);
    TruncSeries acc(order);
    TruncSeries invpow(order);
    invpow.at(0) = 1; // (z^2+1)^{-(k-j)}, built from j = k downward
    for (unsigned back = 0; back <= k; ++back) {
        unsigned j = k - back;
        TruncSeries g(order);
        for (unsigned r = 0; static_cast<int>(2 * r) <= order; ++r) {
            Integer c = binom_gen(static_cast<long>(j) + static_cast<long>(r) - 1,
                                  static_cast<long>(r)) *
                        binomial(2 * r + j, static_cast<long>(n));
            if (c == 0) continue;
            Rational coeff(c * factorial(n));
            if (r % 2 == 1) coeff = -coeff;
            g.at(static_cast<int>(2 * r)) += coeff;
        }
        TruncSeries term = g * invpow;
        if (back % 2 == 1) term = Rational(-1) * term; // (-1)^{k-j}
        Rational cj(binomial(k, static_cast<long>(j)));
        acc = acc + cj * term;
        if (back < k) invpow = invpow * inv;
    }
    return LaurentSeries::from_trunc(acc, static_cast<int>(k) - static_cast<int>(n));
}

/// Constant-term pipeline via the composition-derivative formula with
/// auxiliary polynomials: v_{2n} from (1/(2n)!) sum_k F^{(k)}(g) P_{2n,k}(g)/k!
/// plus the elementary log(z^2+1) contribution (-1)^{n-1}/n.
inline Rational v_hoppe(unsigned m) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("v_hoppe: even m >= 2 required");
    const unsigned n = m / 2;
    const int order = 4 * static_cast<int>(n);
    LaurentSeries total(-2 * static_cast<int>(m), 0);
    bool first = true;
    for (unsigned k = 1; k <= m; ++k) {
        LaurentSeries term = hoppe_fk(k, order) * hoppe_pnk(m, k, order);
        term = Rational(Integer(1), factorial(k)) * term;
        total = first ? term : total + term;
        first = false;
    }
    if (!total.negative_part_vanishes())
        throw std::logic_error("v_hoppe: negative-power coefficient survives: " +
                               total.first_nonzero_negative());
    Rational v = total.constant_term() / Rational(factorial(m));
    Rational log_part(1, static_cast<long>(n));
    if (n % 2 == 0) log_part = -log_part;
    return v + log_part;
}

/// The finite-sum coefficient identity inside the F^{(k)} closed form,
///   sum_{l=1}^{r} (-1)^l r! (l+k-1)! / (l! (r-l)! (l-1)!) = (-1)^r k! C(k-1, r-1),
/// and the term-by-term derivative lemma for d^n [g(z)^j].
inline VerifyReport hoppe_fk_coeff_check(unsigned k_max) {
    if (k_max < 2) throw std::invalid_argument("hoppe_fk_coeff_check: k_max >= 2 required");
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "hoppe-coefficients";
    rep.range = "k<=" + std::to_string(k_max);
    for (unsigned k = 1; k <= k_max; ++k)
        for (unsigned r = 1; r <= k; ++r) {
            Integer lhs(0);
            for (unsigned l = 1; l <= r; ++l) { // the l = 0 term carries 1/(-1)! = 0
                Integer t = factorial(r) * factorial(l + k - 1) /
                            (factorial(l) * factorial(r - l) * factorial(l - 1));
                lhs += l % 2 == 0 ? t : -t;
            }
            Integer rhs = factorial(k) * binomial(k - 1, static_cast<long>(r) - 1);
            if (r % 2 == 1) rhs = -rhs;
            rep.record("falling-factorial sum identity", lhs == rhs,
                       "k=" + std::to_string(k) + " r=" + std::to_string(r));
        }

    // d^n [g^j]: closed form against termwise differentiation of the series
    const RatPoly one_plus_z2 = RatPoly::from_coeffs({Rational(1), Rational(0), Rational(1)});
    const int order = 8;
    for (unsigned j = 1; j <= 3; ++j)
        for (unsigned nd = 0; nd <= 3; ++nd) {
            TruncSeries g = ratfunc_expand(RatPoly::x(), one_plus_z2, order + static_cast<int>(nd));
            TruncSeries gj = g;
            for (unsigned t = 1; t < j; ++t) gj = gj * g;
            for (unsigned t = 0; t < nd; ++t) gj = gj.derivative();
            bool ok = true;
            for (int e = 0; e <= gj.order(); ++e) {
                long rr2 = e - static_cast<int>(j) + static_cast<int>(nd); // 2r
                Rational want(0);
                if (rr2 >= 0 && rr2 % 2 == 0) {
                    long r = rr2 / 2;
                    Integer c = binom_gen(static_cast<long>(j) + r - 1, r) *
                                binomial(static_cast<unsigned long>(2 * r + j),
                                         static_cast<long>(nd));
                    want = Rational(c * factorial(nd));
                    if (r % 2 == 1) want = -want;
                }
                if (gj[e] != want) {
                    ok = false;
                    break;
                }
            }
            rep.record("derivative of g^j lemma", ok,
                       "j=" + std::to_string(j) + " n=" + std::to_string(nd));
        }
    rep.elapsed_ms = sw.ms();
    return rep;
}

/// Family of nested binomial-Bernoulli identities produced by the vanishing
/// of negative powers in the constant-term pipeline:
///   sum_{k,l,r,i} A(i,j,k,l,m,r) = 0 for j > 0, and
///   = sum_{s=1}^m (-1)^s C(m+s-1, m-s) B_{2s}/(2s) for j = 0.
/// The factor C(2m-k-1, k-l-1) carries the Bell boundary convention
/// (value 1 at the degenerate (-1, -1) corner, from B_{0,0} = 1).
inline VerifyReport nested_identity_check(unsigned m_max) {
    if (m_max < 1) throw std::invalid_argument("nested_identity_check: m_max >= 1 required");
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "nested-sum-identities";
    rep.range = "m<=" + std::to_string(m_max);
    auto bell_guard_binom = [](long a, long b) {
        if (a == -1 && b == -1) return Integer(1);
        if (b < 0 || a < 0) return Integer(0);
        return binomial(static_cast<unsigned long>(a), b);
    };
    for (unsigned m = 1; m <= m_max; ++m)
        for (unsigned j = 0; j < m; ++j) {
            Rational sum(0);
            for (unsigned k = 1; k <= 2 * m; ++k)
                for (unsigned l = 0; l <= k; ++l)
                    for (unsigned r = 0; r <= m; ++r)
                        for (long i = 1;
                             i <= static_cast<long>(m) - static_cast<long>(r) - static_cast<long>(j);
                             ++i) {
                            Integer prod =
                                binomial(k, static_cast<long>(l)) *
                                binomial(l, static_cast<long>(r)) *
                                binomial(k + 2 * static_cast<unsigned>(i), static_cast<long>(k)) *
                                bell_guard_binom(2 * static_cast<long>(m) - static_cast<long>(k) - 1,
                                                 static_cast<long>(k) - static_cast<long>(l) - 1) *
                                binomial(static_cast<unsigned long>(k + i + m - r - j - 1),
                                         static_cast<long>(k) + 2 * i - 1);
                            if (prod == 0) continue;
                            Rational term = Rational(prod) *
                                            bernoulli_number(2 * static_cast<unsigned>(i)) /
                                            Rational(static_cast<long>(k) + 2 * i);
                            if ((static_cast<long>(i) + j + k) % 2 == 1) term = -term;
                            sum += term;
                        }
            Rational want(0);
            if (j == 0)
                for (unsigned s = 1; s <= m; ++s) {
                    Rational t = Rational(binomial(m + s - 1, static_cast<long>(m) -
                                                                  static_cast<long>(s))) *
                                 bernoulli_number(2 * s) / Rational(2 * static_cast<long>(s));
                    want += s % 2 == 1 ? -t : t;
                }
            rep.record("nested sum matches stated value", sum == want,
                       "m=" + std::to_string(m) + " j=" + std::to_string(j) + " got " +
                           sum.str() + " want " + want.str());
        }
    rep.elapsed_ms = sw.ms();
    return rep;
}

} // namespace zagier
