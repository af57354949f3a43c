#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "zagier/bernoulli.hpp"
#include "zagier/binomial.hpp"
#include "zagier/genfun.hpp"
#include "zagier/ratpoly.hpp"
#include "zagier/series.hpp"
#include "zagier/verify.hpp"

namespace zagier {

/// Asymptotic expansion of the polygamma composition psi_j(z + 1/z) as
/// z -> 0, in the regrouped double-sum form: an odd part
///   (-1)^{j-1}/2 * sum_r (-1)^r (j+r)!/r! z^{j+1+2r}
/// plus an even part
///   (-1)^{j-1} * sum_l [sum_{k<=l} (-1)^{l-k} B_{2k} (k+j+l-1)!/((2k)!(l-k)!)] z^{j+2l}.
inline TruncSeries psi_asymptotic(unsigned j, int order) {
    if (j < 1) throw std::invalid_argument("psi_asymptotic: j >= 1 required");
    TruncSeries s(order);
    const bool flip = j % 2 == 0; // (-1)^{j-1}
    for (int r = 0; static_cast<int>(j) + 1 + 2 * r <= order; ++r) {
        Rational c(factorial(j + static_cast<unsigned>(r)), Integer(2) * factorial(static_cast<unsigned>(r)));
        if ((r % 2 == 1) != flip) c = -c;
        s.at(static_cast<int>(j) + 1 + 2 * r) = c;
    }
    for (int l = 0; static_cast<int>(j) + 2 * l <= order; ++l) {
        Rational inner(0);
        for (int k = 0; k <= l; ++k) {
            Rational t =
                bernoulli_number(2 * static_cast<unsigned>(k)) *
                Rational(factorial(static_cast<unsigned>(k) + j + static_cast<unsigned>(l) - 1),
                         factorial(2 * static_cast<unsigned>(k)) *
                             factorial(static_cast<unsigned>(l - k)));
            inner += (l - k) % 2 == 1 ? -t : t;
        }
        if (flip) inner = -inner;
        s.at(static_cast<int>(j) + 2 * l) += inner;
    }
    return s;
}

/// The same expansion by direct composition: psi_j(z + 1/z) equals
/// (-1)^{j-1} sum_{m>=0} (m+j-1)!/m! (-1)^m B_m s^{m+j} with s = z/(1+z^2).
/// Kept as the independent route for cross-checking the regrouped form.
inline TruncSeries psi_composed(unsigned j, int order) {
    if (j < 1) throw std::invalid_argument("psi_composed: j >= 1 required");
    const RatPoly one_plus_z2 = RatPoly::from_coeffs({Rational(1), Rational(0), Rational(1)});
    TruncSeries s = ratfunc_expand(RatPoly::x(), one_plus_z2, order);
    TruncSeries acc(order);
    TruncSeries pow = s;
    for (unsigned t = 1; t < j; ++t) pow = pow * s; // s^j
    for (int m = 0; static_cast<int>(j) + m <= order; ++m) {
        Rational c(factorial(static_cast<unsigned>(m) + j - 1), factorial(static_cast<unsigned>(m)));
        c = c * bernoulli_number(static_cast<unsigned>(m));
        if ((m % 2 == 1) != (j % 2 == 0)) c = -c; // (-1)^{j-1} (-1)^m
        if (!c.is_zero()) {
            TruncSeries term = c * pow;
            acc = acc + term;
        }
        if (static_cast<int>(j) + m < order) pow = pow * s;
    }
    return acc;
}

/// Coefficient polynomials of the n-th derivative of V:
///   z^{2n} V^{(n)}(z) = (-1)^{n-1}(n-1)! z^n + sum_{j=1}^n A_{j,n}(z) psi_j(z+1/z),
/// built by the recurrence with A_{1,1} = z^2 - 1.
inline std::vector<RatPoly> a_poly_recurrence(unsigned n) {
    if (n < 1) throw std::invalid_argument("a_poly_recurrence: n >= 1 required");
    const RatPoly z2m1 = RatPoly::from_coeffs({Rational(-1), Rational(0), Rational(1)});
    const RatPoly z2 = RatPoly::monomial(1, 2);
    std::vector<RatPoly> row{z2m1}; // row for n = 1: A_{1,1}
    for (unsigned m = 1; m < n; ++m) {
        std::vector<RatPoly> next(m + 1);
        const RatPoly minus2mz = RatPoly::monomial(Rational(-2 * static_cast<long>(m)), 1);
        for (unsigned j = 1; j <= m; ++j)
            next[j - 1] = minus2mz * row[j - 1] + z2 * row[j - 1].derivative() +
                          (j >= 2 ? z2m1 * row[j - 2] : RatPoly());
        next[m] = z2m1 * row[m - 1];
        row = std::move(next);
    }
    return row;
}

/// Closed form: A_{n,n} = (z^2-1)^n and, for j < n,
///   A_{j,n}(z) = (-1)^n (n!/j!) z^{n-j} sum_{r=0}^{j-1} (-1)^r C(n-1-r, n-j) C(j, r) z^{2r}.
inline RatPoly a_poly_explicit(unsigned j, unsigned n) {
    if (j < 1 || j > n) throw std::invalid_argument("a_poly_explicit: 1 <= j <= n required");
    const RatPoly z2m1 = RatPoly::from_coeffs({Rational(-1), Rational(0), Rational(1)});
    if (j == n) {
        RatPoly p(1);
        for (unsigned i = 0; i < n; ++i) p *= z2m1;
        return p;
    }
    std::vector<Rational> c(n - j + 2 * (j - 1) + 1);
    Rational lead(factorial(n), factorial(j));
    if (n % 2 == 1) lead = -lead;
    for (unsigned r = 0; r < j; ++r) {
        Rational t = lead * Rational(binomial(n - 1 - r, static_cast<long>(n - j)) *
                                     binomial(j, static_cast<long>(r)));
        if (r % 2 == 1) t = -t;
        c[n - j + 2 * r] = t;
    }
    return RatPoly::from_coeffs(std::move(c));
}

/// Hypergeometric finite-sum form:
///   A_{j,n}(z) = (-1)^n C(n-1, j-1) C(n, j) (n-j)! z^{n-j}
///                * sum_i (1-j)_i (-j)_i / ((1-n)_i i!) z^{2i},
/// the sum terminating at i = j - 1. The (1-n)_i factors never vanish there,
/// so the finite sum is well-defined for every 1 <= j < n.
inline RatPoly a_poly_hypergeometric(unsigned j, unsigned n) {
    if (j < 1 || j > n) throw std::invalid_argument("a_poly_hypergeometric: 1 <= j <= n required");
    if (j == n) return a_poly_explicit(j, n);
    auto pochhammer = [](long a, unsigned i) {
        Integer p(1);
        for (unsigned t = 0; t < i; ++t) p *= Integer(a + static_cast<long>(t));
        return p;
    };
    Rational lead(binomial(n - 1, static_cast<long>(j) - 1) * binomial(n, static_cast<long>(j)) *
                  factorial(n - j));
    if (n % 2 == 1) lead = -lead;
    std::vector<Rational> c(n - j + 2 * (j - 1) + 1);
    for (unsigned i = 0; i < j; ++i) { // (1-j)_i vanishes for i >= j
        Integer num = pochhammer(1 - static_cast<long>(j), i) *
                      pochhammer(-static_cast<long>(j), i);
        Integer den = pochhammer(1 - static_cast<long>(n), i) * factorial(i);
        c[n - j + 2 * i] = lead * Rational(num, den);
    }
    return RatPoly::from_coeffs(std::move(c));
}

/// Recurrence, explicit and hypergeometric routes agree, with the stated
/// degrees: deg A_{j,n} = n + j - 2 for j < n and 2n for j = n.
inline VerifyReport a_poly_check(unsigned n_max) {
    if (n_max < 1) throw std::invalid_argument("a_poly_check: n_max >= 1 required");
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "derivative-coefficient-polynomials";
    rep.range = "n<=" + std::to_string(n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
        auto row = a_poly_recurrence(n);
        for (unsigned j = 1; j <= n; ++j) {
            const RatPoly& rec = row[j - 1];
            rep.record("recurrence equals explicit form", rec == a_poly_explicit(j, n),
                       "j=" + std::to_string(j) + " n=" + std::to_string(n));
            rep.record("recurrence equals hypergeometric form",
                       rec == a_poly_hypergeometric(j, n),
                       "j=" + std::to_string(j) + " n=" + std::to_string(n));
            long want_deg = j == n ? 2 * static_cast<long>(n)
                                   : static_cast<long>(n) + static_cast<long>(j) - 2;
            rep.record("degree is n+j-2 (j<n) or 2n (j=n)", rec.degree() == want_deg,
                       "j=" + std::to_string(j) + " n=" + std::to_string(n) + " deg=" +
                           std::to_string(rec.degree()));
        }
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

/// Formal-series identity for the n-th derivative of V:
///   V^{(n)}(z) = (-1)^{n-1}(n-1)! z^{-n} + z^{-2n} sum_j A_{j,n}(z) psi_j(z+1/z),
/// compared through order N - n; the singular parts must cancel exactly.
inline bool polynomial_v_check(unsigned n, int order) {
    if (order < static_cast<int>(n) + 2)
        throw std::invalid_argument("polynomial_v_check: order >= n + 2 required");
    TruncSeries lhs = expand_V(order);
    for (unsigned i = 0; i < n; ++i) lhs = lhs.derivative();

    auto row = a_poly_recurrence(n);
    LaurentSeries rhs(-2 * static_cast<int>(n), 0);
    {
        // (-1)^{n-1} (n-1)! z^{-n}
        std::vector<Rational> sing{Rational(factorial(n - 1))};
        if (n % 2 == 0) sing[0] = -sing[0];
        rhs = LaurentSeries::laurent_poly(-static_cast<int>(n), std::move(sing));
    }
    for (unsigned j = 1; j <= n; ++j) {
        const RatPoly& a = row[j - 1];
        std::vector<Rational> coeffs(static_cast<size_t>(a.degree()) + 1);
        for (long i = 0; i <= a.degree(); ++i) coeffs[static_cast<size_t>(i)] = a.coeff(i);
        LaurentSeries apoly = LaurentSeries::laurent_poly(-2 * static_cast<int>(n), std::move(coeffs));
        LaurentSeries psi =
            LaurentSeries::from_trunc(psi_asymptotic(j, order + static_cast<int>(n)));
        rhs = rhs + apoly * psi;
    }
    if (!rhs.negative_part_vanishes()) return false;
    for (int e = 0; e <= order - static_cast<int>(n); ++e)
        if (rhs.coeff(e) != lhs[e]) return false;
    return true;
}

} // namespace zagier
