#pragma once

#include <stdexcept>

#include "zagier/binomial.hpp"
#include "zagier/ratpoly.hpp"
#include "zagier/verify.hpp"

namespace zagier {

/// Chebyshev polynomial of the first kind: T_0 = 1, T_1 = x,
/// T_{n+1} = 2x T_n - T_{n-1}. All coefficients are integers.
inline RatPoly chebyshev_T(unsigned n) {
    RatPoly prev(1);
    if (n == 0) return prev;
    RatPoly cur = RatPoly::x();
    const RatPoly twox = RatPoly::monomial(2, 1);
    for (unsigned m = 1; m < n; ++m) {
        RatPoly next = twox * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Chebyshev polynomial of the second kind: U_0 = 1, U_1 = 2x, same
/// recurrence. U_{-1} = 0 is accepted (the recurrence run backwards).
inline RatPoly chebyshev_U(long n) {
    if (n < -1) throw std::invalid_argument("chebyshev_U: n >= -1 required");
    if (n == -1) return RatPoly();
    RatPoly prev(1);
    if (n == 0) return prev;
    RatPoly cur = RatPoly::monomial(2, 1);
    const RatPoly twox = RatPoly::monomial(2, 1);
    for (long m = 1; m < n; ++m) {
        RatPoly next = twox * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// The shifted-Chebyshev sum sum_{r=0}^{n} C(n+r,2r) x^r / (n+r), equal to
/// (1/n) T_n(x/2 + 1) as an exact polynomial identity.
inline RatPoly tshift_sum(unsigned n) {
    if (n == 0) throw std::invalid_argument("tshift_sum: n >= 1 required");
    std::vector<Rational> c(n + 1);
    for (unsigned r = 0; r <= n; ++r)
        c[r] = Rational(binomial(n + r, 2 * r), Integer(n + r));
    return RatPoly::from_coeffs(std::move(c));
}

/// U_n takes integer values at half-integers; U_{2n}(0) alternates +-1; and
/// for n <= 12 the tridiagonal determinant D_n (expansion by minors gives
/// D_{n+1} = 2x D_n - D_{n-1}, seeded by the 1x1 and 2x2 determinants)
/// reproduces U_n as a polynomial identity.
inline VerifyReport chebU_halfinteger_check(unsigned n_max, long p_lo, long p_hi) {
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "chebU-halfinteger";
    rep.range = "n<=" + std::to_string(n_max) + ", p in [" + std::to_string(p_lo) + "," +
                std::to_string(p_hi) + "]";
    for (unsigned n = 0; n <= n_max; ++n) {
        RatPoly u = chebyshev_U(static_cast<long>(n));
        for (long p = p_lo; p <= p_hi; ++p) {
            Rational val = u.eval(Rational(p, 2));
            rep.record("U_n(p/2) is an integer", val.is_integer(),
                       "n=" + std::to_string(n) + " p=" + std::to_string(p) + " value=" + val.str());
        }
        if (n % 2 == 0) {
            Rational expect((n / 2) % 2 == 0 ? 1 : -1);
            rep.record("U_{2n}(0) = (-1)^n", u.eval(0) == expect,
                       "n=" + std::to_string(n) + " value=" + u.eval(0).str());
        }
    }
    RatPoly d1 = RatPoly::monomial(2, 1);                            // det [2x]
    RatPoly d2 = RatPoly::monomial(4, 2) - RatPoly(1);               // det [[2x,1],[1,2x]]
    RatPoly prev = d1, cur = d2;
    rep.record("tridiagonal determinant equals U_n", d1 == chebyshev_U(1), "n=1");
    rep.record("tridiagonal determinant equals U_n", d2 == chebyshev_U(2), "n=2");
    for (unsigned n = 3; n <= 12 && n <= n_max; ++n) {
        RatPoly next = RatPoly::monomial(2, 1) * cur - prev;
        rep.record("tridiagonal determinant equals U_n", next == chebyshev_U(static_cast<long>(n)),
                   "n=" + std::to_string(n));
        prev = std::move(cur);
        cur = std::move(next);
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

/// Polynomial composition identity T_{2n}(x) = T_n(2x^2 - 1).
inline VerifyReport chebT_doubling_check(unsigned n_max) {
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "chebT-doubling";
    rep.range = "n<=" + std::to_string(n_max);
    const RatPoly arg = RatPoly::monomial(2, 2) - RatPoly(1);
    for (unsigned n = 1; n <= n_max; ++n) {
        bool eq = chebyshev_T(2 * n) == chebyshev_T(n).compose(arg);
        rep.record("T_{2n}(x) = T_n(2x^2-1)", eq, "n=" + std::to_string(n));
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

/// sum_{r} C(n+r,2r) x^r/(n+r) = (1/n) T_n(x/2+1), checked exactly.
inline VerifyReport tshift_check(unsigned n_max) {
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "tshift";
    rep.range = "n<=" + std::to_string(n_max);
    RatPoly half_shift = RatPoly::from_coeffs({Rational(1), Rational(1, 2)}); // x/2 + 1
    for (unsigned n = 1; n <= n_max; ++n) {
        RatPoly rhs = chebyshev_T(n).compose(half_shift) / Rational(static_cast<long>(n));
        rep.record("binomial sum equals T_n(x/2+1)/n", tshift_sum(n) == rhs,
                   "n=" + std::to_string(n));
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

} // namespace zagier
