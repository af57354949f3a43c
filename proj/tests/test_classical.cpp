#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "zagier/bernoulli.hpp"
#include "zagier/chebyshev.hpp"
#include "zagier/congruences.hpp"
#include "zagier/ratpoly.hpp"

using namespace zagier;

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(7) == Rational(0));
    CHECK(bernoulli_number(12) == Rational(-691, 2730));

    // defining recurrence sum_{k<=n} C(n+1,k) B_k = [n=0], including odd slots
    for (unsigned n = 0; n <= 40; ++n) {
        Rational s(0);
        for (unsigned k = 0; k <= n; ++k)
            s += Rational(binomial(n + 1, static_cast<long>(k))) * bernoulli_number(k);
        CHECK(s == Rational(n == 0 ? 1 : 0));
    }
}

TEST_CASE("Bernoulli polynomials") {
    CHECK(bernoulli_poly(0) == RatPoly(1));
    CHECK(bernoulli_poly(1) == RatPoly::from_coeffs({Rational(-1, 2), Rational(1)}));
    CHECK(bernoulli_poly(4).eval(1) == bernoulli_number(4));
    for (unsigned n = 0; n <= 25; ++n) {
        CHECK(bernoulli_poly(n).degree() == static_cast<long>(n));
        CHECK(bernoulli_poly(n).leading() == Rational(1)); // monic
        CHECK(bernoulli_poly(n).eval(0) == bernoulli_number(n));
        Rational at1 = bernoulli_poly(n).eval(1);
        CHECK(at1 == (n % 2 == 0 ? bernoulli_number(n) : -bernoulli_number(n)));
    }
}

TEST_CASE("von Staudt-Clausen denominators") {
    CHECK(vsc_denominator(2) == 6);
    CHECK(vsc_denominator(4) == 30);
    CHECK(vsc_denominator(12) == 2730);
    CHECK_THROWS_AS(vsc_denominator(7), std::invalid_argument);
    for (unsigned n = 2; n <= 60; n += 2)
        CHECK(denom(bernoulli_number(n)) == vsc_denominator(n));
}

TEST_CASE("von Staudt-Clausen integrality") {
    CHECK(vsc_congruence_check(2));
    CHECK(vsc_congruence_check(12));
    CHECK(vsc_congruence_check(40));
}

TEST_CASE("Voronoi congruence instances") {
    CHECK(voronoi_check(6, 3, 64));
    CHECK(voronoi_check(2, 3, 5));
    CHECK(voronoi_check(10, 7, 9));
    CHECK_THROWS_AS(voronoi_check(6, 2, 64), std::invalid_argument);
    CHECK_THROWS_AS(voronoi_check(5, 3, 64), std::invalid_argument);
}

TEST_CASE("mod-8 Bernoulli table") {
    CHECK(bernoulli_mod8(1) == 3);
    CHECK(bernoulli_mod8(2) == 1);
    CHECK(bernoulli_mod8(3) == 5);
    for (unsigned k = 1; k <= 150; ++k)
        CHECK(reduce_mod_2k(Rational(2) * bernoulli_number(2 * k), 3) == bernoulli_mod8(k));
}

TEST_CASE("mod-64 scans behind the odd case") {
    CHECK(proof_scan_mod64(6).ok());
    CHECK(proof_scan_mod64(50).ok());
    CHECK_THROWS_AS(proof_scan_mod64(4), std::invalid_argument);
}

TEST_CASE("Chebyshev polynomials") {
    CHECK(chebyshev_T(2) == RatPoly::from_coeffs({Rational(-1), Rational(0), Rational(2)}));
    CHECK(chebyshev_U(-1) == RatPoly());
    CHECK(chebyshev_U(2).eval(0) == Rational(-1));
    CHECK(chebyshev_U(4).eval(Rational(1, 2)).is_integer());
    for (unsigned n = 0; n <= 24; ++n) {
        RatPoly t = chebyshev_T(n);
        RatPoly u = chebyshev_U(static_cast<long>(n));
        CHECK(t.degree() == static_cast<long>(n));
        CHECK(u.degree() == static_cast<long>(n));
        for (long k = 0; k <= u.degree(); ++k) {
            CHECK(t.coeff(k).is_integer());
            CHECK(u.coeff(k).is_integer());
        }
        CHECK(u.leading() == Rational(binomial(1, 0) << n)); // 2^n
    }
}

namespace {
// independent determinant oracle: exact Gaussian elimination of the n x n
// tridiagonal matrix with 2x on the diagonal and 1 off it, at a fixed point
Rational tridiag_det_at(unsigned n, const Rational& x) {
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (unsigned i = 0; i < n; ++i) {
        m[i][i] = Rational(2) * x;
        if (i + 1 < n) {
            m[i][i + 1] = 1;
            m[i + 1][i] = 1;
        }
    }
    Rational det(1);
    for (unsigned col = 0; col < n; ++col) {
        unsigned pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        for (unsigned row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            Rational f = m[row][col] / m[col][col];
            for (unsigned j = col; j < n; ++j) m[row][j] -= f * m[col][j];
        }
    }
    return det;
}
} // namespace

TEST_CASE("U_n equals the tridiagonal determinant, by elimination at points") {
    for (unsigned n = 1; n <= 12; ++n) {
        RatPoly u = chebyshev_U(static_cast<long>(n));
        for (long p = -7; p <= 7; ++p) { // 15 points > deg, so this pins the polynomial
            Rational x(p, 2);
            CHECK(tridiag_det_at(n, x) == u.eval(x));
        }
    }
}

TEST_CASE("half-integer and doubling sweeps") {
    CHECK(chebU_halfinteger_check(20, -5, 5).ok());
    CHECK(chebU_halfinteger_check(1, 1, 1).ok());
    CHECK(chebT_doubling_check(20).ok());
    CHECK(chebyshev_T(2) == chebyshev_T(1).compose(
                                RatPoly::from_coeffs({Rational(-1), Rational(0), Rational(2)})));
}

TEST_CASE("shifted Chebyshev sum identity") {
    CHECK(tshift_sum(1) == RatPoly::from_coeffs({Rational(1), Rational(1, 2)}));
    CHECK_THROWS_AS(tshift_sum(0), std::invalid_argument);
    RatPoly half_shift = RatPoly::from_coeffs({Rational(1), Rational(1, 2)});
    CHECK(tshift_sum(2) == chebyshev_T(2).compose(half_shift) / Rational(2));
    CHECK(tshift_sum(15) == chebyshev_T(15).compose(half_shift) / Rational(15));
    CHECK(tshift_check(40).ok());
}

TEST_CASE("congruence suite aggregates cleanly") {
    auto rep = congruence_suite(40);
    CHECK(rep.ok());
    CHECK(rep.failures == 0);
    CHECK(!rep.checks.empty());
}
