#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "zagier/bernoulli.hpp"
#include "zagier/binomial.hpp"
#include "zagier/chebyshev.hpp"
#include "zagier/genfun.hpp"
#include "zagier/pipelines.hpp"
#include "zagier/verify.hpp"
#include "zagier/zagier.hpp"

namespace zagier {

enum class VMethod { Umbral, Parity, ZagierEval, Series, ChebUmbral, Recurrence, FaaDiBruno, Hoppe };

inline const char* to_string(VMethod m) {
    switch (m) {
        case VMethod::Umbral: return "umbral";
        case VMethod::Parity: return "parity";
        case VMethod::ZagierEval: return "zagier-eval";
        case VMethod::Series: return "series";
        case VMethod::ChebUmbral: return "cheb-umbral";
        case VMethod::Recurrence: return "recurrence";
        case VMethod::FaaDiBruno: return "faa-di-bruno";
        case VMethod::Hoppe: return "hoppe";
    }
    return "?";
}

struct VMethodResult {
    unsigned n = 0;
    VMethod method = VMethod::Umbral;
    Rational value;
};

/// v_n by the finite umbral sum
///   v_n = sum_{k=0}^{floor(n/2)} (-1)^{n-k+1} C(n-k,k)/(n-k) B_{n-2k};
/// v_0 = 0 by convention.
inline Rational v_umbral(unsigned n) {
    if (n == 0) return Rational(0);
    Rational sum(0);
    for (unsigned k = 0; 2 * k <= n; ++k) {
        Rational t = Rational(binomial(n - k, static_cast<long>(k)), Integer(n - k)) *
                     bernoulli_number(n - 2 * k);
        sum += (n - k + 1) % 2 == 0 ? t : -t;
    }
    return sum;
}

/// v_n by the parity-split closed forms: v_{2t-1} = (-1)^t/2 and
///   v_{2t} = (-1)^{t+1} [1/t + sum_{k=1}^{t} (-1)^k C(t+k-1, t-k) B_{2k}/(2k)].
inline Rational v_parity(unsigned n) {
    if (n == 0) return Rational(0);
    if (n % 2 == 1) {
        unsigned t = (n + 1) / 2;
        return Rational(t % 2 == 0 ? 1 : -1, 2);
    }
    unsigned t = n / 2;
    Rational sum(1, static_cast<long>(t));
    for (unsigned k = 1; k <= t; ++k) {
        Rational term = Rational(binomial(t + k - 1, static_cast<long>(t) - static_cast<long>(k)),
                                 Integer(2 * k)) *
                        bernoulli_number(2 * k);
        sum += k % 2 == 0 ? term : -term;
    }
    return (t + 1) % 2 == 0 ? sum : -sum;
}

/// v_n = -2 B*_n(-1).
inline Rational v_zagier_eval(unsigned n) {
    if (n == 0) return Rational(0);
    return Rational(-2) * bstar_poly(n).eval(Rational(-1));
}

/// v_n as coefficient n of the asymptotic expansion of V.
inline Rational v_series(unsigned n) {
    if (n == 0) return Rational(0);
    return expand_V(static_cast<int>(n))[static_cast<int>(n)];
}

/// Even-index Chebyshev-umbral form: v_{2n} = -eval (1/n) T_{2n}(X/2) with
/// X^k -> B_k; the doubled form -(1/n) T_n((X^2-2)/2) must agree.
inline Rational v_cheb_umbral(unsigned m) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("v_cheb_umbral: even m >= 2 required");
    unsigned n = m / 2;
    auto eval_bernoulli = [](const RatPoly& p) {
        Rational acc(0);
        for (long k = 0; k <= p.degree(); ++k)
            acc += p.coeff(k) * bernoulli_number(static_cast<unsigned>(k));
        return acc;
    };
    RatPoly half_x = RatPoly::monomial(Rational(1, 2), 1);
    Rational direct = -eval_bernoulli(chebyshev_T(m).compose(half_x)) / Rational(static_cast<long>(n));
    RatPoly doubled_arg =
        RatPoly::from_coeffs({Rational(-1), Rational(0), Rational(1, 2)}); // (x^2-2)/2
    Rational doubled =
        -eval_bernoulli(chebyshev_T(n).compose(doubled_arg)) / Rational(static_cast<long>(n));
    if (direct != doubled)
        throw std::logic_error("v_cheb_umbral: doubled Chebyshev form disagrees at m=" +
                               std::to_string(m));
    return direct;
}

/// z_n = 4n v_{2n} by the binomial recurrence
///   z_n = 2 C(2n,n) - sum_{k=1}^{n-1} C(2n,n+k) z_k - 2 B_{2n}.
inline std::vector<Rational> z_recurrence(unsigned n_max) {
    if (n_max < 1) throw std::invalid_argument("z_recurrence: n_max >= 1 required");
    std::vector<Rational> z(n_max + 1); // z[0] unused
    for (unsigned n = 1; n <= n_max; ++n) {
        BinomialRow row(2 * n);
        Rational acc = Rational(2) * Rational(row[n]) - Rational(2) * bernoulli_number(2 * n);
        for (unsigned k = 1; k < n; ++k) acc -= Rational(row[n + k]) * z[k];
        z[n] = acc;
    }
    return z;
}

/// z_n has odd denominator and its residue mod 2 follows the period-3
/// pattern {1, 1, 0}.
inline VerifyReport z_mod2_period_check(unsigned n_max) {
    if (n_max < 6) throw std::invalid_argument("z_mod2_period_check: n_max >= 6 required");
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "z-mod2-period";
    rep.range = "n<=" + std::to_string(n_max);
    auto z = z_recurrence(n_max);
    std::vector<std::uint64_t> residues;
    for (unsigned n = 1; n <= n_max; ++n) {
        bool odd_denom = mpz_odd_p(z[n].denominator().get_mpz_t()) != 0;
        rep.record("z_n has odd denominator", odd_denom, "n=" + std::to_string(n));
        std::uint64_t r = reduce_mod_2k(z[n], 1);
        residues.push_back(r);
        std::uint64_t want = n % 3 == 0 ? 0 : 1;
        rep.record("z_n mod 2 follows pattern {1,1,0}", r == want,
                   "n=" + std::to_string(n) + " got " + std::to_string(r));
    }
    auto period = detect_period(residues, 2);
    rep.record("residue stream has smallest period 3", period.has_value() && *period == 3,
               period ? "period=" + std::to_string(*period) : "no period");
    rep.elapsed_ms = sw.ms();
    return rep;
}

/// Inverse-pair round trip: a_n/(2n) = sum_k C(n+k-1, n-k) b_k/(2k) followed
/// by b_n = sum_k (-1)^{n-k} C(2n, n+k) a_k recovers b exactly. Exercised on
/// a basis vector, random rational sequences, and the Bernoulli instance.
inline VerifyReport legendre_inversion_check(unsigned length, unsigned sequences = 20,
                                             std::uint64_t seed = 0xbadc0de) {
    if (length < 1) throw std::invalid_argument("legendre_inversion_check: length >= 1 required");
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "legendre-inversion";
    rep.range = "length " + std::to_string(length) + ", " + std::to_string(sequences) +
                " random sequences";

    auto forward = [&](const std::vector<Rational>& b) {
        std::vector<Rational> a(b.size());
        for (size_t n = 1; n < b.size(); ++n) {
            Rational acc(0);
            for (size_t k = 1; k <= n; ++k)
                acc += Rational(binomial(n + k - 1, static_cast<long>(n - k)), Integer(2 * k)) *
                       b[k];
            a[n] = Rational(2 * static_cast<long>(n)) * acc;
        }
        return a;
    };
    auto backward = [&](const std::vector<Rational>& a) {
        std::vector<Rational> b(a.size());
        for (size_t n = 1; n < a.size(); ++n) {
            BinomialRow row(2 * n);
            Rational acc(0);
            for (size_t k = 1; k <= n; ++k) {
                Rational t = Rational(row[n + k]) * a[k];
                acc += (n - k) % 2 == 0 ? t : -t;
            }
            b[n] = acc;
        }
        return b;
    };
    auto round_trips = [&](const std::vector<Rational>& b) {
        auto rb = backward(forward(b));
        for (size_t n = 1; n < b.size(); ++n)
            if (rb[n] != b[n]) return false;
        return true;
    };

    std::vector<Rational> basis(length + 1);
    basis[1] = 1;
    rep.record("round trip on basis vector", round_trips(basis), "e_1");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    for (unsigned s = 0; s < sequences; ++s) {
        std::vector<Rational> b(length + 1);
        for (size_t i = 1; i <= length; ++i) b[i] = Rational(num(rng), den(rng));
        rep.record("round trip on random sequences", round_trips(b),
                   "sequence " + std::to_string(s));
    }

    // Bernoulli instance: b_n = (-1)^n B_{2n} pairs with
    // a_n = 2n((-1)^{n+1} v_{2n} - 1/n).
    std::vector<Rational> b(length + 1);
    for (size_t n = 1; n <= length; ++n) {
        b[n] = bernoulli_number(2 * static_cast<unsigned>(n));
        if (n % 2 == 1) b[n] = -b[n];
    }
    auto a = forward(b);
    bool ok = true;
    std::string witness;
    for (size_t n = 1; n <= length; ++n) {
        Rational v = v_parity(2 * static_cast<unsigned>(n));
        if (n % 2 == 0) v = -v; // (-1)^{n+1} v_{2n}
        Rational want = Rational(2 * static_cast<long>(n)) *
                        (v - Rational(1, static_cast<long>(n)));
        if (a[n] != want) {
            ok = false;
            witness = "n=" + std::to_string(n);
            break;
        }
    }
    rep.record("Bernoulli pair matches the closed form", ok, witness);
    rep.record("backward recovers the Bernoulli sequence", round_trips(b), "");
    rep.elapsed_ms = sw.ms();
    return rep;
}

/// F(m) = sum_k C(6m+1, 3m+3k-1) over all integers k equals (2/3)(64^m - 1),
/// satisfies -64 F(m) + 65 F(m+1) - F(m+2) = 0, and the half-range sum
/// equals (64^m - 1)/3.
inline VerifyReport f_sum_check(unsigned m_max) {
    if (m_max < 2) throw std::invalid_argument("f_sum_check: m_max >= 2 required");
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "central-binomial-sum";
    rep.range = "m<=" + std::to_string(m_max);
    std::vector<Integer> f(m_max + 1);
    for (unsigned m = 1; m <= m_max; ++m) {
        BinomialRow row(6 * m + 1);
        Integer full(0), half(0);
        for (long k = 1 - static_cast<long>(m); k <= static_cast<long>(m); ++k) {
            Integer t = row.at(3 * static_cast<long>(m) + 3 * k - 1);
            full += t;
            if (k >= 1) half += t;
        }
        f[m] = full;
        Integer pow64;
        mpz_ui_pow_ui(pow64.get_mpz_t(), 64, m);
        rep.record("F(m) = (2/3)(64^m - 1)", 3 * full == 2 * (pow64 - 1),
                   "m=" + std::to_string(m) + " F=" + full.get_str());
        rep.record("half-range sum = (64^m - 1)/3", 3 * half == pow64 - 1,
                   "m=" + std::to_string(m));
    }
    for (unsigned m = 1; m + 2 <= m_max; ++m)
        rep.record("three-term recurrence", -64 * f[m] + 65 * f[m + 1] - f[m + 2] == 0,
                   "m=" + std::to_string(m));
    rep.elapsed_ms = sw.ms();
    return rep;
}

/// All computed methods agree for every index: six light methods for
/// n <= n_max, plus the two constant-term pipelines for even n <= heavy_max.
/// Also checks the inversion source B_{2n} = C(2n,n) - sum_k C(2n,n+k) 2k v_{2k}
/// with parity-method values.
inline VerifyReport cross_check_all(unsigned n_max, unsigned heavy_max) {
    if (heavy_max > n_max) throw std::invalid_argument("cross_check_all: heavy_max <= n_max");
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "v-method-cross-check";
    rep.range = "n<=" + std::to_string(n_max) + ", heavy n<=" + std::to_string(heavy_max);
    TruncSeries v_exp = expand_V(static_cast<int>(n_max));
    auto z = z_recurrence(std::max(1u, n_max / 2));
    for (unsigned n = 1; n <= n_max; ++n) {
        std::vector<VMethodResult> results;
        results.push_back({n, VMethod::Umbral, v_umbral(n)});
        results.push_back({n, VMethod::Parity, v_parity(n)});
        results.push_back({n, VMethod::ZagierEval, v_zagier_eval(n)});
        results.push_back({n, VMethod::Series, v_exp[static_cast<int>(n)]});
        if (n % 2 == 0) {
            results.push_back({n, VMethod::ChebUmbral, v_cheb_umbral(n)});
            results.push_back(
                {n, VMethod::Recurrence, z[n / 2] / Rational(2 * static_cast<long>(n))});
            if (n <= heavy_max) {
                results.push_back({n, VMethod::FaaDiBruno, v_faa_di_bruno(n)});
                results.push_back({n, VMethod::Hoppe, v_hoppe(n)});
            }
        }
        bool agree = true;
        std::string witness;
        for (const auto& r : results)
            if (r.value != results.front().value) {
                agree = false;
                witness = "n=" + std::to_string(n);
                for (const auto& w : results)
                    witness += std::string(" ") + to_string(w.method) + "=" + w.value.str();
                break;
            }
        rep.record("all methods yield the identical rational", agree, witness);
    }
    for (unsigned n = 1; n <= n_max / 2; ++n) {
        BinomialRow row(2 * n);
        Rational acc = Rational(row[n]);
        for (unsigned k = 1; k <= n; ++k)
            acc -= Rational(row[n + k] * Integer(2 * k)) * v_parity(2 * k);
        rep.record("inversion source recovers B_{2n}", acc == bernoulli_number(2 * n),
                   "n=" + std::to_string(n));
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

} // namespace zagier
