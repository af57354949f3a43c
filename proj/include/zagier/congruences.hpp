#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

#include "zagier/bernoulli.hpp"
#include "zagier/primes.hpp"
#include "zagier/rational.hpp"
#include "zagier/verify.hpp"

namespace zagier {

/// von Staudt-Clausen denominator: the product of all primes p with
/// (p - 1) | n, for even n. Equals denom(B_n).
inline Integer vsc_denominator(unsigned n) {
    if (n == 0 || n % 2 != 0) throw std::invalid_argument("vsc_denominator: n must be even, >= 2");
    Integer prod(1);
    for (unsigned long p : primes_upto(n + 1))
        if (n % (p - 1) == 0) prod *= Integer(p);
    return prod;
}

/// B_n + sum_{(p-1)|n} 1/p is an integer (even n).
inline bool vsc_congruence_check(unsigned n) {
    if (n == 0 || n % 2 != 0) throw std::invalid_argument("vsc_congruence_check: n must be even");
    Rational s = bernoulli_number(n);
    for (unsigned long p : primes_upto(n + 1))
        if (n % (p - 1) == 0) s += Rational(1, static_cast<long>(p));
    return s.is_integer();
}

/// Voronoi congruence: with B_m = U/V in lowest terms, m >= 2 even,
/// gcd(a, n) = 1:
///   (a^m - 1) U == m a^{m-1} V sum_{j=1}^{n-1} j^{m-1} floor(j a / n)  (mod n)
inline bool voronoi_check(unsigned m, const Integer& a, const Integer& n) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("voronoi_check: m must be even, >= 2");
    if (sgn(a) <= 0 || sgn(n) <= 0) throw std::invalid_argument("voronoi_check: a, n positive");
    if (gcd(a, n) != 1) throw std::invalid_argument("voronoi_check: gcd(a, n) = 1 required");
    Rational bm = bernoulli_number(m);
    Integer u = bm.numerator(), v = bm.denominator();
    Integer am;
    mpz_powm_ui(am.get_mpz_t(), a.get_mpz_t(), m, n.get_mpz_t());
    Integer lhs = ((am - 1) % n) * (u % n) % n;
    Integer sum(0);
    for (Integer j(1); j < n; ++j) {
        Integer jp;
        mpz_powm_ui(jp.get_mpz_t(), j.get_mpz_t(), m - 1, n.get_mpz_t());
        Integer fl = j * a / n; // exact floor, all quantities positive
        sum = (sum + jp * (fl % n)) % n;
    }
    Integer am1;
    mpz_powm_ui(am1.get_mpz_t(), a.get_mpz_t(), m - 1, n.get_mpz_t());
    Integer rhs = Integer(m) % n * am1 % n * (v % n) % n * sum % n;
    return (lhs - rhs) % n == 0;
}

/// Closed-form residue of 2 B_{2k} mod 8: 3 for k = 1, else 1 for even k
/// and 5 for odd k.
inline unsigned bernoulli_mod8(unsigned k) {
    if (k == 0) throw std::invalid_argument("bernoulli_mod8: k >= 1 required");
    if (k == 1) return 3;
    return k % 2 == 0 ? 1 : 5;
}

namespace detail {
inline unsigned long powmod64(unsigned long base, unsigned long exp, unsigned long mod) {
    unsigned long long r = 1, b = base % mod;
    while (exp) {
        if (exp & 1) r = r * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<unsigned long>(r);
}
} // namespace detail

/// Modular facts behind the odd case of the mod-8 Bernoulli table:
/// 3^m - 1 == 4m (mod 64) for even m, and for m == 2 (mod 4), m >= 6,
/// 3^{m-1} sum_{j=1}^{63} j^{m-1} floor(3j/64) == 42 (mod 64).
inline VerifyReport proof_scan_mod64(unsigned m_max) {
    if (m_max < 6) throw std::invalid_argument("proof_scan_mod64: m_max >= 6 required");
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "proof-scan-mod64";
    rep.range = "even m<=" + std::to_string(m_max);
    for (unsigned m = 2; m <= m_max; m += 2) {
        unsigned long lhs = (detail::powmod64(3, m, 64) + 63) % 64; // 3^m - 1
        rep.record("3^m - 1 == 4m mod 64", lhs == 4UL * m % 64,
                   "m=" + std::to_string(m) + " got " + std::to_string(lhs));
        if (m % 4 == 2 && m >= 6) {
            unsigned long s = 0;
            for (unsigned long j = 1; j <= 63; ++j)
                s = (s + detail::powmod64(j, m - 1, 64) * (3 * j / 64)) % 64;
            s = s * detail::powmod64(3, m - 1, 64) % 64;
            rep.record("floor-weighted power sum == 42 mod 64", s == 42,
                       "m=" + std::to_string(m) + " got " + std::to_string(s));
        }
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

/// Sweep: vsc denominator + integrality, the mod-8 closed form against exact
/// reduction, and a Voronoi grid.
inline VerifyReport congruence_suite(unsigned n_max) {
    Stopwatch sw;
    VerifyReport rep;
    rep.suite = "congruences";
    rep.range = "even n<=" + std::to_string(n_max);
    for (unsigned n = 2; n <= n_max; n += 2) {
        rep.record("denom(B_n) equals von Staudt-Clausen product",
                   denom(bernoulli_number(n)) == vsc_denominator(n), "n=" + std::to_string(n));
        rep.record("B_n + sum 1/p is an integer", vsc_congruence_check(n),
                   "n=" + std::to_string(n));
    }
    for (unsigned k = 1; 2 * k <= n_max; ++k) {
        unsigned long exact = reduce_mod_2k(Rational(2) * bernoulli_number(2 * k), 3);
        rep.record("2 B_{2k} mod 8 closed form", exact == bernoulli_mod8(k),
                   "k=" + std::to_string(k) + " exact=" + std::to_string(exact));
    }
    const long as[] = {2, 3, 5, 7};
    const long ns[] = {5, 9, 16, 64, 81};
    for (unsigned m = 2; m <= std::min(n_max, 60u); m += 2)
        for (long a : as)
            for (long nn : ns) {
                if (gcd(Integer(a), Integer(nn)) != 1) continue;
                rep.record("Voronoi congruence", voronoi_check(m, a, nn),
                           "m=" + std::to_string(m) + " a=" + std::to_string(a) +
                               " n=" + std::to_string(nn));
            }
    rep.merge(proof_scan_mod64(std::max(6u, n_max)));
    rep.elapsed_ms = sw.ms();
    return rep;
}

} // namespace zagier
