#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace zagier {

using Integer = mpz_class;

/// Exact rational scalar backed by GMP. Canonical form is an invariant:
/// gcd(|numerator|, denominator) = 1 and denominator >= 1; zero is 0/1.
/// Values are immutable in spirit: every operation returns a new value and
/// all arithmetic preserves canonical form (the mpq contract).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long n) : v_(n) {}
    Rational(Integer n) : v_(std::move(n)) {}
    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "p" or "p/q" (q > 0 after reduction).
    static Rational from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        return Rational(num, den);
    }

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const {
        std::string s = v_.get_num().get_str();
        if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
        return s;
    }

private:
    mpq_class v_;
};

/// Value of a p-adic valuation: a finite integer, or infinite (input 0).
struct Valuation {
    long value = 0;
    bool infinite = false;

    static Valuation inf() { return Valuation{0, true}; }
    static Valuation of(long v) { return Valuation{v, false}; }

    friend bool operator==(const Valuation&, const Valuation&) = default;

    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite || b.infinite) return inf();
        return of(a.value + b.value);
    }
    static Valuation min(const Valuation& a, const Valuation& b) {
        if (a.infinite) return b;
        if (b.infinite) return a;
        return of(a.value < b.value ? a.value : b.value);
    }
    std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

inline bool is_prime(const Integer& p) {
    return mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

/// Exponent of the prime p in q; negative when p divides the denominator,
/// infinite for q = 0.
inline Valuation nu_p(const Rational& q, const Integer& p) {
    if (!is_prime(p)) throw std::invalid_argument("nu_p: p must be prime");
    if (q.is_zero()) return Valuation::inf();
    Integer tmp;
    Integer num = q.numerator();
    long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
    Integer den = q.denominator();
    long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
    return Valuation::of(vn - vd);
}

inline Valuation nu2(const Rational& q) { return nu_p(q, 2); }

/// Denominator of q in lowest terms (always >= 1).
inline Integer denom(const Rational& q) { return q.denominator(); }

/// numerator * denominator^(-1) mod 2^k, for 2-integral q (odd denominator).
inline unsigned long reduce_mod_2k(const Rational& q, unsigned k) {
    if (k == 0 || k > 62) throw std::invalid_argument("reduce_mod_2k: need 1 <= k <= 62");
    if (mpz_odd_p(q.denominator().get_mpz_t()) == 0)
        throw std::domain_error("reduce_mod_2k: not 2-integral");
    Integer mod = Integer(1) << k;
    Integer inv;
    Integer den = q.denominator();
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    Integer r = (q.numerator() % mod) * inv % mod;
    if (sgn(r) < 0) r += mod;
    return r.get_ui();
}

} // namespace zagier
