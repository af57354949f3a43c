#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zagier/ratpoly.hpp"
#include "zagier/rational.hpp"

namespace zagier {

/// Formal power series over Rational, truncated at a caller-chosen order.
/// Arithmetic never reads or writes beyond the carried order; mixed-order
/// operations truncate to the minimum. Equality is coefficient-wise through
/// the common order.
class TruncSeries {
public:
    explicit TruncSeries(int order) : order_(order), c_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("TruncSeries: order >= 0 required");
    }
    static TruncSeries monomial(const Rational& c, int k, int order) {
        TruncSeries s(order);
        if (k <= order) s.c_[static_cast<size_t>(k)] = c;
        return s;
    }
    static TruncSeries from_poly(const RatPoly& p, int order) {
        TruncSeries s(order);
        for (int i = 0; i <= std::min<long>(order, p.degree()); ++i)
            s.c_[static_cast<size_t>(i)] = p.coeff(i);
        return s;
    }

    int order() const { return order_; }
    const Rational& operator[](int i) const {
        if (i < 0 || i > order_) throw std::out_of_range("TruncSeries: coefficient index");
        return c_[static_cast<size_t>(i)];
    }
    Rational& at(int i) {
        if (i < 0 || i > order_) throw std::out_of_range("TruncSeries: coefficient index");
        return c_[static_cast<size_t>(i)];
    }

    TruncSeries truncated(int order) const {
        TruncSeries s(std::min(order, order_));
        for (int i = 0; i <= s.order_; ++i) s.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
        return s;
    }

    TruncSeries operator-() const {
        TruncSeries s(*this);
        for (auto& c : s.c_) c = -c;
        return s;
    }
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries s(std::min(a.order_, b.order_));
        for (int i = 0; i <= s.order_; ++i) s.c_[i] = a.c_[i] + b.c_[i];
        return s;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries s(std::min(a.order_, b.order_));
        for (int i = 0; i <= s.order_; ++i) s.c_[i] = a.c_[i] - b.c_[i];
        return s;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries s(std::min(a.order_, b.order_));
        for (int i = 0; i <= s.order_; ++i) {
            Rational acc(0);
            for (int j = 0; j <= i; ++j)
                if (!a.c_[j].is_zero()) acc += a.c_[j] * b.c_[i - j];
            s.c_[i] = acc;
        }
        return s;
    }
    friend TruncSeries operator*(const Rational& r, TruncSeries s) {
        for (auto& c : s.c_) c = c * r;
        return s;
    }
    /// Long division; the divisor's constant term must be invertible.
    friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) {
        if (b.c_[0].is_zero())
            throw std::domain_error("TruncSeries: division by series with zero constant term");
        TruncSeries s(std::min(a.order_, b.order_));
        for (int i = 0; i <= s.order_; ++i) {
            Rational acc = a.c_[i];
            for (int j = 1; j <= i; ++j)
                if (!b.c_[j].is_zero()) acc -= b.c_[j] * s.c_[i - j];
            s.c_[i] = acc / b.c_[0];
        }
        return s;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        int n = std::min(a.order_, b.order_);
        for (int i = 0; i <= n; ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }

    /// d/dz, exact through order - 1.
    TruncSeries derivative() const {
        if (order_ == 0) return TruncSeries(0);
        TruncSeries s(order_ - 1);
        for (int i = 1; i <= order_; ++i) s.c_[i - 1] = Rational(i) * c_[i];
        return s;
    }

    std::string str() const {
        std::string out;
        for (int i = 0; i <= order_; ++i) {
            if (c_[static_cast<size_t>(i)].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += c_[static_cast<size_t>(i)].str() + "*z^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

private:
    int order_;
    std::vector<Rational> c_;
};

/// log(1 + u) = sum (-1)^{m+1} u^m / m, truncated; u must vanish at 0.
inline TruncSeries log1p(const TruncSeries& u) {
    if (!u[0].is_zero()) throw std::domain_error("log1p: argument must vanish at z = 0");
    TruncSeries acc(u.order());
    TruncSeries pow = u;
    for (int m = 1; m <= u.order(); ++m) {
        Rational c(m % 2 == 1 ? 1 : -1, m);
        for (int i = m; i <= u.order(); ++i) acc.at(i) += c * pow[i];
        if (m < u.order()) pow = pow * u;
    }
    return acc;
}

/// f(g(z)) for g with zero constant term, by Horner on f's coefficients.
inline TruncSeries compose(const TruncSeries& f, const TruncSeries& g) {
    if (!g[0].is_zero()) throw std::domain_error("compose: inner series must vanish at z = 0");
    int order = std::min(f.order(), g.order());
    TruncSeries acc(order);
    for (int i = std::min(f.order(), order); i >= 0; --i) {
        acc = acc * g;
        acc.at(0) += f[i];
    }
    return acc;
}

/// Power-series expansion of numer/denom to the given order; denom(0) != 0.
inline TruncSeries ratfunc_expand(const RatPoly& numer, const RatPoly& denom, int order) {
    if (denom.coeff(0).is_zero())
        throw std::domain_error("ratfunc_expand: denominator must not vanish at 0");
    return TruncSeries::from_poly(numer, order) / TruncSeries::from_poly(denom, order);
}

/// Formal Laurent series: coefficients from z^{min_exp} up to z^{order},
/// exact through the carried order. Access below min_exp is exact zero.
/// Exact Laurent polynomials carry order = kExactOrder.
class LaurentSeries {
public:
    static constexpr int kExactOrder = 1 << 20;

    LaurentSeries(int min_exp, int order) : min_(min_exp), order_(order) {
        if (order < min_exp) throw std::invalid_argument("LaurentSeries: order < min_exp");
    }
    static LaurentSeries from_trunc(const TruncSeries& t, int shift = 0) {
        LaurentSeries s(shift, t.order() + shift);
        s.c_.resize(static_cast<size_t>(t.order()) + 1);
        for (int i = 0; i <= t.order(); ++i) s.c_[static_cast<size_t>(i)] = t[i];
        return s;
    }
    /// Exact finite Laurent polynomial with the given lowest exponent.
    static LaurentSeries laurent_poly(int min_exp, std::vector<Rational> coeffs) {
        LaurentSeries s(min_exp, kExactOrder);
        s.c_ = std::move(coeffs);
        return s;
    }

    int min_exp() const { return min_; }
    int order() const { return order_; }
    int stored_max() const { return min_ + static_cast<int>(c_.size()) - 1; }

    Rational coeff(int e) const {
        if (e > order_) throw std::logic_error("LaurentSeries: coefficient beyond carried order");
        if (e < min_ || e > stored_max()) return Rational(0);
        return c_[static_cast<size_t>(e - min_)];
    }
    Rational constant_term() const { return coeff(0); }

    bool negative_part_vanishes() const {
        for (int e = min_; e < 0 && e <= stored_max(); ++e)
            if (!coeff(e).is_zero()) return false;
        return true;
    }
    std::string first_nonzero_negative() const {
        for (int e = min_; e < 0 && e <= stored_max(); ++e)
            if (!coeff(e).is_zero())
                return "z^" + std::to_string(e) + " -> " + coeff(e).str();
        return "";
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        int mn = std::min(a.min_, b.min_);
        int ord = std::min(a.order_, b.order_);
        LaurentSeries s(mn, ord);
        int hi = std::min(ord, std::max(a.stored_max(), b.stored_max()));
        if (hi >= mn) {
            s.c_.resize(static_cast<size_t>(hi - mn) + 1);
            for (int e = mn; e <= hi; ++e)
                s.c_[static_cast<size_t>(e - mn)] =
                    (e <= a.order_ ? a.coeff(e) : Rational(0)) +
                    (e <= b.order_ ? b.coeff(e) : Rational(0));
        }
        return s;
    }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        return a + (Rational(-1) * b);
    }
    friend LaurentSeries operator*(const Rational& r, LaurentSeries s) {
        for (auto& c : s.c_) c = c * r;
        return s;
    }
    /// Product order follows the truncation rule min(a.order + b.min_exp,
    /// b.order + a.min_exp): every coefficient up to it is exact.
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        long ord = std::min<long>(static_cast<long>(a.order_) + b.min_,
                                  static_cast<long>(b.order_) + a.min_);
        ord = std::min<long>(ord, kExactOrder);
        int mn = a.min_ + b.min_;
        LaurentSeries s(mn, static_cast<int>(ord));
        int hi = std::min<int>(static_cast<int>(ord), a.stored_max() + b.stored_max());
        if (hi >= mn) {
            s.c_.resize(static_cast<size_t>(hi - mn) + 1);
            for (size_t i = 0; i < a.c_.size(); ++i) {
                if (a.c_[i].is_zero()) continue;
                for (size_t j = 0; j < b.c_.size(); ++j) {
                    int e = a.min_ + static_cast<int>(i) + b.min_ + static_cast<int>(j);
                    if (e > hi) break;
                    s.c_[static_cast<size_t>(e - mn)] += a.c_[i] * b.c_[j];
                }
            }
        }
        return s;
    }

private:
    int min_;
    int order_;
    std::vector<Rational> c_; // coefficient of z^{min_ + i}
};

/// Coefficient stream in Z/2^k, truncated like TruncSeries. All residues
/// lie in [0, 2^k).
class ModSeries {
public:
    ModSeries(unsigned k, int order) : k_(k), mod_(1ULL << k), c_(static_cast<size_t>(order) + 1) {
        if (k == 0 || k > 32) throw std::invalid_argument("ModSeries: need 1 <= k <= 32");
        if (order < 0) throw std::invalid_argument("ModSeries: order >= 0 required");
    }

    unsigned k() const { return k_; }
    std::uint64_t modulus() const { return mod_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    std::uint64_t operator[](int i) const { return c_.at(static_cast<size_t>(i)); }
    std::uint64_t& at(int i) { return c_.at(static_cast<size_t>(i)); }

    std::uint64_t reduce(long v) const {
        long long m = static_cast<long long>(mod_);
        long long r = v % m;
        if (r < 0) r += m;
        return static_cast<std::uint64_t>(r);
    }

    friend ModSeries operator+(const ModSeries& a, const ModSeries& b) {
        ModSeries s(a.k_, std::min(a.order(), b.order()));
        for (int i = 0; i <= s.order(); ++i) s.c_[i] = (a.c_[i] + b.c_[i]) % s.mod_;
        return s;
    }
    friend ModSeries operator-(const ModSeries& a, const ModSeries& b) {
        ModSeries s(a.k_, std::min(a.order(), b.order()));
        for (int i = 0; i <= s.order(); ++i) s.c_[i] = (a.c_[i] + s.mod_ - b.c_[i]) % s.mod_;
        return s;
    }
    friend ModSeries operator*(std::uint64_t r, ModSeries s) {
        r %= s.mod_;
        for (auto& c : s.c_) c = c * r % s.mod_;
        return s;
    }

    /// Inverse of an odd residue mod 2^k, by Newton lifting.
    static std::uint64_t invert_odd(std::uint64_t a, unsigned k) {
        std::uint64_t mod = 1ULL << k;
        a %= mod;
        if (a % 2 == 0) throw std::domain_error("ModSeries: even residue is not invertible");
        std::uint64_t x = 1;
        for (unsigned i = 0; i < 6; ++i) x = x * (2 + mod - a * x % mod) % mod;
        return x % mod;
    }

    /// Expansion of numer/denom over Z/2^k; denom constant term must be odd.
    static ModSeries ratfunc(const std::vector<long>& numer, const std::vector<long>& denom,
                             int order, unsigned k) {
        ModSeries s(k, order);
        if (denom.empty() || denom[0] % 2 == 0)
            throw std::domain_error("ModSeries::ratfunc: denominator constant term must be odd");
        std::uint64_t inv = invert_odd(s.reduce(denom[0]), k);
        for (int i = 0; i <= order; ++i) {
            std::uint64_t acc = i < static_cast<int>(numer.size()) ? s.reduce(numer[i]) : 0;
            for (int j = 1; j <= i && j < static_cast<int>(denom.size()); ++j)
                acc = (acc + s.mod_ - s.reduce(denom[j]) * s.c_[i - j] % s.mod_) % s.mod_;
            s.c_[i] = acc * inv % s.mod_;
        }
        return s;
    }

    const std::vector<std::uint64_t>& coeffs() const { return c_; }

private:
    unsigned k_;
    std::uint64_t mod_;
    std::vector<std::uint64_t> c_;
};

/// Smallest p >= 1 with stream[i + p] == stream[i] for every valid i,
/// witnessed by at least min_repeats full periods; nullopt if none.
template <typename T>
std::optional<size_t> detect_period(const std::vector<T>& stream, size_t min_repeats) {
    if (min_repeats == 0) throw std::invalid_argument("detect_period: min_repeats >= 1");
    for (size_t p = 1; p * min_repeats <= stream.size(); ++p) {
        bool ok = true;
        for (size_t i = 0; i + p < stream.size(); ++i)
            if (!(stream[i] == stream[i + p])) {
                ok = false;
                break;
            }
        if (ok) return p;
    }
    return std::nullopt;
}

} // namespace zagier
