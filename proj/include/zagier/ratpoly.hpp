#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zagier/rational.hpp"

namespace zagier {

/// Dense univariate polynomial with Rational coefficients, indexed by degree.
/// The highest stored coefficient is nonzero; the zero polynomial stores
/// nothing and has degree -1. Evaluation and all arithmetic are exact.
class RatPoly {
public:
    RatPoly() = default;
    RatPoly(const Rational& c) { // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) c_.push_back(c);
    }
    RatPoly(long c) : RatPoly(Rational(c)) {} // NOLINT(google-explicit-constructor)

    static RatPoly from_coeffs(std::vector<Rational> coeffs) {
        RatPoly p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }
    /// The monomial c * x^k.
    static RatPoly monomial(const Rational& c, unsigned k) {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return from_coeffs(std::move(v));
    }
    static RatPoly x() { return monomial(1, 1); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    Rational coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size())) return Rational(0);
        return c_[static_cast<size_t>(i)];
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& x0) const {
        Rational r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x0 + c_[i];
        return r;
    }

    RatPoly derivative() const {
        if (c_.size() <= 1) return RatPoly();
        std::vector<Rational> d(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return from_coeffs(std::move(d));
    }

    /// Composition this(g(x)), by Horner over the coefficients.
    RatPoly compose(const RatPoly& g) const {
        RatPoly r;
        for (size_t i = c_.size(); i-- > 0;) r = r * g + RatPoly(c_[i]);
        return r;
    }

    RatPoly operator-() const {
        RatPoly r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }
    RatPoly& operator+=(const RatPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    RatPoly& operator-=(const RatPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return RatPoly();
        std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
        }
        return from_coeffs(std::move(prod));
    }
    RatPoly& operator*=(const RatPoly& o) { return *this = *this * o; }

    friend RatPoly operator*(const Rational& s, RatPoly p) {
        for (auto& c : p.c_) c = c * s;
        p.trim();
        return p;
    }
    RatPoly operator/(const Rational& s) const {
        if (s.is_zero()) throw std::domain_error("RatPoly: division by zero scalar");
        return Rational(s.denominator(), s.numerator()) * (*this);
    }

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

    const std::vector<Rational>& coeffs() const { return c_; }

    /// Human form, low degree first: "3/4 + 1/2*x^1 + ...".
    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += c_[i].str();
            if (i > 0) s += "*x^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

} // namespace zagier
