#pragma once

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ring.hpp"

namespace strata {

// Dense univariate polynomial over Q in one formal variable. Normalized: no
// trailing zero coefficients; the zero polynomial has an empty list and
// degree -1.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(Rational c) {
        if (c != 0) c_.push_back(std::move(c));
    }
    QPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static QPoly variable() { return QPoly{Rational(0), Rational(1)}; }
    static QPoly from_coefficients(std::vector<Rational> coeffs) {
        QPoly p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const Rational& coeff(long i) const {
        static const Rational zero(0);
        if (i < 0 || i > degree()) return zero;
        return c_[static_cast<std::size_t>(i)];
    }
    const Rational& leading() const {
        if (is_zero()) throw std::domain_error("QPoly::leading: zero polynomial");
        return c_.back();
    }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return from_coefficients(std::move(r));
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return from_coefficients(std::move(r));
    }
    QPoly operator-() const {
        QPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return from_coefficients(std::move(r));
    }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    QPoly scale(const Rational& k) const {
        if (k == 0) return QPoly();
        QPoly r = *this;
        for (auto& c : r.c_) c *= k;
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Horner composition: this(arg).
    QPoly compose(const QPoly& arg) const {
        QPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * arg + QPoly(*it);
        return acc;
    }

    // Euclidean division: *this = q·div + r with deg r < deg div.
    std::pair<QPoly, QPoly> divrem(const QPoly& div) const {
        if (div.is_zero()) throw std::domain_error("QPoly::divrem: division by zero polynomial");
        QPoly r = *this;
        std::vector<Rational> q;
        if (r.degree() >= div.degree())
            q.assign(static_cast<std::size_t>(r.degree() - div.degree()) + 1, Rational(0));
        while (!r.is_zero() && r.degree() >= div.degree()) {
            const long shift = r.degree() - div.degree();
            const Rational factor = r.leading() / div.leading();
            q[static_cast<std::size_t>(shift)] = factor;
            for (long i = 0; i <= div.degree(); ++i)
                r.c_[static_cast<std::size_t>(i + shift)] -= factor * div.coeff(i);
            r.trim();
        }
        return {from_coefficients(std::move(q)), r};
    }

    QPoly monic() const {
        if (is_zero()) return *this;
        return scale(Rational(1) / leading());
    }

    std::string to_string(const std::string& var = "g") const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (long i = degree(); i >= 0; --i) {
            const Rational& c = coeff(i);
            if (c == 0) continue;
            Rational mag = c < 0 ? Rational(-c) : c;
            out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
            first = false;
            if (i == 0 || mag != 1) out << mag.get_str();
            if (i > 0) {
                if (mag != 1) out << "·";
                out << var;
                if (i > 1) out << "^" << i;
            }
        }
        return out.str();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// Monic-normalized Euclidean gcd.
inline QPoly poly_gcd(QPoly a, QPoly b) {
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        QPoly r = a.divrem(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a;
}

template <>
struct RingTraits<QPoly> {
    static QPoly zero() { return QPoly(); }
    static QPoly one() { return QPoly(Rational(1)); }
    static QPoly from_long(long n) { return QPoly(Rational(n)); }
    static QPoly div_long(const QPoly& a, long n) {
        if (n == 0) throw std::domain_error("QPoly: division by zero");
        return a.scale(rat(1, n));
    }
};

}  // namespace strata
