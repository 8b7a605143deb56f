#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpoly.hpp"

namespace strata {

// Rational function in the formal variable g over Q. Normal form: gcd-reduced
// with a monic denominator, so equality is structural.
class GRatFunc {
  public:
    GRatFunc() : num_(), den_(RingTraits<QPoly>::one()) {}
    explicit GRatFunc(Rational c) : num_(std::move(c)), den_(RingTraits<QPoly>::one()) {}
    explicit GRatFunc(QPoly p) : num_(std::move(p)), den_(RingTraits<QPoly>::one()) {}
    GRatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend GRatFunc operator+(const GRatFunc& a, const GRatFunc& b) {
        return GRatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend GRatFunc operator-(const GRatFunc& a, const GRatFunc& b) {
        return GRatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    GRatFunc operator-() const {
        GRatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend GRatFunc operator*(const GRatFunc& a, const GRatFunc& b) {
        return GRatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend GRatFunc operator/(const GRatFunc& a, const GRatFunc& b) {
        if (b.is_zero()) throw std::domain_error("GRatFunc: division by zero");
        return GRatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const GRatFunc& a, const GRatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Substitution g -> arg(g), e.g. the shift g -> g - j.
    GRatFunc substitute(const QPoly& arg) const {
        return GRatFunc(num_.compose(arg), den_.compose(arg));
    }

    Rational eval(const Rational& x) const {
        const Rational d = den_.eval(x);
        if (d == 0) throw std::domain_error("GRatFunc::eval: pole at evaluation point");
        return num_.eval(x) / d;
    }

    // Expansion at g = infinity: f = sum_{m >= 0} coeffs[m] · g^{-(lead+m)},
    // exact to any requested number of terms. lead = deg den - deg num.
    struct Expansion {
        long lead = 0;
        std::vector<Rational> coeffs;
    };
    Expansion expand_at_infinity(long terms) const {
        if (terms < 0) throw std::invalid_argument("GRatFunc: negative term count");
        Expansion e;
        if (is_zero() || terms == 0) {
            e.lead = 0;
            e.coeffs.assign(static_cast<std::size_t>(terms), Rational(0));
            return e;
        }
        const long n = num_.degree(), m = den_.degree();
        e.lead = m - n;
        // In x = 1/g: num = g^n·N(x), den = g^m·D(x) with N(x) = sum num[n-i] x^i.
        auto reversed = [](const QPoly& p, long deg) {
            std::vector<Rational> r(static_cast<std::size_t>(deg) + 1, Rational(0));
            for (long i = 0; i <= deg; ++i) r[static_cast<std::size_t>(i)] = p.coeff(deg - i);
            return r;
        };
        const auto N = reversed(num_, n);
        const auto D = reversed(den_, m);
        // Power-series division N/D, D[0] = leading coefficient of den (nonzero).
        e.coeffs.assign(static_cast<std::size_t>(terms), Rational(0));
        for (long i = 0; i < terms; ++i) {
            Rational acc = i < static_cast<long>(N.size()) ? N[static_cast<std::size_t>(i)] : Rational(0);
            for (long j = 1; j <= i && j < static_cast<long>(D.size()); ++j)
                acc -= D[static_cast<std::size_t>(j)] * e.coeffs[static_cast<std::size_t>(i - j)];
            e.coeffs[static_cast<std::size_t>(i)] = acc / D[0];
        }
        return e;
    }

    std::string to_string(const std::string& var = "g") const {
        if (den_ == RingTraits<QPoly>::one()) return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

  private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("GRatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = RingTraits<QPoly>::one();
            return;
        }
        const QPoly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divrem(g).first;
            den_ = den_.divrem(g).first;
        }
        const Rational lead = den_.leading();
        if (lead != 1) {
            const Rational inv = Rational(1) / lead;
            num_ = num_.scale(inv);
            den_ = den_.scale(inv);
        }
    }

    QPoly num_, den_;
};

}  // namespace strata
