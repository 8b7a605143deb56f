#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bernoulli.hpp"
#include "ring.hpp"

namespace strata {

// Truncated formal power series with only even powers of t, stored by
// half-degree: coeff(h) multiplies t^{2h}. Immutable by convention: all
// operations return new values. Binary operations truncate to the minimum
// order of the operands; coefficients beyond the truncation order do not
// exist and are never fabricated.
template <ExactRing R>
class EvenSeries {
  public:
    explicit EvenSeries(long order) : c_(checked_size(order), RingTraits<R>::zero()) {}

    static EvenSeries zero(long order) { return EvenSeries(order); }
    static EvenSeries one(long order) {
        EvenSeries s(order);
        s.c_[0] = RingTraits<R>::one();
        return s;
    }
    static EvenSeries from_coefficients(std::vector<R> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("EvenSeries: empty coefficient list");
        EvenSeries s(static_cast<long>(coeffs.size()) - 1);
        s.c_ = std::move(coeffs);
        return s;
    }

    long order() const { return static_cast<long>(c_.size()) - 1; }

    const R& coeff(long h) const {
        if (h < 0 || h > order())
            throw std::out_of_range("EvenSeries::coeff: half-degree " + std::to_string(h) +
                                    " outside truncation order " + std::to_string(order()));
        return c_[static_cast<std::size_t>(h)];
    }

    void set(long h, R value) {
        if (h < 0 || h > order()) throw std::out_of_range("EvenSeries::set: out of range");
        c_[static_cast<std::size_t>(h)] = std::move(value);
    }

    EvenSeries truncated(long new_order) const {
        const long n = std::min(new_order, order());
        if (n < 0) throw std::invalid_argument("EvenSeries::truncated: negative order");
        EvenSeries s(n);
        std::copy(c_.begin(), c_.begin() + n + 1, s.c_.begin());
        return s;
    }

    friend EvenSeries operator+(const EvenSeries& a, const EvenSeries& b) {
        EvenSeries s(std::min(a.order(), b.order()));
        for (long h = 0; h <= s.order(); ++h) s.c_[h] = a.c_[h] + b.c_[h];
        return s;
    }
    friend EvenSeries operator-(const EvenSeries& a, const EvenSeries& b) {
        EvenSeries s(std::min(a.order(), b.order()));
        for (long h = 0; h <= s.order(); ++h) s.c_[h] = a.c_[h] - b.c_[h];
        return s;
    }
    friend EvenSeries operator*(const EvenSeries& a, const EvenSeries& b) {
        EvenSeries s(std::min(a.order(), b.order()));
        for (long i = 0; i <= s.order(); ++i) {
            if (a.c_[i] == RingTraits<R>::zero()) continue;
            for (long j = 0; i + j <= s.order(); ++j) {
                s.c_[i + j] = s.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return s;
    }
    friend bool operator==(const EvenSeries& a, const EvenSeries& b) { return a.c_ == b.c_; }

    EvenSeries scale(const R& k) const {
        EvenSeries s(order());
        for (long h = 0; h <= order(); ++h) s.c_[h] = c_[h] * k;
        return s;
    }
    EvenSeries scale_long(long k) const { return scale(RingTraits<R>::from_long(k)); }

    // Binary exponentiation; truncation order is preserved.
    EvenSeries pow(unsigned long n) const {
        EvenSeries result = one(order());
        EvenSeries base = *this;
        while (n > 0) {
            if (n & 1UL) result = result * base;
            base = base * base;
            n >>= 1UL;
        }
        return result;
    }

    // Independent exp(n·log a) route, kept as a cross-check of pow();
    // requires constant term 1.
    EvenSeries pow_via_exp_log(unsigned long n) const
        requires ExactRingWithIntDiv<R>
    {
        return log().scale_long(static_cast<long>(n)).exp();
    }

    // log of a series with constant term 1, by the derivative recurrence
    // h·l_h = h·a_h − sum_{j=1}^{h−1} j·l_j·a_{h−j}.
    EvenSeries log() const
        requires ExactRingWithIntDiv<R>
    {
        if (!(c_[0] == RingTraits<R>::one()))
            throw std::domain_error("EvenSeries::log: constant term must be 1");
        EvenSeries l(order());
        for (long h = 1; h <= order(); ++h) {
            R acc = c_[h] * RingTraits<R>::from_long(h);
            for (long j = 1; j < h; ++j) acc = acc - l.c_[j] * RingTraits<R>::from_long(j) * c_[h - j];
            l.c_[h] = RingTraits<R>::div_long(acc, h);
        }
        return l;
    }

    // exp of a series with constant term 0, by h·e_h = sum_{j=1}^{h} j·u_j·e_{h−j}.
    EvenSeries exp() const
        requires ExactRingWithIntDiv<R>
    {
        if (!(c_[0] == RingTraits<R>::zero()))
            throw std::domain_error("EvenSeries::exp: constant term must be 0");
        EvenSeries e(order());
        e.c_[0] = RingTraits<R>::one();
        for (long h = 1; h <= order(); ++h) {
            R acc = RingTraits<R>::zero();
            for (long j = 1; j <= h; ++j) acc = acc + c_[j] * RingTraits<R>::from_long(j) * e.c_[h - j];
            e.c_[h] = RingTraits<R>::div_long(acc, h);
        }
        return e;
    }

  private:
    static std::size_t checked_size(long order) {
        if (order < 0) throw std::invalid_argument("EvenSeries: negative truncation order");
        return static_cast<std::size_t>(order) + 1;
    }

    std::vector<R> c_;
};

// S(t) = (t/2)/sin(t/2) = 1 + sum_{h>=1} b_h t^{2h}.
inline EvenSeries<Rational> s_series(long order) {
    EvenSeries<Rational> s(order);
    s.set(0, Rational(1));
    for (long h = 1; h <= order; ++h) s.set(h, b_coeff(h));
    return s;
}

// Taylor series of sin(t/2)/(t/2): coefficient of t^{2h} is (−1)^h / (4^h (2h+1)!).
inline EvenSeries<Rational> sin_half_over_half_series(long order) {
    EvenSeries<Rational> s(order);
    for (long h = 0; h <= order; ++h) {
        Integer den = factorial(2 * h + 1);
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * h));
        s.set(h, Rational(h % 2 == 0 ? 1 : -1) / Rational(den));
    }
    return s;
}

// F(t) = 1 + sum (2h−1) a_h t^{2h}, from a_1..a_n (as many as fit the order).
inline EvenSeries<Rational> f_series(std::span<const Rational> a, long order) {
    EvenSeries<Rational> s(order);
    s.set(0, Rational(1));
    for (long h = 1; h <= order && h <= static_cast<long>(a.size()); ++h)
        s.set(h, Rational(2 * h - 1) * a[static_cast<std::size_t>(h - 1)]);
    return s;
}

// Delta(t) = sum (2h−1) d_h t^{2h}.
inline EvenSeries<Rational> delta_series(std::span<const Rational> d, long order) {
    EvenSeries<Rational> s(order);
    for (long h = 1; h <= order && h <= static_cast<long>(d.size()); ++h)
        s.set(h, Rational(2 * h - 1) * d[static_cast<std::size_t>(h - 1)]);
    return s;
}

}  // namespace strata
