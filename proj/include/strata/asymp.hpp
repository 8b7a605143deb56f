#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "pi_laurent.hpp"

namespace strata {

// Truncated expansion at g = infinity:
//   sum_{m=0}^{terms-1} coefficient[m] · g^{-(leading_order + m)},
// with PiLaurent coefficients. The window [leading_order, end) is the set of
// exponents on which the expansion is exact; exponents below leading_order
// are exactly zero, exponents at or beyond end are unknown (truncated).
class AsympExpansion {
  public:
    AsympExpansion() = default;
    AsympExpansion(long leading_order, std::vector<PiLaurent> coefficients)
        : lead_(leading_order), c_(std::move(coefficients)) {
        normalize();
    }

    bool is_zero() const { return c_.empty(); }
    long leading_order() const {
        if (is_zero()) throw std::domain_error("AsympExpansion: zero expansion has no leading order");
        return lead_;
    }
    long end_order() const { return lead_ + static_cast<long>(c_.size()); }
    long terms() const { return static_cast<long>(c_.size()); }

    const PiLaurent& leading_coefficient() const {
        if (is_zero()) throw std::domain_error("AsympExpansion: zero expansion");
        return c_.front();
    }

    // Coefficient of g^{-exponent}; exact zeros below the window are returned
    // as zero, exponents beyond the truncation are a hard error.
    PiLaurent coefficient_at(long exponent) const {
        if (!is_zero() && exponent >= end_order())
            throw std::out_of_range("AsympExpansion: exponent beyond truncation");
        if (is_zero() || exponent < lead_) return PiLaurent();
        return c_[static_cast<std::size_t>(exponent - lead_)];
    }

    friend AsympExpansion operator+(const AsympExpansion& a, const AsympExpansion& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const long lo = std::min(a.lead_, b.lead_);
        const long end = std::min(a.end_order(), b.end_order());
        std::vector<PiLaurent> c;
        for (long e = lo; e < end; ++e) c.push_back(a.coefficient_at(e) + b.coefficient_at(e));
        return AsympExpansion(lo, std::move(c));
    }
    friend AsympExpansion operator-(const AsympExpansion& a, const AsympExpansion& b) {
        return a + b.negated();
    }
    AsympExpansion negated() const {
        AsympExpansion r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend AsympExpansion operator*(const AsympExpansion& a, const AsympExpansion& b) {
        if (a.is_zero() || b.is_zero()) return AsympExpansion();
        const long n = std::min(a.terms(), b.terms());
        std::vector<PiLaurent> c(static_cast<std::size_t>(n));
        for (long i = 0; i < n; ++i)
            for (long j = 0; i + j < n; ++j)
                c[static_cast<std::size_t>(i + j)] =
                    c[static_cast<std::size_t>(i + j)] + a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
        return AsympExpansion(a.lead_ + b.lead_, std::move(c));
    }

    // Long division; the divisor's leading coefficient must be an invertible
    // monomial q·P^k.
    friend AsympExpansion operator/(const AsympExpansion& a, const AsympExpansion& b) {
        if (b.is_zero()) throw std::domain_error("AsympExpansion: division by zero");
        const PiLaurent b0_inv = invert_monomial(b.c_.front());
        if (a.is_zero()) return AsympExpansion();
        const long n = std::min(a.terms(), b.terms());
        std::vector<PiLaurent> q(static_cast<std::size_t>(n));
        for (long m = 0; m < n; ++m) {
            PiLaurent acc = a.c_[static_cast<std::size_t>(m)];
            for (long j = 1; j <= m; ++j)
                acc = acc - b.c_[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(m - j)];
            q[static_cast<std::size_t>(m)] = acc * b0_inv;
        }
        return AsympExpansion(a.lead_ - b.lead_, std::move(q));
    }

    AsympExpansion shifted(long delta) const {
        AsympExpansion r = *this;
        r.lead_ += delta;
        return r;
    }

    // Keep only exponents <= max_exponent.
    AsympExpansion truncated_to(long max_exponent) const {
        if (is_zero() || max_exponent < lead_) return AsympExpansion();
        const long n = std::min(terms(), max_exponent - lead_ + 1);
        return AsympExpansion(lead_, std::vector<PiLaurent>(c_.begin(), c_.begin() + n));
    }

    bool all_coefficients_polynomial_in_pi2() const {
        return std::all_of(c_.begin(), c_.end(), [](const PiLaurent& c) { return c.is_polynomial(); });
    }

    // Numeric value of the truncated expansion at integer g.
    BigFloat evaluate(long g, mpfr_prec_t prec) const {
        BigFloat total(prec);
        if (g <= 0) throw std::invalid_argument("AsympExpansion::evaluate: g must be positive");
        for (long m = 0; m < terms(); ++m) {
            const long e = lead_ + m;
            BigFloat term = strata::evaluate(c_[static_cast<std::size_t>(m)], prec);
            const BigFloat ge = BigFloat::from(g, prec).pow_ui(static_cast<unsigned long>(e < 0 ? -e : e));
            total = total + (e >= 0 ? term / ge : term * ge);
        }
        return total;
    }

    static PiLaurent invert_monomial(const PiLaurent& v) {
        if (v.is_zero() || v.terms().size() != 1)
            throw std::domain_error("AsympExpansion: leading coefficient is not an invertible monomial");
        const auto& [p, q] = *v.terms().begin();
        return PiLaurent(-p, Rational(1) / q);
    }

  private:
    void normalize() {
        std::size_t drop = 0;
        while (drop < c_.size() && c_[drop].is_zero()) ++drop;
        if (drop > 0) {
            lead_ += static_cast<long>(drop);
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(drop));
        }
        if (c_.empty()) lead_ = 0;
    }

    long lead_ = 0;
    std::vector<PiLaurent> c_;
};

// The engine's exact intermediates: Laurent in P = pi^2 with rational-function
// (in g) coefficients.
using PiRatFunc = PiLaurentT<GRatFunc>;

// Exact expansion of a PiRatFunc on the exponent window [lo, hi]. Terms whose
// 1/g-expansion starts below lo must cancel exactly across the P-powers;
// surviving mass below lo is an internal-consistency hard failure.
inline AsympExpansion expand_on_window(const PiRatFunc& f, long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("expand_on_window: empty window");
    std::map<long, PiLaurent> acc;
    for (const auto& [p, rf] : f.terms()) {
        if (rf.is_zero()) continue;
        const long lead = rf.den().degree() - rf.num().degree();
        if (lead > hi) continue;
        const long terms = hi - lead + 1;
        const auto full = rf.expand_at_infinity(terms);
        for (long m = 0; m < terms; ++m) {
            const Rational& q = full.coeffs[static_cast<std::size_t>(m)];
            if (q == 0) continue;
            acc[full.lead + m].add_term(p, q);
        }
    }
    std::vector<PiLaurent> window(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [e, c] : acc) {
        if (c.is_zero()) continue;
        if (e < lo)
            throw std::logic_error("expand_on_window: nonzero mass below the expected leading order");
        if (e <= hi) window[static_cast<std::size_t>(e - lo)] = c;
    }
    return AsympExpansion(lo, std::move(window));
}

}  // namespace strata
