#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "bigfloat.hpp"
#include "gratfunc.hpp"

namespace strata {

// Finitely supported Laurent "polynomial" in P = pi^2 over an exact
// coefficient ring C (Rational for final results, GRatFunc for the engine's
// intermediates). Zero coefficients are never stored.
template <class C>
class PiLaurentT {
  public:
    PiLaurentT() = default;
    explicit PiLaurentT(C constant) { add_term(0, std::move(constant)); }
    PiLaurentT(int p_power, C coeff) { add_term(p_power, std::move(coeff)); }

    bool is_zero() const { return terms_.empty(); }

    void add_term(int p_power, const C& coeff) { accumulate(p_power, coeff); }

    const std::map<int, C>& terms() const { return terms_; }

    C coeff(int p_power) const {
        auto it = terms_.find(p_power);
        return it == terms_.end() ? C{} : it->second;
    }

    int min_power() const {
        if (is_zero()) throw std::domain_error("PiLaurent: zero value has no support");
        return terms_.begin()->first;
    }
    int max_power() const {
        if (is_zero()) throw std::domain_error("PiLaurent: zero value has no support");
        return terms_.rbegin()->first;
    }
    bool is_polynomial() const { return is_zero() || min_power() >= 0; }

    friend PiLaurentT operator+(const PiLaurentT& a, const PiLaurentT& b) {
        PiLaurentT r = a;
        for (const auto& [p, c] : b.terms_) r.accumulate(p, c);
        return r;
    }
    friend PiLaurentT operator-(const PiLaurentT& a, const PiLaurentT& b) {
        PiLaurentT r = a;
        for (const auto& [p, c] : b.terms_) r.accumulate(p, -c);
        return r;
    }
    PiLaurentT operator-() const {
        PiLaurentT r;
        for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
        return r;
    }
    friend PiLaurentT operator*(const PiLaurentT& a, const PiLaurentT& b) {
        PiLaurentT r;
        for (const auto& [pa, ca] : a.terms_)
            for (const auto& [pb, cb] : b.terms_) r.accumulate(pa + pb, ca * cb);
        return r;
    }
    friend bool operator==(const PiLaurentT& a, const PiLaurentT& b) {
        return a.terms_ == b.terms_;
    }

    PiLaurentT scale(const C& k) const {
        PiLaurentT r;
        for (const auto& [p, c] : terms_) r.accumulate(p, c * k);
        return r;
    }
    PiLaurentT shift_power(int dp) const {
        PiLaurentT r;
        for (const auto& [p, c] : terms_) r.terms_.emplace(p + dp, c);
        return r;
    }

  private:
    void accumulate(int p, const C& c) {
        auto it = terms_.find(p);
        if (it == terms_.end()) {
            if (!(c == C{})) terms_.emplace(p, c);
            return;
        }
        it->second = it->second + c;
        if (it->second == C{}) terms_.erase(it);
    }

    std::map<int, C> terms_;
};

using PiLaurent = PiLaurentT<Rational>;

// A single monomial q·pi^k (k possibly negative), the exact form of the
// volume and Siegel-Veech conversions.
struct PiMonomialValue {
    Rational rational_part;
    long pi_exponent = 0;

    std::string to_string() const {
        if (rational_part == 0) return "0";
        if (pi_exponent == 0) return rational_part.get_str();
        return rational_part.get_str() + "·pi^" + std::to_string(pi_exponent);
    }
};

inline BigFloat evaluate(const PiMonomialValue& v, mpfr_prec_t prec) {
    const BigFloat pi = pi_value(prec);
    BigFloat r = BigFloat::from(v.rational_part, prec);
    if (v.pi_exponent > 0) r = r * pi.pow_ui(static_cast<unsigned long>(v.pi_exponent));
    if (v.pi_exponent < 0) r = r / pi.pow_ui(static_cast<unsigned long>(-v.pi_exponent));
    return r;
}

// Exact-to-numeric: sum of q·pi^{2k} over the support.
inline BigFloat evaluate(const PiLaurent& v, mpfr_prec_t prec) {
    const BigFloat pi = pi_value(prec);
    BigFloat total(prec);
    for (const auto& [k, q] : v.terms()) {
        BigFloat term = BigFloat::from(q, prec);
        if (k > 0) term = term * pi.pow_ui(static_cast<unsigned long>(2 * k));
        if (k < 0) term = term / pi.pow_ui(static_cast<unsigned long>(-2 * k));
        total = total + term;
    }
    return total;
}

// Rendering: terms ascending in the pi-power, e.g. "-1/12·pi^2 + 1/288·pi^4".
inline std::string to_string(const PiLaurent& v) {
    if (v.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, q] : v.terms()) {
        const bool neg = q < 0;
        Rational mag = neg ? Rational(-q) : q;
        out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        if (k == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) out << mag.get_str() << "·";
        out << "pi^" << 2 * k;
    }
    return out.str();
}

}  // namespace strata
