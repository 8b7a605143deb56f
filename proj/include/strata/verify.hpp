#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "asymptotics.hpp"
#include "bigfloat.hpp"

namespace strata {

enum class ExpansionTarget { volume, sv };

// The exact dimensionless quantity each expansion approximates:
//   volume: 2g(2g-1) a_g / ((2g)! b_g), constant term 1;
//   sv:     d_g b_g / (a_g b_{g-1}),    constant term 1/2.
inline Rational exact_normalized_value(ExpansionTarget target, const StrataSequences& seq, long g) {
    if (g < 1 || g > seq.g_max())
        throw std::invalid_argument("exact_normalized_value: genus outside computed range");
    if (target == ExpansionTarget::volume) {
        Rational r = seq.a(g) * Rational(2 * g) * Rational(2 * g - 1);
        return r / (Rational(factorial(2 * g)) * seq.b(g));
    }
    if (g < 2) throw std::invalid_argument("exact_normalized_value: sv needs g >= 2");
    return seq.d(g) * seq.b(g) / (seq.a(g) * seq.b(g - 1));
}

struct OrderFitReport {
    long order = 0;
    double slope = 0.0;
    double threshold = 0.0;
    bool pass = false;
    bool monotone = true;                            // residuals strictly decreasing in g
    std::vector<std::pair<long, double>> residuals;  // (g, |exact - truncated|)
};

// Least-squares slope of log residual against log g over [g_lo, g_hi].
// Passes iff slope <= -(order + 0.5).
inline OrderFitReport verify_order(const AsympExpansion& expansion, ExpansionTarget target,
                                   const StrataSequences& rows, long g_lo, long g_hi, long order,
                                   mpfr_prec_t precision = 512) {
    if (g_lo < 2 || g_hi <= g_lo) throw std::invalid_argument("verify_order: bad genus range");
    if (g_hi > rows.g_max()) throw std::invalid_argument("verify_order: rows not computed far enough");
    OrderFitReport rep;
    rep.order = order;
    rep.threshold = -(static_cast<double>(order) + 0.5);

    BigFloat sx(precision), sy(precision), sxx(precision), sxy(precision);
    long n = 0;
    BigFloat prev(precision);
    for (long g = g_lo; g <= g_hi; ++g) {
        const BigFloat exact = BigFloat::from(exact_normalized_value(target, rows, g), precision);
        const BigFloat approx = expansion.evaluate(g, precision);
        const BigFloat r = (exact - approx).abs();
        if (r.is_zero())
            throw std::logic_error("verify_order: exactly zero residual (precision exhausted)");
        rep.residuals.emplace_back(g, r.to_double());
        if (n > 0 && !(r < prev)) rep.monotone = false;
        prev = r;
        const BigFloat x = BigFloat::from(g, precision).log();
        const BigFloat y = r.log();
        sx = sx + x;
        sy = sy + y;
        sxx = sxx + x * x;
        sxy = sxy + x * y;
        ++n;
    }
    const BigFloat nn = BigFloat::from(n, precision);
    const BigFloat num = nn * sxy - sx * sy;
    const BigFloat den = nn * sxx - sx * sx;
    rep.slope = (num / den).to_double();
    rep.pass = rep.slope <= rep.threshold;
    return rep;
}

// Convenience: build the expansion for the target and fit it.
inline OrderFitReport verify_order(ExpansionTarget target, const StrataSequences& rows,
                                   long g_lo, long g_hi, long order,
                                   mpfr_prec_t precision = 512) {
    const AsympExpansion e = target == ExpansionTarget::volume ? volume_expansion(order, rows)
                                                               : sv_expansion(order, rows);
    return verify_order(e, target, rows, g_lo, g_hi, order, precision);
}

}  // namespace strata
