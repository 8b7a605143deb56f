#pragma once

#include <stdexcept>
#include <vector>

#include "bigfloat.hpp"
#include "pi_laurent.hpp"
#include "recursion.hpp"

namespace strata {

// Vol(2g-2) = 2(2pi)^{2g}/(2g-1)! · a_g = (2^{2g+1} a_g/(2g-1)!) · pi^{2g}.
inline PiMonomialValue volume(long g, const Rational& a_g) {
    if (g < 1) throw std::invalid_argument("volume: g must be >= 1");
    const Rational q = Rational(pow2(2 * g + 1)) * a_g / Rational(factorial(2 * g - 1));
    return PiMonomialValue{q, 2 * g};
}

// c_area(2g-2) = d_g/(4 pi^2 a_g) = (d_g/(4 a_g)) · pi^{-2}.
inline PiMonomialValue c_area(long g, const Rational& a_g, const Rational& d_g) {
    if (g < 1) throw std::invalid_argument("c_area: g must be >= 1");
    if (a_g == 0) throw std::invalid_argument("c_area: a_g must be nonzero");
    return PiMonomialValue{d_g / (Rational(4) * a_g), -2};
}

struct StrataRow {
    long g = 0;
    Rational a;
    Rational d;
    PiMonomialValue vol;
    PiMonomialValue c_area;
    BigFloat vol_numeric;
    BigFloat c_area_numeric;
    BigFloat eps1_conjecture;  // (2g-1)·Vol/4 - 1
    BigFloat eps1_theorem;     // (2g-2)·Vol/4 - 1
    BigFloat eps2;             // c_area - 1/2
};

struct EpsilonResiduals {
    BigFloat eps1_conjecture;
    BigFloat eps1_theorem;
    BigFloat eps2;
};

inline EpsilonResiduals epsilon_residuals(long g, const PiMonomialValue& vol,
                                          const PiMonomialValue& area, mpfr_prec_t precision) {
    const BigFloat one = BigFloat::from(1L, precision);
    const BigFloat v = evaluate(vol, precision);
    const BigFloat c = evaluate(area, precision);
    return EpsilonResiduals{
        v.mul_long(2 * g - 1).div_long(4) - one,
        v.mul_long(2 * g - 2).div_long(4) - one,
        c - BigFloat::from(rat(1, 2), precision),
    };
}

inline StrataRow make_row(const StrataSequences& seq, long g, mpfr_prec_t precision) {
    if (g < 1 || g > seq.g_max()) throw std::invalid_argument("make_row: genus outside computed range");
    StrataRow row;
    row.g = g;
    row.a = seq.a(g);
    row.d = seq.d(g);
    row.vol = volume(g, row.a);
    row.c_area = c_area(g, row.a, row.d);
    row.vol_numeric = evaluate(row.vol, precision);
    row.c_area_numeric = evaluate(row.c_area, precision);
    const auto eps = epsilon_residuals(g, row.vol, row.c_area, precision);
    row.eps1_conjecture = eps.eps1_conjecture;
    row.eps1_theorem = eps.eps1_theorem;
    row.eps2 = eps.eps2;
    return row;
}

inline std::vector<StrataRow> make_rows(const StrataSequences& seq, long g_max, mpfr_prec_t precision) {
    std::vector<StrataRow> rows;
    rows.reserve(static_cast<std::size_t>(g_max));
    for (long g = 1; g <= g_max; ++g) rows.push_back(make_row(seq, g, precision));
    return rows;
}

// Rescaled residuals that the uniform-smallness conjecture predicts tend to 1
// for large g: with dim = 2g, the columns are -eps1·6·dim/pi^2 (both eps1
// normalizations) and -eps2·2·dim.
struct RescaledResiduals {
    long g = 0;
    BigFloat eps1_conjecture_rescaled;
    BigFloat eps1_theorem_rescaled;
    BigFloat eps2_rescaled;
};

inline RescaledResiduals rescaled_residual_row(const StrataRow& row, mpfr_prec_t precision) {
    const BigFloat pi2 = BigFloat::pi(precision) * BigFloat::pi(precision);
    const long dim = 2 * row.g;
    return RescaledResiduals{
        row.g,
        -(row.eps1_conjecture.mul_long(6 * dim)) / pi2,
        -(row.eps1_theorem.mul_long(6 * dim)) / pi2,
        -(row.eps2.mul_long(2 * dim)),
    };
}

inline std::vector<RescaledResiduals> rescaled_residual_data(const std::vector<StrataRow>& rows,
                                                             mpfr_prec_t precision) {
    std::vector<RescaledResiduals> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(rescaled_residual_row(r, precision));
    return out;
}

}  // namespace strata
