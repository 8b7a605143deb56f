#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cache.hpp"
#include "invariants.hpp"

namespace strata {

enum class TableFormat { csv, json };
enum class Normalization { conjecture, theorem };

// Decimal digits carried by numeric columns: floor(bits·log10(2)), clamped.
inline int table_digits(mpfr_prec_t bits) {
    const long d = static_cast<long>(0.30103 * static_cast<double>(bits));
    if (d < 8) return 8;
    if (d > 50) return 50;
    return static_cast<int>(d);
}

inline std::string render_table(const std::vector<StrataRow>& rows, TableFormat format,
                                mpfr_prec_t precision, long g_max) {
    const int digits = table_digits(precision);
    if (format == TableFormat::csv) {
        std::ostringstream out;
        out << "# minimal-stratum volume table\n";
        out << "# format_version: " << kCacheFormatVersion << "\n";
        out << "# precision_bits: " << precision << "\n";
        out << "# digits: " << digits << "\n";
        out << "# gmax: " << g_max << "\n";
        out << "# note: g=1 degenerates under the (2g-2) normalization (eps1_theorem = -1)\n";
        out << "g,a,d,vol_exact,vol_numeric,c_area_exact,c_area_numeric,"
               "eps1_conjecture,eps1_theorem,eps2\n";
        for (const auto& r : rows) {
            out << r.g << ',' << to_fraction_string(r.a) << ',' << to_fraction_string(r.d) << ','
                << r.vol.to_string() << ',' << r.vol_numeric.to_string(digits) << ','
                << r.c_area.to_string() << ',' << r.c_area_numeric.to_string(digits) << ','
                << r.eps1_conjecture.to_string(digits) << ',' << r.eps1_theorem.to_string(digits)
                << ',' << r.eps2.to_string(digits) << '\n';
        }
        return out.str();
    }
    nlohmann::ordered_json j;
    j["format_version"] = kCacheFormatVersion;
    j["precision_bits"] = static_cast<long>(precision);
    j["digits"] = digits;
    j["gmax"] = g_max;
    j["note"] = "g=1 degenerates under the (2g-2) normalization (eps1_theorem = -1)";
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["g"] = r.g;
        row["a"] = to_fraction_string(r.a);
        row["d"] = to_fraction_string(r.d);
        row["vol_exact"] = r.vol.to_string();
        row["vol_numeric"] = r.vol_numeric.to_string(digits);
        row["c_area_exact"] = r.c_area.to_string();
        row["c_area_numeric"] = r.c_area_numeric.to_string(digits);
        row["eps1_conjecture"] = r.eps1_conjecture.to_string(digits);
        row["eps1_theorem"] = r.eps1_theorem.to_string(digits);
        row["eps2"] = r.eps2.to_string(digits);
        j["rows"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

// Plot columns: g, g·|eps1|, g·|eps2|, and the rescaled residuals predicted
// to tend to 1. The g=1 row is excluded under the theorem normalization
// (its 2g-2 factor degenerates).
inline std::string render_plotdata(const std::vector<StrataRow>& rows, Normalization norm,
                                   mpfr_prec_t precision) {
    const int digits = table_digits(precision);
    std::ostringstream out;
    out << "# minimal-stratum residual decay data\n";
    out << "# precision_bits: " << precision << "\n";
    out << "# normalization: " << (norm == Normalization::conjecture ? "conjecture" : "theorem")
        << "\n";
    out << "g,g_abs_eps1,g_abs_eps2,rescaled_eps1,rescaled_eps2\n";
    for (const auto& r : rows) {
        if (norm == Normalization::theorem && r.g == 1) continue;
        const BigFloat& eps1 = norm == Normalization::conjecture ? r.eps1_conjecture : r.eps1_theorem;
        const auto rescaled = rescaled_residual_row(r, precision);
        const BigFloat& rescaled1 = norm == Normalization::conjecture
                                        ? rescaled.eps1_conjecture_rescaled
                                        : rescaled.eps1_theorem_rescaled;
        out << r.g << ',' << eps1.abs().mul_long(r.g).to_string(digits) << ','
            << r.eps2.abs().mul_long(r.g).to_string(digits) << ','
            << rescaled1.to_string(digits) << ',' << rescaled.eps2_rescaled.to_string(digits)
            << '\n';
    }
    return out.str();
}

}  // namespace strata
