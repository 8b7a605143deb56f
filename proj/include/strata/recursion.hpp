#pragma once

#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "even_series.hpp"

namespace strata {

// The exact sequences a_g, d_g (g >= 1) and b_g (g >= 0) for the minimal
// stratum, computed by the generating-function solver: with
//   F(t)   = 1 + sum (2g-1) a_g t^{2g},
//   Delta(t) = sum (2g-1) d_g t^{2g},
// the identities
//   (2g)! b_g       = [t^{2g}] F^{2g}
//   (2g-1)! b_{g-1}/2 = [t^{2g}] (Delta · F^{2g-1})
// determine a_g and d_g one genus at a time, since the unknown enters
// linearly (with coefficient 2g(2g-1) resp. 2g-1).
class StrataSequences {
  public:
    explicit StrataSequences(long g_max) { extend(g_max); }

    // Adopts precomputed values (e.g. from a cache); validates nothing beyond
    // sizes — callers are expected to have validated the data.
    StrataSequences(std::vector<Rational> a, std::vector<Rational> d)
        : a_(std::move(a)), d_(std::move(d)) {
        if (a_.size() != d_.size())
            throw std::invalid_argument("StrataSequences: a/d length mismatch");
        b_.reserve(a_.size() + 1);
        for (long g = 0; g <= g_max(); ++g) b_.push_back(b_coeff(g));
    }

    long g_max() const { return static_cast<long>(a_.size()); }

    const Rational& a(long g) const { return at(a_, g); }
    const Rational& d(long g) const { return at(d_, g); }
    const Rational& b(long g) const {
        if (g < 0 || g > g_max()) throw std::out_of_range("StrataSequences::b: index out of range");
        return b_[static_cast<std::size_t>(g)];
    }

    std::span<const Rational> a_values() const { return a_; }
    std::span<const Rational> d_values() const { return d_; }

    void extend(long new_g_max) {
        if (b_.empty()) b_.push_back(b_coeff(0));
        for (long g = g_max() + 1; g <= new_g_max; ++g) {
            b_.push_back(b_coeff(g));
            const auto F = f_series(a_, g);  // a_g slot is zero
            const auto L = F.log();
            const auto F_2g = L.scale_long(2 * g).exp();
            Rational ag = Rational(factorial(2 * g)) * b_[g] - F_2g.coeff(g);
            ag /= Rational(2 * g) * Rational(2 * g - 1);
            a_.push_back(ag);

            const auto F_2gm1 = L.scale_long(2 * g - 1).exp();
            Rational conv(0);
            for (long j = 1; j < g; ++j)
                conv += Rational(2 * j - 1) * d_[j - 1] * F_2gm1.coeff(g - j);
            Rational dg = Rational(factorial(2 * g - 1)) * b_[g - 1] / 2 - conv;
            dg /= Rational(2 * g - 1);
            d_.push_back(dg);
        }
    }

  private:
    static const Rational& at(const std::vector<Rational>& v, long g) {
        if (g < 1 || g > static_cast<long>(v.size()))
            throw std::out_of_range("StrataSequences: index out of range");
        return v[static_cast<std::size_t>(g - 1)];
    }

    std::vector<Rational> a_, d_;
    std::vector<Rational> b_;  // b_[g] = b_coeff(g), 0..g_max
};

namespace detail {

// Visits every ordered composition (parts >= 1) of n; parts passed as a vector.
inline void for_each_composition(long n, const std::function<void(const std::vector<long>&)>& fn) {
    std::vector<long> parts;
    std::function<void(long)> rec = [&](long rest) {
        if (rest == 0) {
            fn(parts);
            return;
        }
        for (long p = 1; p <= rest; ++p) {
            parts.push_back(p);
            rec(rest - p);
            parts.pop_back();
        }
    };
    rec(n);
}

}  // namespace detail

// Composition-sum oracle for b_g:
//   b_g = sum_{k>=1} 1/(k!(2g-k)!) sum_{(d_1..d_k) |= g} prod (2d_j - 1) a_{d_j}.
// Exponential in g; correctness reference only.
inline Rational oracle_b_from_a(long g, const StrataSequences& seq) {
    if (g < 1) throw std::invalid_argument("oracle_b_from_a: g must be >= 1");
    Rational total(0);
    detail::for_each_composition(g, [&](const std::vector<long>& parts) {
        Rational prod(1);
        for (long p : parts) prod *= Rational(2 * p - 1) * seq.a(p);
        const long k = static_cast<long>(parts.size());
        total += prod / (Rational(factorial(k)) * Rational(factorial(2 * g - k)));
    });
    return total;
}

// Composition-sum oracle for the d-side right-hand side; equals b_{g-1}/2:
//   sum_{g'=1}^{g} sum_{k=0}^{g-g'} (2g'-1) d_{g'} / (k!(2g-1-k)!)
//       · sum_{(g_1..g_k) |= g-g'} prod (2g_i - 1) a_{g_i},
// where the k = 0 term (empty composition) appears only for g' = g.
inline Rational oracle_rhs_d(long g, const StrataSequences& seq) {
    if (g < 1) throw std::invalid_argument("oracle_rhs_d: g must be >= 1");
    Rational total(0);
    for (long gp = 1; gp <= g; ++gp) {
        const Rational lead = Rational(2 * gp - 1) * seq.d(gp);
        if (gp == g) {
            total += lead / Rational(factorial(2 * g - 1));
            continue;
        }
        detail::for_each_composition(g - gp, [&](const std::vector<long>& parts) {
            Rational prod(1);
            for (long p : parts) prod *= Rational(2 * p - 1) * seq.a(p);
            const long k = static_cast<long>(parts.size());
            total += lead * prod / (Rational(factorial(k)) * Rational(factorial(2 * g - 1 - k)));
        });
    }
    return total;
}

struct CrossCheckResult {
    bool pass = true;
    std::string report;
};

// Exact equivalence of the series solver and the composition-sum recursions
// for every g <= g_oracle_max.
inline CrossCheckResult cross_check(const StrataSequences& seq, long g_oracle_max) {
    if (g_oracle_max > seq.g_max())
        throw std::invalid_argument("cross_check: sequences not computed far enough");
    CrossCheckResult result;
    std::ostringstream out;
    for (long g = 1; g <= g_oracle_max; ++g) {
        const Rational lhs_b = oracle_b_from_a(g, seq);
        const Rational rhs_b = b_coeff(g);
        const Rational lhs_d = oracle_rhs_d(g, seq);
        const Rational rhs_d = b_coeff(g - 1) / 2;
        const bool ok_b = lhs_b == rhs_b;
        const bool ok_d = lhs_d == rhs_d;
        if (!ok_b)
            out << "g=" << g << ": oracle_b_from_a = " << lhs_b.get_str()
                << " != b_coeff = " << rhs_b.get_str() << "\n";
        if (!ok_d)
            out << "g=" << g << ": oracle_rhs_d = " << lhs_d.get_str()
                << " != b_coeff(g-1)/2 = " << rhs_d.get_str() << "\n";
        result.pass = result.pass && ok_b && ok_d;
    }
    result.report = out.str();
    return result;
}

// Exact bounds on the sequences: positivity, a_g <= (2g-2)! b_g,
// 2 d_g <= (2g-2)! b_{g-1}; plus the leading-order ratio window
// a_g/((2g-2)! b_g) and 2d_g/((2g-2)! b_{g-1}) in (1 - 5/g, 1] for g >= 2.
inline bool check_inequalities(const StrataSequences& seq, long g_max, std::string* why = nullptr) {
    auto fail = [&](long g, const char* what) {
        if (why) *why = std::string(what) + " violated at g=" + std::to_string(g);
        return false;
    };
    for (long g = 1; g <= g_max; ++g) {
        const Rational bound_a = Rational(factorial(2 * g - 2)) * seq.b(g);
        const Rational bound_d = Rational(factorial(2 * g - 2)) * seq.b(g - 1);
        if (!(seq.a(g) > 0)) return fail(g, "a_g > 0");
        if (!(seq.d(g) > 0)) return fail(g, "d_g > 0");
        if (!(seq.a(g) <= bound_a)) return fail(g, "a_g <= (2g-2)! b_g");
        if (!(2 * seq.d(g) <= bound_d)) return fail(g, "2 d_g <= (2g-2)! b_{g-1}");
        if (g >= 2) {
            const Rational lo = Rational(1) - rat(5, g);
            const Rational ra = seq.a(g) / bound_a;
            const Rational rd = 2 * seq.d(g) / bound_d;
            if (!(ra > lo && ra <= 1)) return fail(g, "a ratio window (1-5/g, 1]");
            if (!(rd > lo && rd <= 1)) return fail(g, "d ratio window (1-5/g, 1]");
        }
    }
    return true;
}

}  // namespace strata
