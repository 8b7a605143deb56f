#pragma once

#include <stdexcept>
#include <vector>

#include "asymp.hpp"
#include "recursion.hpp"

namespace strata {

// ----------------------------------------------------------------------------
// Symbolic large-genus engine. With F(x) = 1 + sum (2j-1) a_j x^{2j} and
// Delta(x) = sum (2j-1) d_j x^{2j}, the generating identities truncate (for
// each shift k = 0, 1, ...) to upper-triangular linear systems
//
//   (2g-2k)! b_{g-k}     = sum_{j>=k} c1[j-k](g-k) · u_j,   u_j = (2(g-j)-1) a_{g-j}
//   (2g-2k-1)! b_{g-k-1} = sum_{j>=k} c2[j-k](g-k) · v_j
//                          + sum_{j>k} c3[j-k](g-k) · u_j,  v_j = (2(g-j)-1) d_{g-j}
//
// where c1[k](g) = 2g·P_k(2g-1), c2[k](g) = 2·P_k(2g-1),
// c3[k](g) = 2(2g-1)·sum_{j=1}^{k} (2j-1) d_j P_{k-j}(2g-2), and
// P_k(lambda) = [x^{2k}] F(x)^lambda is polynomial in lambda of degree <= k.
//
// Solving over Q(g) and substituting the Bernoulli-ratio asymptotics
//   beta_k/beta_0 = (4P)^k / prod_{j=0}^{2k-1}(2g-j),   P = pi^2,
// (corrections to (2pi)^{2g} b_g / 2 = 1 decay geometrically and are dropped)
// turns the solution into exact elements of Q(g)[P], whose expansions in 1/g
// give the volume and Siegel-Veech coefficient series with values in Q[pi^2].
// ----------------------------------------------------------------------------

// P_i(lambda) = [x^{2i}] exp(lambda · log F), from a precomputed log F.
inline QPoly exp_lambda_coeff(long i, const EvenSeries<Rational>& logF) {
    if (i < 0 || i > logF.order())
        throw std::invalid_argument("exp_lambda_coeff: index outside series order");
    EvenSeries<QPoly> u(logF.order());
    for (long h = 1; h <= logF.order(); ++h)
        u.set(h, QPoly{Rational(0), logF.coeff(h)});  // lambda · l_h
    const auto e = u.exp();
    const QPoly p = e.coeff(i);
    if (p.degree() > i)
        throw std::logic_error("exp_lambda_coeff: degree bound in lambda violated");
    return p;
}

// Table P_0..P_kmax in one pass.
inline std::vector<QPoly> exp_lambda_table(long kmax, const StrataSequences& seq) {
    if (seq.g_max() < kmax)
        throw std::invalid_argument("exp_lambda_table: sequences not computed far enough");
    const auto logF = f_series(seq.a_values(), kmax).log();
    EvenSeries<QPoly> u(kmax);
    for (long h = 1; h <= kmax; ++h) u.set(h, QPoly{Rational(0), logF.coeff(h)});
    const auto e = u.exp();
    std::vector<QPoly> table;
    table.reserve(static_cast<std::size_t>(kmax) + 1);
    for (long k = 0; k <= kmax; ++k) {
        if (e.coeff(k).degree() > k)
            throw std::logic_error("exp_lambda_table: degree bound in lambda violated");
        table.push_back(e.coeff(k));
    }
    return table;
}

struct QCoefficients {
    std::vector<QPoly> c1, c2, c3;  // index k = 0..kmax, polynomials in g
};

inline QCoefficients q_coefficients(long kmax, const StrataSequences& seq) {
    const auto P = exp_lambda_table(kmax, seq);
    const QPoly two_g{Rational(0), Rational(2)};
    const QPoly lam1{Rational(-1), Rational(2)};  // 2g - 1
    const QPoly lam2{Rational(-2), Rational(2)};  // 2g - 2
    QCoefficients q;
    for (long k = 0; k <= kmax; ++k) {
        const QPoly pk1 = P[static_cast<std::size_t>(k)].compose(lam1);
        q.c1.push_back(two_g * pk1);
        q.c2.push_back(pk1.scale(Rational(2)));
        QPoly acc;
        for (long j = 1; j <= k; ++j)
            acc = acc + P[static_cast<std::size_t>(k - j)].compose(lam2).scale(Rational(2 * j - 1) * seq.d(j));
        q.c3.push_back(lam1.scale(Rational(2)) * acc);
    }
    return q;
}

struct TriangularWeights {
    long size = 0;                     // S: number of rows/unknowns
    std::vector<QPoly> c1;             // the q-coefficients used to build M
    std::vector<GRatFunc> minv_row0;   // row 0 of M^{-1} over Q(g)
    std::vector<GRatFunc> weights;     // w_k with a_g = sum_k w_k (2g-2k)! b_{g-k}
};

namespace detail {

inline QPoly shift_g(const QPoly& p, long k) {
    return p.compose(QPoly{Rational(-k), Rational(1)});
}

}  // namespace detail

inline TriangularWeights invert_a_system(long size, const StrataSequences& seq) {
    if (size < 1) throw std::invalid_argument("invert_a_system: size must be >= 1");
    TriangularWeights w;
    w.size = size;
    w.c1 = q_coefficients(size - 1, seq).c1;
    // M[k][j] = c1[j-k](g-k); diagonal 2(g-k) is nonzero in Q(g).
    auto m_entry = [&](long k, long j) { return detail::shift_g(w.c1[static_cast<std::size_t>(j - k)], k); };
    for (long k = 0; k < size; ++k) {
        if (m_entry(k, k) != QPoly{Rational(-2 * k), Rational(2)})
            throw std::logic_error("invert_a_system: triangular diagonal is not 2(g-k)");
    }
    w.minv_row0.push_back(GRatFunc(RingTraits<QPoly>::one(), m_entry(0, 0)));
    for (long j = 1; j < size; ++j) {
        GRatFunc acc;
        for (long i = 0; i < j; ++i)
            acc = acc + w.minv_row0[static_cast<std::size_t>(i)] * GRatFunc(m_entry(i, j));
        w.minv_row0.push_back(-acc / GRatFunc(m_entry(j, j)));
    }
    const GRatFunc two_g_m1{QPoly{Rational(-1), Rational(2)}};
    for (const auto& r : w.minv_row0) w.weights.push_back(r / two_g_m1);
    return w;
}

// Residual of row 0 of M^{-1}·M against the identity; all entries must be the
// zero element of Q(g).
inline std::vector<GRatFunc> a_system_residual(const TriangularWeights& w) {
    std::vector<GRatFunc> res;
    for (long j = 0; j < w.size; ++j) {
        GRatFunc acc;
        for (long i = 0; i <= j; ++i)
            acc = acc + w.minv_row0[static_cast<std::size_t>(i)] *
                            GRatFunc(detail::shift_g(w.c1[static_cast<std::size_t>(j - i)], i));
        if (j == 0) acc = acc - GRatFunc(Rational(1));
        res.push_back(acc);
    }
    return res;
}

namespace detail {

// prod_{j=0}^{count-1} (2g - j)
inline QPoly falling_2g(long count) {
    QPoly p = RingTraits<QPoly>::one();
    for (long j = 0; j < count; ++j) p = p * QPoly{Rational(-j), Rational(2)};
    return p;
}

// rho_k = beta_k/beta_0 = (4P)^k / prod_{j=0}^{2k-1}(2g-j) as a PiRatFunc term.
inline PiRatFunc rho(long k) {
    Integer four_pow;
    mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(k));
    return PiRatFunc(static_cast<int>(k),
                     GRatFunc(QPoly(Rational(four_pow)), falling_2g(2 * k)));
}

// beta_j/gamma_0 = 4^j P^{j-1} g / (2 prod_{i=0}^{2j-1}(2g-i)), j >= 1.
inline PiRatFunc beta_over_gamma0(long j) {
    Integer four_pow;
    mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(j));
    const QPoly num{Rational(0), Rational(four_pow) / 2};
    return PiRatFunc(static_cast<int>(j - 1), GRatFunc(num, falling_2g(2 * j)));
}

// gamma_k/gamma_0 = (2g-2k-1) · beta_{k+1}/gamma_0.
inline PiRatFunc gamma_ratio(long k) {
    return beta_over_gamma0(k + 1).scale(GRatFunc(QPoly{Rational(-2 * k - 1), Rational(2)}));
}

inline PiRatFunc substitute_g(const PiRatFunc& f, long shift) {
    const QPoly arg{Rational(-shift), Rational(1)};
    PiRatFunc r;
    for (const auto& [p, rf] : f.terms()) r.add_term(p, rf.substitute(arg));
    return r;
}

}  // namespace detail

// A-hat = sum_k minv_row0[k] · rho_k, the exact Q(g)[P] element with
// (2g-1) a_g = (2g)! b_g · A-hat(g) · (1 + geometrically small).
inline PiRatFunc a_hat(const TriangularWeights& w) {
    PiRatFunc acc;
    for (long k = 0; k < w.size; ++k) {
        const auto term = detail::rho(k).scale(w.minv_row0[static_cast<std::size_t>(k)]);
        for (const auto& [p, rf] : term.terms()) acc.add_term(p, rf);
    }
    return acc;
}

// A(g) with a_g = (2g)! b_g · A(1/g)(1 + O(g^{-K-1})): leading order g^{-2}
// with coefficient 1/4; K exact coefficient orders are emitted.
inline AsympExpansion expand_normalized(long K, const StrataSequences& seq) {
    if (K < 1) throw std::invalid_argument("expand_normalized: order must be >= 1");
    const auto w = invert_a_system(K, seq);
    const GRatFunc two_g_m1{QPoly{Rational(-1), Rational(2)}};
    const PiRatFunc ah = a_hat(w);
    PiRatFunc a;
    for (const auto& [p, rf] : ah.terms()) a.add_term(p, rf / two_g_m1);
    return expand_on_window(a, 2, K + 1);
}

// The volume-normalized series Psi = (2g)(2g-1)·A = 2g·A-hat, i.e. the
// expansion of (2g-1)/4 · Vol(2g-2); constant term 1, coefficients in Q[pi^2].
inline AsympExpansion volume_expansion(long R, const StrataSequences& seq, long guard = 2) {
    if (R < 0) throw std::invalid_argument("volume_expansion: negative order");
    if (guard < 1) throw std::invalid_argument("volume_expansion: guard must be >= 1");
    const auto w = invert_a_system(R + guard, seq);
    const GRatFunc two_g{QPoly{Rational(0), Rational(2)}};
    const PiRatFunc ah = a_hat(w);
    PiRatFunc psi;
    for (const auto& [p, rf] : ah.terms()) psi.add_term(p, rf * two_g);
    const auto e = expand_on_window(psi, 0, R);
    if (!e.all_coefficients_polynomial_in_pi2())
        throw std::logic_error("volume_expansion: negative pi-powers survived");
    return e;
}

struct DSystem {
    long size = 0;
    std::vector<PiRatFunc> vhat;  // v_j / gamma_0, exact in Q(g)[P]
    PiRatFunc dhat;               // vhat[0]: (2g-1) d_g = (2g-1)! b_{g-1} · dhat · (1 + small)
    PiRatFunc psi;                // the a-side normalized series, for the quotient
};

inline DSystem invert_d_system(long size, const StrataSequences& seq) {
    if (size < 1) throw std::invalid_argument("invert_d_system: size must be >= 1");
    DSystem sys;
    sys.size = size;
    const auto q = q_coefficients(size - 1, seq);
    const auto w = invert_a_system(size, seq);
    const PiRatFunc ah = a_hat(w);

    auto m2 = [&](long k, long j) { return detail::shift_g(q.c2[static_cast<std::size_t>(j - k)], k); };
    for (long k = 0; k < size; ++k) {
        if (m2(k, k) != QPoly(Rational(2)))
            throw std::logic_error("invert_d_system: triangular diagonal is not 2");
    }

    // Right-hand sides: gamma_k/gamma_0 minus the a-terms, which are known:
    // u_j/gamma_0 = A-hat(g-j) · beta_j/gamma_0.
    std::vector<PiRatFunc> rhs;
    for (long k = 0; k < size; ++k) {
        PiRatFunc r = detail::gamma_ratio(k);
        for (long j = k + 1; j < size; ++j) {
            const GRatFunc c3kj{detail::shift_g(q.c3[static_cast<std::size_t>(j - k)], k)};
            PiRatFunc term = detail::substitute_g(ah, j) * detail::beta_over_gamma0(j);
            term = term.scale(c3kj);
            r = r - term;
        }
        rhs.push_back(std::move(r));
    }

    sys.vhat.assign(static_cast<std::size_t>(size), PiRatFunc());
    for (long j = size - 1; j >= 0; --j) {
        PiRatFunc acc = rhs[static_cast<std::size_t>(j)];
        for (long jp = j + 1; jp < size; ++jp)
            acc = acc - sys.vhat[static_cast<std::size_t>(jp)].scale(GRatFunc(m2(j, jp)));
        sys.vhat[static_cast<std::size_t>(j)] = acc.scale(GRatFunc(rat(1, 2)));
    }
    sys.dhat = sys.vhat[0];

    const GRatFunc two_g{QPoly{Rational(0), Rational(2)}};
    for (const auto& [p, rf] : ah.terms()) sys.psi.add_term(p, rf * two_g);
    return sys;
}

// c_area = d_g / (4 pi^2 a_g) expanded: equals dhat/psi up to geometrically
// small corrections; constant term 1/2, coefficients in Q[pi^2].
inline AsympExpansion sv_expansion(long R, const StrataSequences& seq, long guard = 2) {
    if (R < 0) throw std::invalid_argument("sv_expansion: negative order");
    if (guard < 1) throw std::invalid_argument("sv_expansion: guard must be >= 1");
    const auto sys = invert_d_system(R + guard, seq);
    const auto dh = expand_on_window(sys.dhat, 0, R);
    const auto ps = expand_on_window(sys.psi, 0, R);
    const auto quotient = dh / ps;
    if (!quotient.all_coefficients_polynomial_in_pi2())
        throw std::logic_error("sv_expansion: negative pi-powers survived");
    return quotient;
}

// D(g) with d_g = (2g-1)! b_{g-1} · D(1/g)(1 + O): leading term 1/(2(2g-1)),
// i.e. the expansion starts at g^{-1} with coefficient 1/4.
inline AsympExpansion expand_normalized_d(long K, const StrataSequences& seq) {
    if (K < 1) throw std::invalid_argument("expand_normalized_d: order must be >= 1");
    const auto sys = invert_d_system(K, seq);
    const GRatFunc two_g_m1{QPoly{Rational(-1), Rational(2)}};
    PiRatFunc d;
    for (const auto& [p, rf] : sys.dhat.terms()) d.add_term(p, rf / two_g_m1);
    return expand_on_window(d, 1, K);
}

}  // namespace strata
