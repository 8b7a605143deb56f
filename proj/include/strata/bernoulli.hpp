#pragma once

#include <mutex>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace strata {

// B_n with the convention B_1 = -1/2, via the exact recurrence
// sum_{k=0}^{n} C(n+1,k) B_k = 0 (n >= 1). Memoized; thread-safe.
inline Rational bernoulli(long n) {
    if (n < 0) throw std::invalid_argument("bernoulli: negative index");
    static std::mutex mu;
    static std::vector<Rational> memo{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(memo.size()) <= n) {
        const long m = static_cast<long>(memo.size());
        Rational sum(0);
        for (long k = 0; k < m; ++k) {
            if (memo[k] != 0) sum += Rational(binomial(m + 1, k)) * memo[k];
        }
        memo.push_back(-sum / Rational(m + 1));
    }
    return memo[n];
}

// b_g = [t^{2g}] (t/2)/sin(t/2) = ((2^{2g-1}-1)/2^{2g-1}) |B_{2g}| / (2g)!, with b_0 = 1.
inline Rational b_coeff(long g) {
    if (g < 0) throw std::invalid_argument("b_coeff: negative index");
    if (g == 0) return Rational(1);
    const Integer two_pow = pow2(static_cast<unsigned long>(2 * g - 1));
    Rational scale(two_pow - 1, two_pow);
    scale.canonicalize();
    Rational mag = bernoulli(2 * g);
    if (mag < 0) mag = -mag;
    return scale * mag / Rational(factorial(2 * g));
}

}  // namespace strata
