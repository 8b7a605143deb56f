#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strata {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer pow2(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

// Canonical form: "n" when the denominator is 1, otherwise "n/d" with d > 0.
inline std::string to_fraction_string(const Rational& q) {
    return q.get_str();
}

inline std::string to_decimal_string(const Integer& z) {
    return z.get_str();
}

// Strict inverse of to_fraction_string / to_decimal_string: optional leading '-',
// decimal digits, optional "/digits"; the result must already be canonical
// (positive denominator, gcd 1, no leading zeros). Anything else is rejected.
inline bool is_canonical_integer_string(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    if (i >= s.size()) return false;
    if (s[i] == '0' && (s.size() > i + 1 || i > 0)) return false;  // no leading zeros, no "-0"
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

inline Integer parse_integer(const std::string& s) {
    if (!is_canonical_integer_string(s))
        throw std::invalid_argument("parse_integer: not a canonical integer string: \"" + s + "\"");
    return Integer(s);
}

inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    const Integer num = parse_integer(s.substr(0, slash));
    const std::string den_str = s.substr(slash + 1);
    if (!den_str.empty() && den_str[0] == '-')
        throw std::invalid_argument("parse_rational: negative denominator: \"" + s + "\"");
    const Integer den = parse_integer(den_str);
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator: \"" + s + "\"");
    Rational q(num, den);
    q.canonicalize();
    if (q.get_str() != s)
        throw std::invalid_argument("parse_rational: not in lowest terms: \"" + s + "\"");
    return q;
}

}  // namespace strata
