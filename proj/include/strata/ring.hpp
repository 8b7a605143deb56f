#pragma once

#include <concepts>

#include "rational.hpp"

namespace strata {

// Exact commutative ring with unit. Specializations provide the constants and,
// where the ring admits it, exact division by a nonzero integer (needed by
// series log/exp, whose recurrences only ever divide by the half-degree).
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_long(long n) { return Rational(n); }
    static Rational div_long(const Rational& a, long n) { return a / Rational(n); }
};

template <class R>
concept ExactRing = requires(const R a, const R b) {
    { RingTraits<R>::zero() } -> std::convertible_to<R>;
    { RingTraits<R>::one() } -> std::convertible_to<R>;
    { RingTraits<R>::from_long(1L) } -> std::convertible_to<R>;
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a* b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
};

template <class R>
concept ExactRingWithIntDiv = ExactRing<R> && requires(const R a) {
    { RingTraits<R>::div_long(a, 2L) } -> std::convertible_to<R>;
};

}  // namespace strata
