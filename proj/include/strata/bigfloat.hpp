#pragma once

#include <mpfr.h>

#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "rational.hpp"

namespace strata {

// Correctly rounded (MPFR round-to-nearest) arbitrary-precision float.
// Binary operations carry the larger of the two operand precisions.
class BigFloat {
  public:
    BigFloat() : BigFloat(64) {}
    explicit BigFloat(mpfr_prec_t prec) {
        check_prec(prec);
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(BigFloat o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from(const Rational& q, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat from(const Integer& z, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat from(long n, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_si(r.v_, n, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(common_prec(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(common_prec(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(common_prec(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(common_prec(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(*this);
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    BigFloat mul_long(long n) const {
        BigFloat r(*this);
        mpfr_mul_si(r.v_, r.v_, n, MPFR_RNDN);
        return r;
    }
    BigFloat div_long(long n) const {
        if (n == 0) throw std::invalid_argument("BigFloat: division by zero");
        BigFloat r(*this);
        mpfr_div_si(r.v_, r.v_, n, MPFR_RNDN);
        return r;
    }
    BigFloat pow_ui(unsigned long e) const {
        BigFloat r(prec());
        mpfr_pow_ui(r.v_, v_, e, MPFR_RNDN);
        return r;
    }
    BigFloat abs() const {
        BigFloat r(*this);
        mpfr_abs(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    BigFloat log() const {
        if (mpfr_sgn(v_) <= 0) throw std::domain_error("BigFloat::log: non-positive argument");
        BigFloat r(prec());
        mpfr_log(r.v_, v_, MPFR_RNDN);
        return r;
    }

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.cmp(b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.cmp(b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) >= 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Scientific notation with the given number of significant digits, e.g. "3.1416e+00".
    std::string to_string(int significant_digits) const {
        if (significant_digits < 2) significant_digits = 2;
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Re", significant_digits - 1, v_);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }

    mpfr_srcptr raw() const { return v_; }

    static BigFloat pi(mpfr_prec_t precision) {
        BigFloat r(precision);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

  private:
    static void check_prec(mpfr_prec_t prec) {
        if (prec < 64) throw std::invalid_argument("BigFloat: precision below 64 bits rejected");
    }
    static mpfr_prec_t common_prec(const BigFloat& a, const BigFloat& b) {
        return a.prec() > b.prec() ? a.prec() : b.prec();
    }

    mpfr_t v_;
};

namespace detail {

// 400 fractional digits; the first 300+ serve as the required reference oracle.
inline constexpr const char* kPiReference =
    "3."
    "14159265358979323846264338327950288419716939937510"
    "58209749445923078164062862089986280348253421170679"
    "82148086513282306647093844609550582231725359408128"
    "48111745028410270193852110555964462294895493038196"
    "44288109756659334461284756482337867831652712019091"
    "45648566923460348610454326648213393607260249141273"
    "72458700660631558817488152092096282925409171536436"
    "78925903600113305305488204665213841469519415116094";

inline void validate_pi_once() {
    static std::once_flag flag;
    std::call_once(flag, [] {
        // 400 digits ~ 1329 bits; compare at 1344 and demand agreement to ~1320 bits.
        const mpfr_prec_t p = 1344;
        mpfr_t ref, computed, diff, tol;
        mpfr_inits2(p, ref, computed, diff, tol, mpfr_ptr(nullptr));
        if (mpfr_set_str(ref, kPiReference, 10, MPFR_RNDN) != 0) {
            mpfr_clears(ref, computed, diff, tol, mpfr_ptr(nullptr));
            throw std::logic_error("pi reference constant failed to parse");
        }
        mpfr_const_pi(computed, MPFR_RNDN);
        mpfr_sub(diff, computed, ref, MPFR_RNDN);
        mpfr_abs(diff, diff, MPFR_RNDN);
        mpfr_set_ui_2exp(tol, 1, -1320, MPFR_RNDN);
        const bool ok = mpfr_cmp(diff, tol) <= 0;
        mpfr_clears(ref, computed, diff, tol, mpfr_ptr(nullptr));
        if (!ok) throw std::logic_error("computed pi disagrees with the embedded reference digits");
    });
}

}  // namespace detail

inline BigFloat pi_value(mpfr_prec_t precision) {
    if (precision < 64) throw std::invalid_argument("pi_value: precision below 64 bits rejected");
    detail::validate_pi_once();
    return BigFloat::pi(precision);
}

}  // namespace strata
