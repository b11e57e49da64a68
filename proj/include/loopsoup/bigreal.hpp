#pragma once

#include <mpfr.h>

#include <cstdio>
#include <string>
#include <utility>

#include "loopsoup/errors.hpp"

namespace loopsoup {

// Arbitrary-precision real backed by MPFR. Every value carries its working
// precision in decimal digits; arithmetic results carry the minimum precision
// of the operands. Comparisons against zero take an explicit tolerance.
class BigReal {
  public:
    static int default_digits() { return default_digits_(); }
    static void set_default_digits(int d) {
        if (d < 30) throw UsageError("precision must be >= 30 decimal digits");
        default_digits_() = d;
    }

    BigReal() : digits_(default_digits()) {
        mpfr_init2(v_, bits(digits_));
        mpfr_set_zero(v_, 1);
    }
    explicit BigReal(long n, int digits = default_digits()) : digits_(digits) {
        mpfr_init2(v_, bits(digits_));
        mpfr_set_si(v_, n, MPFR_RNDN);
    }
    explicit BigReal(const std::string& s, int digits = default_digits()) : digits_(digits) {
        mpfr_init2(v_, bits(digits_));
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw UsageError("cannot parse real literal: " + s);
    }

    BigReal(const BigReal& o) : digits_(o.digits_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept : digits_(o.digits_) {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(BigReal o) noexcept {
        digits_ = o.digits_;
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    int precision_digits() const { return digits_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    static BigReal with_digits(int digits) {
        BigReal r(0L, digits);
        return r;
    }

    // ----- arithmetic (min-precision propagation) -----
    friend BigReal operator+(const BigReal& a, const BigReal& b) {
        return binop(a, b, mpfr_add);
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b) {
        return binop(a, b, mpfr_sub);
    }
    friend BigReal operator*(const BigReal& a, const BigReal& b) {
        return binop(a, b, mpfr_mul);
    }
    friend BigReal operator/(const BigReal& a, const BigReal& b) {
        return binop(a, b, mpfr_div);
    }
    BigReal operator-() const {
        BigReal r(*this);
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    BigReal& operator+=(const BigReal& b) { return *this = *this + b; }
    BigReal& operator-=(const BigReal& b) { return *this = *this - b; }
    BigReal& operator*=(const BigReal& b) { return *this = *this * b; }
    BigReal& operator/=(const BigReal& b) { return *this = *this / b; }

    friend BigReal operator*(const BigReal& a, long n) {
        BigReal r(a);
        mpfr_mul_si(r.v_, a.v_, n, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(const BigReal& a, long n) {
        BigReal r(a);
        mpfr_div_si(r.v_, a.v_, n, MPFR_RNDN);
        return r;
    }
    friend BigReal operator+(const BigReal& a, long n) { return a + BigReal(n, a.digits_); }
    friend BigReal operator-(const BigReal& a, long n) { return a - BigReal(n, a.digits_); }

    // ----- comparisons (exact; zero tests take an explicit tolerance) -----
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    bool is_exact_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_zero_within(const BigReal& tol) const { return abs(*this) <= tol; }
    int sign() const { return mpfr_sgn(v_); }

    // ----- elementary functions -----
    friend BigReal abs(const BigReal& a) {
        BigReal r(a);
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal sqrt(const BigReal& a) { return unop(a, mpfr_sqrt); }
    friend BigReal exp(const BigReal& a) { return unop(a, mpfr_exp); }
    friend BigReal log(const BigReal& a) { return unop(a, mpfr_log); }
    friend BigReal sin(const BigReal& a) { return unop(a, mpfr_sin); }
    friend BigReal cos(const BigReal& a) { return unop(a, mpfr_cos); }
    friend BigReal pow(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_pow); }
    friend BigReal pow_si(const BigReal& a, long n) {
        BigReal r(a);
        mpfr_pow_si(r.v_, a.v_, n, MPFR_RNDN);
        return r;
    }

    static BigReal pi(int digits = default_digits()) {
        BigReal r(0L, digits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Decimal string with `sig` significant digits; defaults to the value's
    // own precision. Deterministic for fixed inputs.
    std::string to_string(int sig = 0) const {
        if (sig <= 0) sig = digits_;
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", sig, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    // 10^e at this value's precision
    static BigReal pow10(long e, int digits = default_digits()) {
        BigReal r(0L, digits);
        mpfr_set_si(r.v_, 10, MPFR_RNDN);
        mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

  private:
    static int& default_digits_() {
        static int d = 60;
        return d;
    }
    static mpfr_prec_t bits(int digits) {
        return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 16);
    }
    template <class F>
    static BigReal binop(const BigReal& a, const BigReal& b, F f) {
        int d = a.digits_ < b.digits_ ? a.digits_ : b.digits_;
        BigReal r(0L, d);
        f(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    template <class F>
    static BigReal unop(const BigReal& a, F f) {
        BigReal r(0L, a.digits_);
        f(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
    int digits_;
};

inline BigReal operator*(long n, const BigReal& a) { return a * n; }

}  // namespace loopsoup
