// Arbitrary-precision real arithmetic on top of MPFR.
//
// Precision is declared in decimal digits D (>= 10) and mapped to
// ceil(D * log2(10)) + 32 guard bits. All operations round to nearest,
// ties to even, at the result's bit precision; mixed-precision operands
// produce a result at the larger of the two precisions.
#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "chebcrypt/errors.hpp"

namespace chebcrypt {

class Real {
public:
    static constexpr long kMinDigits = 10;
    static constexpr long kGuardBits = 32;

    static mpfr_prec_t bits_for_digits(long digits);

    Real() : Real(kMinDigits) { mpfr_set_zero(v_, 1); }
    explicit Real(long digits);  // zero at the given precision
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    static Real from_long(long value, long digits);
    static Real from_integer(const mpz_class& value, long digits);

    long precision_digits() const { return digits_; }
    mpfr_prec_t precision_bits() const { return mpfr_get_prec(v_); }

    // Exact when widening; re-rounds when narrowing.
    Real round_to(long digits) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Round-trippable scientific rendering at full precision.
    std::string to_decimal_string() const;
    mpz_class nearest_integer() const;

    Real operator-() const;

    Real& operator+=(const Real& rhs) { return *this = *this + rhs; }
    Real& operator-=(const Real& rhs) { return *this = *this - rhs; }
    Real& operator*=(const Real& rhs) { return *this = *this * rhs; }
    Real& operator/=(const Real& rhs) { return *this = *this / rhs; }

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    mpfr_t v_;
    long digits_;
};

Real abs_r(const Real& a);
Real sqrt_r(const Real& a);
Real cos_r(const Real& a);
Real arccos_r(const Real& a);   // requires -1 <= a <= 1
Real cosh_r(const Real& a);
Real arccosh_r(const Real& a);  // requires a >= 1

// Parses a signed decimal string at D decimal digits of precision.
// Throws ParseError / PrecisionTooLow.
Real real_from_decimal(const std::string& s, long digits);

// Number of leading decimal digits on which a and b agree, clamped to
// [0, min(precision_digits)]. Uses the absolute difference; intended for
// values in [-2, 2].
long agreement_digits(const Real& a, const Real& b);

// Deterministic fixed-point rendering "(+|-)d.dd...d" with exactly k
// digits after the point, rounded half-even on the exact binary value.
// Intended for |a| < 10 and 1 <= k <= precision_digits(a).
std::string render_fixed(const Real& a, long k);

}  // namespace chebcrypt
