#include "chebcrypt/bigreal.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <vector>

namespace chebcrypt {

namespace {

long max_digits(const Real& a, const Real& b) {
    return std::max(a.precision_digits(), b.precision_digits());
}

}  // namespace

mpfr_prec_t Real::bits_for_digits(long digits) {
    if (digits < kMinDigits) {
        throw PrecisionTooLow("precision must be at least " + std::to_string(kMinDigits) +
                              " decimal digits, got " + std::to_string(digits));
    }
    // log2(10) = 3.3219...; the product is never an exact integer, so ceil
    // is stable against the double rounding here for any sane digit count.
    const double bits = std::ceil(static_cast<double>(digits) * 3.3219280948873623);
    return static_cast<mpfr_prec_t>(bits) + kGuardBits;
}

Real::Real(long digits) : digits_(digits) {
    mpfr_init2(v_, bits_for_digits(digits));
    mpfr_set_zero(v_, 1);
}

Real::Real(const Real& other) : digits_(other.digits_) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : digits_(other.digits_) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
        digits_ = other.digits_;
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    if (this != &other) {
        mpfr_swap(v_, other.v_);
        digits_ = other.digits_;
    }
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_long(long value, long digits) {
    Real r(digits);
    mpfr_set_si(r.v_, value, MPFR_RNDN);
    return r;
}

Real Real::from_integer(const mpz_class& value, long digits) {
    Real r(digits);
    mpfr_set_z(r.v_, value.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real Real::round_to(long digits) const {
    Real r(digits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string Real::to_decimal_string() const {
    if (!is_finite()) {
        return mpfr_nan_p(v_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
    }
    if (is_zero()) {
        return "0";
    }
    mpfr_exp_t exp = 0;
    char* raw = mpfr_get_str(nullptr, &exp, 10, 0, v_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);

    std::string sign_str;
    if (digits[0] == '-') {
        sign_str = "-";
        digits.erase(0, 1);
    }
    // mpfr exponent counts digits before an implied leading point; convert
    // to d.ddd e(exp-1) form.
    std::string out = sign_str + digits.substr(0, 1);
    if (digits.size() > 1) {
        out += "." + digits.substr(1);
    }
    out += "e" + std::to_string(exp - 1);
    return out;
}

mpz_class Real::nearest_integer() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

Real Real::operator-() const {
    Real r(digits_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, const Real& b) {
    Real r(max_digits(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(max_digits(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(max_digits(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(max_digits(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real abs_r(const Real& a) {
    Real r(a.precision_digits());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

Real sqrt_r(const Real& a) {
    if (a.sign() < 0) {
        throw DomainError("sqrt_r of a negative value");
    }
    Real r(a.precision_digits());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

Real cos_r(const Real& a) {
    Real r(a.precision_digits());
    mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

Real arccos_r(const Real& a) {
    if (!a.is_finite() || mpfr_cmp_si(a.raw(), -1) < 0 || mpfr_cmp_si(a.raw(), 1) > 0) {
        throw DomainError("arccos_r requires an argument in [-1, 1]");
    }
    Real r(a.precision_digits());
    mpfr_acos(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

Real cosh_r(const Real& a) {
    Real r(a.precision_digits());
    mpfr_cosh(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

Real arccosh_r(const Real& a) {
    if (!a.is_finite() || mpfr_cmp_si(a.raw(), 1) < 0) {
        throw DomainError("arccosh_r requires an argument >= 1");
    }
    Real r(a.precision_digits());
    mpfr_acosh(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

Real real_from_decimal(const std::string& s, long digits) {
    if (digits < Real::kMinDigits) {
        throw PrecisionTooLow("precision must be at least " + std::to_string(Real::kMinDigits) +
                              " decimal digits, got " + std::to_string(digits));
    }
    std::string trimmed = s;
    const auto not_space = [](unsigned char c) { return std::isspace(c) == 0; };
    trimmed.erase(trimmed.begin(), std::find_if(trimmed.begin(), trimmed.end(), not_space));
    trimmed.erase(std::find_if(trimmed.rbegin(), trimmed.rend(), not_space).base(), trimmed.end());
    if (trimmed.empty()) {
        throw ParseError("empty decimal string");
    }
    // mpfr_strtofr would happily read "nan"/"inf"; only digit forms are valid here.
    for (char c : trimmed) {
        if (std::strchr("+-.0123456789eE", c) == nullptr) {
            throw ParseError("malformed decimal string: \"" + s + "\"");
        }
    }
    Real r(digits);
    char* end = nullptr;
    mpfr_strtofr(r.raw(), trimmed.c_str(), &end, 10, MPFR_RNDN);
    if (end != trimmed.c_str() + trimmed.size()) {
        throw ParseError("malformed decimal string: \"" + s + "\"");
    }
    if (!r.is_finite()) {
        throw ParseError("decimal string out of range: \"" + s + "\"");
    }
    return r;
}

long agreement_digits(const Real& a, const Real& b) {
    const long d = std::min(a.precision_digits(), b.precision_digits());
    if (mpfr_equal_p(a.raw(), b.raw())) {
        return d;
    }
    Real diff = abs_r(a - b);
    // floor(-log10 |a-b|); a low-precision log is plenty for a digit count.
    mpfr_t lg;
    mpfr_init2(lg, 64);
    mpfr_log10(lg, diff.raw(), MPFR_RNDN);
    const double l = mpfr_get_d(lg, MPFR_RNDN);
    mpfr_clear(lg);
    const long eq = static_cast<long>(std::floor(-l));
    return std::clamp(eq, 0L, d);
}

std::string render_fixed(const Real& a, long k) {
    if (k < 1) {
        k = 1;
    }
    // Round a * 10^k half-even to an integer, exactly. Every finite mpfr
    // value is z * 2^e, so the tie comparison can be done in integers.
    mpz_class n;
    if (a.is_zero()) {
        n = 0;
    } else {
        mpz_class z;
        const mpfr_exp_t e = mpfr_get_z_2exp(z.get_mpz_t(), a.raw());
        mpz_class scaled;
        mpz_ui_pow_ui(scaled.get_mpz_t(), 10, static_cast<unsigned long>(k));
        scaled *= z;
        if (e >= 0) {
            mpz_mul_2exp(n.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
        } else {
            mpz_class den;
            mpz_setbit(den.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
            mpz_class q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
            const int cmp = mpz_cmp(mpz_class(r * 2).get_mpz_t(), den.get_mpz_t());
            if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) {
                ++q;
            }
            n = q;
        }
    }

    const bool negative = n < 0;
    mpz_class mag = negative ? mpz_class(-n) : n;
    std::string digits = mag.get_str();
    if (static_cast<long>(digits.size()) < k + 1) {
        digits.insert(0, static_cast<size_t>(k + 1 - digits.size()), '0');
    }
    std::string out;
    out.reserve(digits.size() + 2);
    out.push_back(negative ? '-' : '+');
    out.append(digits, 0, digits.size() - static_cast<size_t>(k));
    out.push_back('.');
    out.append(digits, digits.size() - static_cast<size_t>(k), static_cast<size_t>(k));
    return out;
}

}  // namespace chebcrypt
