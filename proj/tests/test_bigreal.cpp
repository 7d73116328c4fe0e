#include <doctest.h>
#include <gmpxx.h>

#include "chebcrypt/bigreal.hpp"
#include "chebcrypt/rng.hpp"

using namespace chebcrypt;

namespace {

// Independent rendering oracle: exact rational arithmetic over mpq.
// round_half_even(a * 10^k) computed from the value's exact binary form.
std::string render_oracle(const Real& a, long k) {
    mpq_class r(0);
    if (!a.is_zero()) {
        mpz_class z;
        const mpfr_exp_t e = mpfr_get_z_2exp(z.get_mpz_t(), a.raw());
        if (e >= 0) {
            mpz_class num;
            mpz_mul_2exp(num.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
            r = num;
        } else {
            mpz_class den;
            mpz_setbit(den.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
            r = mpq_class(z, den);
            r.canonicalize();
        }
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(k));
    r *= scale;

    mpz_class fl = r.get_num() / r.get_den();  // truncates toward zero
    if (r < 0 && mpq_class(fl) != r) {
        fl -= 1;  // true floor
    }
    const mpq_class frac = r - mpq_class(fl);
    mpz_class n = fl;
    if (frac > mpq_class(1, 2) || (frac == mpq_class(1, 2) && mpz_odd_p(fl.get_mpz_t()))) {
        n += 1;
    }

    const bool neg = n < 0;
    std::string digits = mpz_class(abs(n)).get_str();
    if (static_cast<long>(digits.size()) < k + 1) {
        digits.insert(0, static_cast<size_t>(k + 1 - digits.size()), '0');
    }
    std::string out(1, neg ? '-' : '+');
    out += digits.substr(0, digits.size() - static_cast<size_t>(k));
    out += ".";
    out += digits.substr(digits.size() - static_cast<size_t>(k));
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("bigreal");

TEST_CASE("from_decimal exact and near-exact values") {
    const Real half = real_from_decimal("0.5", 100);
    CHECK(half == real_from_decimal("0.50000", 100));
    CHECK(render_fixed(half, 10) == "+0.5000000000");

    const Real minus_one = real_from_decimal("-1", 50);
    CHECK(minus_one == Real::from_long(-1, 50));

    // 1/10 is not binary-exact; the stored value must sit within 10^-30
    // of the true rational, checked against a 200-digit reference.
    const Real tenth = real_from_decimal("0.1", 30);
    const Real reference = real_from_decimal("1", 200) / real_from_decimal("10", 200);
    const Real diff = abs_r(tenth - reference);
    CHECK(diff < real_from_decimal("1e-30", 200));
    CHECK(agreement_digits(tenth, reference) == 30);
}

TEST_CASE("from_decimal rejects junk") {
    CHECK_THROWS_AS(real_from_decimal("", 50), ParseError);
    CHECK_THROWS_AS(real_from_decimal("abc", 50), ParseError);
    CHECK_THROWS_AS(real_from_decimal("1.2.3", 50), ParseError);
    CHECK_THROWS_AS(real_from_decimal("nan", 50), ParseError);
    CHECK_THROWS_AS(real_from_decimal("inf", 50), ParseError);
    CHECK_THROWS_AS(real_from_decimal("0x10", 50), ParseError);
    CHECK_THROWS_AS(real_from_decimal("0.5", 9), PrecisionTooLow);
}

TEST_CASE("trig and hyperbolic endpoints") {
    const Real one = Real::from_long(1, 60);
    CHECK(arccos_r(one).is_zero());
    CHECK(cos_r(Real(60)) == one);
    CHECK(arccosh_r(one).is_zero());
    CHECK(cosh_r(Real(60)) == one);

    CHECK_THROWS_AS(arccos_r(real_from_decimal("1.001", 60)), DomainError);
    CHECK_THROWS_AS(arccos_r(real_from_decimal("-1.001", 60)), DomainError);
    CHECK_THROWS_AS(arccosh_r(real_from_decimal("0.999", 60)), DomainError);
    CHECK_THROWS_AS(sqrt_r(Real::from_long(-4, 60)), DomainError);
}

TEST_CASE("agreement_digits basics") {
    const Real a = real_from_decimal("0.123456", 50);
    const Real b = real_from_decimal("0.123499", 50);
    CHECK(agreement_digits(a, b) == 4);
    CHECK(agreement_digits(b, a) == 4);

    const Real x = real_from_decimal("0.7071", 100);
    CHECK(agreement_digits(x, x) == 100);

    CHECK(agreement_digits(Real::from_long(1, 50), Real::from_long(-1, 50)) == 0);
}

TEST_CASE("agreement_digits is symmetric and clamped (random)") {
    Rng rng(101);
    for (int i = 0; i < 50; ++i) {
        const Real a = rng.symmetric_real("1", 80);
        const Real b = rng.symmetric_real("1", 80);
        const long ab = agreement_digits(a, b);
        CHECK(ab == agreement_digits(b, a));
        CHECK(ab >= 0);
        CHECK(ab <= 80);
        CHECK(agreement_digits(a, a) == 80);
    }
}

TEST_CASE("render_fixed pinned strings") {
    CHECK(render_fixed(real_from_decimal("-0.5", 50), 4) == "-0.5000");
    CHECK(render_fixed(Real::from_long(1, 50), 2) == "+1.00");
    CHECK(render_fixed(Real(50), 3) == "+0.000");
    CHECK(render_fixed(real_from_decimal("9.999", 50), 2) == "+10.00");
}

TEST_CASE("render_fixed matches the exact rational rounding oracle") {
    Rng rng(77);
    for (int i = 0; i < 200; ++i) {
        const Real a = rng.symmetric_real("5", 60);
        const long k = 1 + static_cast<long>(mpz_get_ui(rng.below(40).get_mpz_t()));
        CHECK(render_fixed(a, k) == render_oracle(a, k));
    }
    // Values engineered near the rounding boundary at digit 3.
    for (const char* s : {"0.0005", "0.0004999999", "0.0015", "-0.0025", "0.49950000001"}) {
        const Real a = real_from_decimal(s, 40);
        CHECK(render_fixed(a, 3) == render_oracle(a, 3));
    }
}

TEST_CASE("render/parse round trip keeps k-1 digits") {
    Rng rng(13);
    for (int i = 0; i < 50; ++i) {
        const Real a = rng.symmetric_real("1", 90);
        const long k = 10 + static_cast<long>(mpz_get_ui(rng.below(60).get_mpz_t()));
        const Real back = real_from_decimal(render_fixed(a, k), 90);
        CHECK(agreement_digits(a, back) >= k - 1);
    }
}

TEST_CASE("cos of arccos returns the argument") {
    Rng rng(29);
    for (int i = 0; i < 30; ++i) {
        const Real a = rng.symmetric_real("0.99", 70);
        CHECK(agreement_digits(cos_r(arccos_r(a)), a) >= 70 - 5);
    }
}

TEST_CASE("mixed precision takes the max") {
    const Real wide = real_from_decimal("0.25", 100);
    const Real narrow = real_from_decimal("0.125", 20);
    CHECK((wide + narrow).precision_digits() == 100);
    CHECK((narrow * wide).precision_digits() == 100);
    CHECK((narrow - wide).precision_digits() == 100);
}

TEST_CASE("decimal string rendering round-trips") {
    Rng rng(31);
    for (int i = 0; i < 20; ++i) {
        const Real a = rng.symmetric_real("3", 50);
        const Real back = real_from_decimal(a.to_decimal_string(), 50);
        CHECK(a == back);
    }
    CHECK(Real(20).to_decimal_string() == "0");
}

TEST_CASE("nearest_integer rounds correctly") {
    CHECK(real_from_decimal("2.4", 30).nearest_integer() == 2);
    CHECK(real_from_decimal("-2.6", 30).nearest_integer() == -3);
    CHECK(real_from_decimal("1234567890123456789", 40).nearest_integer() ==
          mpz_class("1234567890123456789"));
}

TEST_SUITE_END();
