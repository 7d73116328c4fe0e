#include "chebcrypt/chebyshev.hpp"

#include <utility>

namespace chebcrypt {

const char* to_string(Engine engine) {
    switch (engine) {
        case Engine::recurrence: return "recurrence";
        case Engine::trig: return "trig";
        case Engine::matrix: return "matrix";
        case Engine::cayley: return "cayley";
    }
    return "?";
}

Engine engine_from_string(const std::string& name) {
    if (name == "recurrence") return Engine::recurrence;
    if (name == "trig") return Engine::trig;
    if (name == "matrix") return Engine::matrix;
    if (name == "cayley") return Engine::cayley;
    throw BadParams("unknown engine: \"" + name + "\"");
}

Mat2 Mat2::identity(long digits) {
    return Mat2{Real::from_long(1, digits), Real(digits), Real(digits), Real::from_long(1, digits)};
}

Mat2 Mat2::generator(const Real& x) {
    const long d = x.precision_digits();
    return Mat2{Real(d), Real::from_long(1, d), Real::from_long(-1, d),
                Real::from_long(2, d) * x};
}

Mat2 mat2_mul(const Mat2& a, const Mat2& b, OpCount& ops) {
    Mat2 c{a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
           a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
    ops.muls += 8;
    ops.adds += 4;
    return c;
}

LinPoly linpoly_mul(const LinPoly& p, const LinPoly& q, const Real& two_x, OpCount& ops) {
    const Real aa = p.a * q.a;
    LinPoly r{aa * two_x + p.a * q.b + q.a * p.b, p.b * q.b - aa};
    ops.muls += 5;
    ops.adds += 3;
    return r;
}

unsigned long bit_length(const Degree& n) {
    if (n == 0) {
        return 0;
    }
    return static_cast<unsigned long>(mpz_sizeinbase(n.get_mpz_t(), 2));
}

long decimal_digits(const Degree& n) {
    if (n == 0) {
        return 1;
    }
    const mpz_class a = abs(n);
    long d = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10));
    if (d > 1) {
        // sizeinbase may overestimate by one; settle it exactly
        mpz_class probe;
        mpz_ui_pow_ui(probe.get_mpz_t(), 10, static_cast<unsigned long>(d - 1));
        if (a < probe) {
            --d;
        }
    }
    return d;
}

namespace {

// Every engine evaluates at D + digits10(n) + 10 digits internally and
// rounds the result back to D. The degree amplifies rounding noise by a
// factor ~n, so without the headroom a result at precision D would only
// carry D - digits10(n) correct digits; with it, every engine returns
// T_n(x) correct to roughly one ulp of the declared precision. The
// equal-digit behavior of the negotiation protocols depends on this.
long widened_digits(const Real& x, const Degree& n) {
    return x.precision_digits() + decimal_digits(n) + 10;
}

}  // namespace

EvalResult eval_recurrence(const Real& x, const Degree& n) {
    if (n < 0) {
        throw BadParams("degree must be nonnegative");
    }
    if (bit_length(n) > 32) {
        throw DegreeTooLarge("recurrence engine is limited to n < 2^32; use a log-time engine");
    }
    const unsigned long steps = mpz_get_ui(n.get_mpz_t());
    const long d = x.precision_digits();
    OpCount ops;
    if (steps == 0) {
        return {Real::from_long(1, d), ops};
    }
    const long wide = widened_digits(x, n);
    const Real xw = x.round_to(wide);
    Real prev = Real::from_long(1, wide);
    Real cur = xw;
    const Real two = Real::from_long(2, wide);
    for (unsigned long k = 2; k <= steps; ++k) {
        Real next = two * (xw * cur) - prev;
        ops.muls += 2;
        ops.adds += 1;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {cur.round_to(d), ops};
}

Real eval_trig(const Real& x, const Degree& n) {
    if (n < 0) {
        throw BadParams("degree must be nonnegative");
    }
    if (!x.is_finite() || mpfr_cmp_si(x.raw(), -1) < 0 || mpfr_cmp_si(x.raw(), 1) > 0) {
        throw DomainError("trig engine requires x in [-1, 1]");
    }
    const long d = x.precision_digits();
    // The angle n*arccos(x) is of magnitude n; the widened precision also
    // makes the Degree-to-Real conversion exact.
    const long wide = widened_digits(x, n);
    const Real xw = x.round_to(wide);
    const Real nw = Real::from_integer(n, wide);
    return cos_r(nw * arccos_r(xw)).round_to(d);
}

namespace {

// Reduced representation of powers of the generator: every power has the
// shape (a b; -b a + 2x*b), so tracking the first row is enough.
struct Row {
    Real a, b;
};

Row row_mul(const Row& p, const Row& q, const Real& two_x, OpCount& ops) {
    const Real bd = p.b * q.b;
    Row r{p.a * q.a - bd, p.a * q.b + p.b * q.a + two_x * bd};
    ops.muls += 5;
    ops.adds += 3;
    return r;
}

}  // namespace

EvalResult eval_matrix(const Real& x, const Degree& n, bool exploit_structure) {
    if (n < 0) {
        throw BadParams("degree must be nonnegative");
    }
    const long d = x.precision_digits();
    const long wide = widened_digits(x, n);
    const Real xw = x.round_to(wide);
    OpCount ops;
    Degree e = n;

    if (exploit_structure) {
        const Real two_x = Real::from_long(2, wide) * xw;
        Row res{Real::from_long(1, wide), Real(wide)};
        Row base{Real(wide), Real::from_long(1, wide)};
        while (e != 0) {
            if (mpz_odd_p(e.get_mpz_t())) {
                res = row_mul(res, base, two_x, ops);
            }
            base = row_mul(base, base, two_x, ops);
            e >>= 1;
        }
        return {(res.a + res.b * xw).round_to(d), ops};
    }

    Mat2 res = Mat2::identity(wide);
    Mat2 base = Mat2::generator(xw);
    while (e != 0) {
        if (mpz_odd_p(e.get_mpz_t())) {
            res = mat2_mul(res, base, ops);
        }
        base = mat2_mul(base, base, ops);
        e >>= 1;
    }
    // M^n applied to (T_0, T_1) = (1, x); the first component is T_n.
    // The final application is not part of the powering count.
    return {(res.a11 + res.a12 * xw).round_to(d), ops};
}

EvalResult eval_cayley(const Real& x, const Degree& n) {
    if (n < 0) {
        throw BadParams("degree must be nonnegative");
    }
    const long d = x.precision_digits();
    const long wide = widened_digits(x, n);
    const Real xw = x.round_to(wide);
    OpCount ops;
    const Real two_x = Real::from_long(2, wide) * xw;
    LinPoly res{Real(wide), Real::from_long(1, wide)};   // lambda^0 = 0*l + 1
    LinPoly base{Real::from_long(1, wide), Real(wide)};  // lambda^1
    Degree e = n;
    while (e != 0) {
        if (mpz_odd_p(e.get_mpz_t())) {
            res = linpoly_mul(res, base, two_x, ops);
        }
        base = linpoly_mul(base, base, two_x, ops);
        e >>= 1;
    }
    // lambda^n = a*lambda + b implies M^n = a*M + b*I (Cayley-Hamilton);
    // applied to (1, x) the first component is a*x + b.
    return {(res.a * xw + res.b).round_to(d), ops};
}

Real eval(const Real& x, const Degree& n, Engine engine) {
    switch (engine) {
        case Engine::recurrence: return eval_recurrence(x, n).value;
        case Engine::trig: return eval_trig(x, n);
        case Engine::matrix: return eval_matrix(x, n).value;
        case Engine::cayley: return eval_cayley(x, n).value;
    }
    throw BadParams("unknown engine");
}

}  // namespace chebcrypt
