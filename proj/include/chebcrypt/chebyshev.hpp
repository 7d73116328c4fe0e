// Four interchangeable engines computing Chebyshev polynomials of the
// first kind T_n(x) over Reals, with per-call operation counters.
//
// All engines are pure functions of (x, n) and agree on the mathematical
// contract; they differ in cost profile:
//   recurrence  O(n)       three-term recurrence, n < 2^32 only
//   trig        O(1) calls cos(n * arccos x), |x| <= 1 only
//   matrix      O(log n)   2x2 generator matrix, square-and-multiply
//   cayley      O(log n)   powers of the eigenvalue reduced modulo the
//                          characteristic polynomial l^2 - 2xl + 1
#pragma once

#include <gmpxx.h>

#include <string>

#include "chebcrypt/bigreal.hpp"

namespace chebcrypt {

// Secret index / polynomial degree; arbitrary size, n >= 0.
using Degree = mpz_class;

enum class Engine { recurrence, trig, matrix, cayley };

const char* to_string(Engine engine);
Engine engine_from_string(const std::string& name);

struct OpCount {
    unsigned long long muls = 0;
    unsigned long long adds = 0;
};

// 2x2 matrix of Reals; all entries share one working precision.
struct Mat2 {
    Real a11, a12, a21, a22;

    static Mat2 identity(long digits);
    // The generator (0 1; -1 2x) whose n-th power maps (T_0, T_1) to
    // (T_n, T_{n+1}).
    static Mat2 generator(const Real& x);
};

// Schoolbook 2x2 product: 8 multiplications, 4 additions.
Mat2 mat2_mul(const Mat2& a, const Mat2& b, OpCount& ops);

// Linear polynomial a*lambda + b, a residue modulo lambda^2 - 2x*lambda + 1.
struct LinPoly {
    Real a, b;
};

// Product with reduction via lambda^2 = 2x*lambda - 1:
//   a' = a1*a2*2x + a1*b2 + a2*b1,  b' = b1*b2 - a1*a2.
// 5 multiplications, 3 additions ("two_x" is the precomputed 2x).
LinPoly linpoly_mul(const LinPoly& p, const LinPoly& q, const Real& two_x, OpCount& ops);

struct EvalResult {
    Real value;
    OpCount ops;
};

// Loop-cycle count of the binary power algorithm for exponent n.
unsigned long bit_length(const Degree& n);
// Decimal digit count (may overestimate by one); digits10(0) == 1.
long decimal_digits(const Degree& n);

EvalResult eval_recurrence(const Real& x, const Degree& n);
Real eval_trig(const Real& x, const Degree& n);
// exploit_structure switches to a reduced 5-mul product that tracks only
// the first matrix row; default off so counts reflect the plain algorithm.
EvalResult eval_matrix(const Real& x, const Degree& n, bool exploit_structure = false);
EvalResult eval_cayley(const Real& x, const Degree& n);

Real eval(const Real& x, const Degree& n, Engine engine);

}  // namespace chebcrypt
