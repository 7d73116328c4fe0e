// Closed-form quantum-attack resource estimates: qubit counts and
// operations per try for Shor on RSA and Grover on T polynomials, plus
// the classical matrix-evaluation operation count. Exact big-integer
// arithmetic with a separate significant-digit renderer.
#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace chebcrypt {

struct ResourceEstimate {
    mpz_class qubits;
    mpz_class ops_per_try;
};

// Shor on an n-bit RSA modulus: qubits = 3n, ops = 30 n^4.
ResourceEstimate shor_rsa(long n_bits);

// Grover on T polynomials with n-bit secrets. Fixed-point registers are
// 4n wide, 15 registers deep; each of the 12n average CMUL2 cycles costs
// 90 (4n)^3 elementary operations:
//   qubits = (4n)^2 * 12 * 15,  ops = 4n * 12 * 90 * (4n)^3.
ResourceEstimate grover_tpoly(long n_bits);

// Classical binary-power cost at the given decimal precision, using the
// 2325-bits-per-700-digits convention: (12 * bits, 6 * bits).
std::pair<mpz_class, mpz_class> matrix_attack_ops(long digits);

// "d.dd·10^k" with UTF-8 middle dot and superscript exponent, rounded
// half-up to sig significant digits.
std::string sci_string(const mpz_class& value, int sig);
std::string sci_string(double value, int sig);

// Ratio of this estimate's qubits to a baseline qubit count.
double qubit_ratio(const ResourceEstimate& estimate, long baseline_qubits);

// Attack-comparison table; rows: Shor at rsa_bits, Grover at rsa_bits/2
// and rsa_bits.
std::string qc_cost_table(long rsa_bits);

}  // namespace chebcrypt
