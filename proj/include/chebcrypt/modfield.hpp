// T polynomials and supporting algebra over finite fields: modular
// evaluation, Shamir secret sharing, the Chebyshev analogue of RSA, and
// the cosh-form discrete-log reduction (small moduli, by brute force).
#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "chebcrypt/chebyshev.hpp"
#include "chebcrypt/errors.hpp"
#include "chebcrypt/rng.hpp"

namespace chebcrypt {

class PrimeField {
public:
    // Probabilistic primality check (64 Miller-Rabin rounds) at construction.
    explicit PrimeField(mpz_class p);

    const mpz_class& p() const { return p_; }
    mpz_class reduce(const mpz_class& v) const;
    mpz_class inverse(const mpz_class& v) const;  // throws NotInvertible

private:
    mpz_class p_;
};

// Shamir share: point (z, y) on the dealt polynomial, z != 0.
struct Share {
    mpz_class z;
    mpz_class y;
};

// T_n(x) mod m for any modulus m >= 2 (prime or composite), computed by
// binary powering of the generator matrix with entries reduced mod m.
// Exact integer arithmetic throughout.
mpz_class t_mod(const Degree& n, const mpz_class& x, const mpz_class& modulus);

// Deals `count` shares of `secret` such that any threshold_degree+1 of
// them reconstruct it and threshold_degree of them reveal nothing.
std::vector<Share> shamir_deal(const mpz_class& secret, long threshold_degree, long count,
                               const PrimeField& field, Rng& rng);

// Lagrange interpolation at 0 from the first threshold_degree+1 shares.
mpz_class shamir_reconstruct(const std::vector<Share>& shares, long threshold_degree,
                             const PrimeField& field);

struct ChebRsaKey {
    mpz_class n;  // p*q
    mpz_class e;  // public index
    mpz_class d;  // secret index, d*e = 1 mod lcm(p^2-1, q^2-1)
    mpz_class p;
    mpz_class q;
};

ChebRsaKey cheb_rsa_keygen(const mpz_class& p, const mpz_class& q, const mpz_class& e);
// X = T_d(N) mod n; the holder of d produces it, anyone checks with e.
mpz_class cheb_rsa_encrypt(const mpz_class& message, const ChebRsaKey& key);
// N = T_e(X) mod n.
mpz_class cheb_rsa_decrypt(const mpz_class& cipher, const ChebRsaKey& key);

// Recovers m with T_m(g) = y mod p by brute-force discrete log of
// u = g + sqrt(g^2-1) against v = y + sqrt(y^2-1). Requires p <= 10^6 and
// both radicands to be quadratic residues; returns nullopt otherwise or
// when no exponent matches. Any returned m is verified via t_mod.
std::optional<mpz_class> cosh_dlog(const mpz_class& g, const mpz_class& y,
                                   const PrimeField& field);

}  // namespace chebcrypt
