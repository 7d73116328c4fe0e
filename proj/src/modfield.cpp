#include "chebcrypt/modfield.hpp"

#include <algorithm>
#include <set>

namespace chebcrypt {

PrimeField::PrimeField(mpz_class p) : p_(std::move(p)) {
    if (p_ < 2 || mpz_probab_prime_p(p_.get_mpz_t(), 64) == 0) {
        throw BadParams("field modulus is not prime: " + p_.get_str());
    }
}

mpz_class PrimeField::reduce(const mpz_class& v) const {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t());
    return r;
}

mpz_class PrimeField::inverse(const mpz_class& v) const {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t()) == 0) {
        throw NotInvertible(v.get_str() + " has no inverse mod " + p_.get_str());
    }
    return r;
}

namespace {

struct MatMod {
    mpz_class a11, a12, a21, a22;
};

MatMod matmod_mul(const MatMod& a, const MatMod& b, const mpz_class& m) {
    MatMod c{a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
             a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
    mpz_mod(c.a11.get_mpz_t(), c.a11.get_mpz_t(), m.get_mpz_t());
    mpz_mod(c.a12.get_mpz_t(), c.a12.get_mpz_t(), m.get_mpz_t());
    mpz_mod(c.a21.get_mpz_t(), c.a21.get_mpz_t(), m.get_mpz_t());
    mpz_mod(c.a22.get_mpz_t(), c.a22.get_mpz_t(), m.get_mpz_t());
    return c;
}

}  // namespace

mpz_class t_mod(const Degree& n, const mpz_class& x, const mpz_class& modulus) {
    if (n < 0) {
        throw BadParams("degree must be nonnegative");
    }
    if (modulus < 2) {
        throw BadParams("modulus must be >= 2");
    }
    mpz_class xr;
    mpz_mod(xr.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());

    MatMod res{1, 0, 0, 1};
    MatMod base{0, 1, modulus - 1, (2 * xr) % modulus};
    Degree e = n;
    while (e != 0) {
        if (mpz_odd_p(e.get_mpz_t())) {
            res = matmod_mul(res, base, modulus);
        }
        base = matmod_mul(base, base, modulus);
        e >>= 1;
    }
    // (T_n, T_{n+1}) = M^n (1, x); first component.
    return (res.a11 + res.a12 * xr) % modulus;
}

std::vector<Share> shamir_deal(const mpz_class& secret, long threshold_degree, long count,
                               const PrimeField& field, Rng& rng) {
    const mpz_class& p = field.p();
    if (secret < 0 || secret >= p) {
        throw BadParams("secret must lie in [0, p)");
    }
    if (threshold_degree < 0 || count < threshold_degree + 1 || count >= p) {
        throw BadParams("need threshold_degree+1 <= count < p");
    }

    // P(z) = secret + a_1 z + ... + a_m z^m, a_m != 0.
    std::vector<mpz_class> coeffs;
    coeffs.push_back(secret);
    for (long k = 1; k <= threshold_degree; ++k) {
        mpz_class a = rng.below(p);
        if (k == threshold_degree) {
            while (a == 0) {
                a = rng.below(p);
            }
        }
        coeffs.push_back(a);
    }

    std::vector<Share> shares;
    std::set<mpz_class> used;
    while (static_cast<long>(shares.size()) < count) {
        mpz_class z = 1 + rng.below(p - 1);  // distinct nonzero abscissas
        if (!used.insert(z).second) {
            continue;
        }
        mpz_class y = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            y = (y * z + *it) % p;
        }
        shares.push_back(Share{std::move(z), std::move(y)});
    }
    return shares;
}

mpz_class shamir_reconstruct(const std::vector<Share>& shares, long threshold_degree,
                             const PrimeField& field) {
    const mpz_class& p = field.p();
    const size_t needed = static_cast<size_t>(threshold_degree) + 1;
    if (shares.size() < needed) {
        throw InsufficientShares("need " + std::to_string(needed) + " shares, got " +
                                 std::to_string(shares.size()));
    }
    std::set<mpz_class> seen;
    for (size_t i = 0; i < needed; ++i) {
        if (!seen.insert(field.reduce(shares[i].z)).second) {
            throw DuplicateAbscissa("duplicate share abscissa " + shares[i].z.get_str());
        }
    }

    // Lagrange at 0: secret = sum_i y_i * prod_{j != i} z_j / (z_j - z_i).
    mpz_class secret = 0;
    for (size_t i = 0; i < needed; ++i) {
        mpz_class num = 1;
        mpz_class den = 1;
        for (size_t j = 0; j < needed; ++j) {
            if (j == i) {
                continue;
            }
            num = (num * shares[j].z) % p;
            den = (den * field.reduce(shares[j].z - shares[i].z)) % p;
        }
        secret = field.reduce(secret + shares[i].y * num % p * field.inverse(den));
    }
    return secret;
}

ChebRsaKey cheb_rsa_keygen(const mpz_class& p, const mpz_class& q, const mpz_class& e) {
    if (mpz_probab_prime_p(p.get_mpz_t(), 64) == 0 || mpz_probab_prime_p(q.get_mpz_t(), 64) == 0) {
        throw BadParams("p and q must be prime");
    }
    if (p == q) {
        throw BadParams("p and q must differ");
    }
    mpz_class order;
    mpz_lcm(order.get_mpz_t(), mpz_class(p * p - 1).get_mpz_t(),
            mpz_class(q * q - 1).get_mpz_t());
    ChebRsaKey key;
    key.p = p;
    key.q = q;
    key.n = p * q;
    key.e = e;
    if (mpz_invert(key.d.get_mpz_t(), e.get_mpz_t(), order.get_mpz_t()) == 0) {
        throw NotInvertible("e = " + e.get_str() + " is not invertible mod lcm(p^2-1, q^2-1) = " +
                            order.get_str());
    }
    return key;
}

mpz_class cheb_rsa_encrypt(const mpz_class& message, const ChebRsaKey& key) {
    return t_mod(key.d, message, key.n);
}

mpz_class cheb_rsa_decrypt(const mpz_class& cipher, const ChebRsaKey& key) {
    return t_mod(key.e, cipher, key.n);
}

namespace {

// Brute-force square root mod p; fine for the small moduli this module
// accepts.
std::optional<mpz_class> sqrt_mod(const mpz_class& a, const mpz_class& p) {
    mpz_class v;
    mpz_mod(v.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    for (mpz_class t = 0; t < p; ++t) {
        if ((t * t) % p == v) {
            return t;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<mpz_class> cosh_dlog(const mpz_class& g, const mpz_class& y,
                                   const PrimeField& field) {
    const mpz_class& p = field.p();
    if (p > 1000000) {
        throw BadParams("cosh_dlog is brute force; p must be <= 10^6");
    }
    const mpz_class gr = field.reduce(g);
    const mpz_class yr = field.reduce(y);

    if (gr == 1) {
        // u = 1: T_m(1) = 1 for every m, so only y = 1 is reachable.
        if (yr == 1) {
            return mpz_class(1);
        }
        return std::nullopt;
    }

    const auto sg = sqrt_mod(gr * gr - 1, p);
    const auto sy = sqrt_mod(yr * yr - 1, p);
    if (!sg || !sy) {
        return std::nullopt;
    }
    const mpz_class u = field.reduce(gr + *sg);
    const mpz_class v = field.reduce(yr + *sy);
    const mpz_class v_inv = field.inverse(v);

    // T_m(g) = (u^m + u^-m)/2, so a hit is u^m = v or u^m = v^-1.
    mpz_class pw = 1;
    for (mpz_class m = 0; m < p; ++m) {
        if (pw == v || pw == v_inv) {
            if (t_mod(m, gr, p) == yr) {
                return m;
            }
        }
        pw = (pw * u) % p;
    }
    return std::nullopt;
}

}  // namespace chebcrypt
