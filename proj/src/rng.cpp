#include "chebcrypt/rng.hpp"

#include <mpfr.h>

namespace chebcrypt {

Rng::Rng(uint64_t seed) {
    gmp_randinit_mt(state_);
    mpz_class s;
    mpz_import(s.get_mpz_t(), 1, 1, sizeof(seed), 0, 0, &seed);
    gmp_randseed(state_, s.get_mpz_t());
}

Rng::~Rng() { gmp_randclear(state_); }

mpz_class Rng::below(const mpz_class& bound) {
    if (bound <= 0) {
        throw BadParams("rng bound must be positive");
    }
    mpz_class r;
    mpz_urandomm(r.get_mpz_t(), state_, bound.get_mpz_t());
    return r;
}

mpz_class Rng::with_digits(long g) {
    if (g < 1) {
        throw BadParams("digit count must be positive");
    }
    mpz_class lo = 1;
    for (long i = 1; i < g; ++i) {
        lo *= 10;
    }
    const mpz_class span = lo * 9;  // [10^(g-1), 10^g) has 9*10^(g-1) values
    return lo + below(span);
}

uint64_t Rng::u64() {
    mpz_class r;
    mpz_urandomb(r.get_mpz_t(), state_, 64);
    uint64_t out = 0;
    for (int limb = 0; limb < 2; ++limb) {
        mpz_class part = r >> (32 * limb);
        out |= static_cast<uint64_t>(mpz_get_ui(part.get_mpz_t()) & 0xFFFFFFFFu) << (32 * limb);
    }
    return out;
}

std::vector<uint8_t> Rng::bytes(size_t n) {
    std::vector<uint8_t> out(n, 0);
    mpz_class r;
    mpz_urandomb(r.get_mpz_t(), state_, static_cast<mp_bitcnt_t>(8 * n));
    size_t written = 0;
    mpz_export(out.data(), &written, 1, 1, 0, 0, r.get_mpz_t());
    if (written < n && written > 0) {
        // mpz_export drops leading zero bytes; shift right to keep them.
        std::vector<uint8_t> padded(n, 0);
        std::copy(out.begin(), out.begin() + static_cast<long>(written),
                  padded.begin() + static_cast<long>(n - written));
        out = std::move(padded);
    }
    return out;
}

Real Rng::unit_real(long digits) {
    Real r(digits);
    mpfr_urandomb(r.raw(), state_);
    return r;
}

Real Rng::symmetric_real(const std::string& bound, long digits) {
    const Real b = real_from_decimal(bound, digits);
    const Real u = unit_real(digits);
    const Real two = Real::from_long(2, digits);
    const Real one = Real::from_long(1, digits);
    return (two * u - one) * b;
}

}  // namespace chebcrypt
