// Deterministic random source for protocol runs and benchmarks.
// Same seed, same call sequence -> identical values on every platform.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "chebcrypt/bigreal.hpp"

namespace chebcrypt {

class Rng {
public:
    explicit Rng(uint64_t seed);
    Rng(const Rng&) = delete;
    Rng& operator=(const Rng&) = delete;
    ~Rng();

    // Uniform integer in [0, bound).
    mpz_class below(const mpz_class& bound);
    // Uniform integer with exactly g decimal digits: [10^(g-1), 10^g).
    mpz_class with_digits(long g);
    uint64_t u64();
    std::vector<uint8_t> bytes(size_t n);

    // Uniform real in [0, 1) at the given precision.
    Real unit_real(long digits);
    // Uniform real in [-bound, bound] (bound given as a decimal string).
    Real symmetric_real(const std::string& bound, long digits);

private:
    gmp_randstate_t state_;
};

}  // namespace chebcrypt
