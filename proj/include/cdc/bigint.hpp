#pragma once

#include <gmpxx.h>

#include <string>

namespace cdc {

using BigInt = mpz_class;

inline BigInt big_pow(unsigned long base, unsigned long exponent) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
    return r;
}

inline std::string to_string(const BigInt& value) { return value.get_str(); }

}  // namespace cdc
