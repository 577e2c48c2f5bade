#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zst {

// Exact signed integer. Interior cells grow geometrically with row depth,
// so every cell, sum, and product in the library is arbitrary precision.
using Int = mpz_class;

inline bool is_even(const Int& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

inline Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// (-2)^exp, the weight appearing in the row/total sum closed forms.
inline Int neg2_pow(unsigned long exp) { return pow_int(Int(-2), exp); }

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Exact division by 2; caller must have established evenness.
inline Int half_exact(const Int& v) {
    Int r;
    mpz_divexact_ui(r.get_mpz_t(), v.get_mpz_t(), 2);
    return r;
}

std::string to_decimal(const Int& v);

// Canonical form: optional single '-', no leading zeros, no "-0".
bool is_canonical_decimal(std::string_view s);

// Strict parse of a canonical decimal string; throws ParseError otherwise.
Int parse_decimal(std::string_view s);

}  // namespace zst
