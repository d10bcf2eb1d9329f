#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace betaq {

using BigInt = mpz_class;
using Rational = mpq_class;

// "p/q" or "p"; always canonical.
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(std::string_view text);

inline BigInt pow_int(long base, unsigned long e) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), e);
    if (base < 0 && (e & 1U)) out = -out;
    return out;
}

inline Rational pow2(long e) {
    Rational out(1);
    if (e >= 0)
        mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<unsigned long>(e));
    else
        mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<unsigned long>(-e));
    return out;
}

} // namespace betaq
