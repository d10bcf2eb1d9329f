#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "betaq/rational.hpp"

namespace betaq {

/// Arbitrary-precision real with an explicit working precision in bits.
///
/// Binary operations produce a result at the smaller of the two operand
/// precisions.  Equality is exact; compare numerically with rel_error.
class BigReal {
public:
    static constexpr long kDefaultPrecision = 256;

    explicit BigReal(long prec = kDefaultPrecision);
    BigReal(long value, long prec);
    BigReal(int value, long prec) : BigReal(static_cast<long>(value), prec) {}
    BigReal(double value, long prec);
    BigReal(const BigInt& value, long prec);
    BigReal(const Rational& value, long prec);
    static BigReal parse(const std::string& decimal, long prec);

    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
    BigReal with_precision(long prec) const;

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// Scientific decimal string.  digits == 0 picks the digits the
    /// precision supports.
    std::string to_decimal(int digits = 0) const;

    BigReal operator-() const;
    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);
    BigReal& operator/=(const BigReal& o);
    BigReal& operator*=(long o);
    BigReal& operator/=(long o);

    friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
    friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
    friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
    friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
    friend BigReal operator*(BigReal a, long b) { return a *= b; }
    friend BigReal operator*(long a, BigReal b) { return b *= a; }
    friend BigReal operator/(BigReal a, long b) { return a /= b; }

    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

private:
    mpfr_t v_;
};

BigReal pi(long prec);
BigReal log2_const(long prec);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log1p(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal abs(const BigReal& x);
BigReal gamma(const BigReal& x);
BigReal expm1(const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, long n);
/// 2^e for integer or rational e.
BigReal exp2(const Rational& e, long prec);

/// |a - b| / |b|; |a - b| when b is zero.
BigReal rel_error(const BigReal& a, const BigReal& b);

/// 2^-bits at the given precision, for tolerance comparisons.
BigReal tolerance_bits(long bits, long prec);

} // namespace betaq
