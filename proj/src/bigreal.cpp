#include "betaq/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>

#include "betaq/errors.hpp"

namespace betaq {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

mpfr_prec_t clamp_prec(long prec) {
    return static_cast<mpfr_prec_t>(std::max<long>(prec, MPFR_PREC_MIN));
}

long min_prec(const BigReal& a, const BigReal& b) { return std::min(a.precision(), b.precision()); }

} // namespace

BigReal::BigReal(long prec) {
    mpfr_init2(v_, clamp_prec(prec));
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, long prec) {
    mpfr_init2(v_, clamp_prec(prec));
    mpfr_set_si(v_, value, kRnd);
}

BigReal::BigReal(double value, long prec) {
    mpfr_init2(v_, clamp_prec(prec));
    mpfr_set_d(v_, value, kRnd);
}

BigReal::BigReal(const BigInt& value, long prec) {
    mpfr_init2(v_, clamp_prec(prec));
    mpfr_set_z(v_, value.get_mpz_t(), kRnd);
}

BigReal::BigReal(const Rational& value, long prec) {
    mpfr_init2(v_, clamp_prec(prec));
    mpfr_set_q(v_, value.get_mpq_t(), kRnd);
}

BigReal BigReal::parse(const std::string& decimal, long prec) {
    BigReal out(prec);
    if (mpfr_set_str(out.v_, decimal.c_str(), 10, kRnd) != 0) throw Error("not a decimal: '" + decimal + "'");
    return out;
}

BigReal::BigReal(const BigReal& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, kRnd);
}

BigReal::BigReal(BigReal&& other) noexcept {
    // Leave the source as a valid minimal-precision zero.
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, kRnd);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::with_precision(long prec) const {
    BigReal out(prec);
    mpfr_set(out.v_, v_, kRnd);
    return out;
}

std::string BigReal::to_decimal(int digits) const {
    if (digits <= 0) digits = static_cast<int>(std::floor(static_cast<double>(precision()) * 0.30103)) + 1;
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*Re", digits - 1, v_);
    std::unique_ptr<char, void (*)(char*)> holder(raw, [](char* p) { mpfr_free_str(p); });
    return std::string(raw);
}

BigReal BigReal::operator-() const {
    BigReal out(precision());
    mpfr_neg(out.v_, v_, kRnd);
    return out;
}

#define BETAQ_BINARY_OP(op, fn)                                    \
    BigReal& BigReal::operator op(const BigReal& o) {              \
        long p = min_prec(*this, o);                               \
        if (p < precision()) mpfr_prec_round(v_, clamp_prec(p), kRnd); \
        fn(v_, v_, o.v_, kRnd);                                    \
        return *this;                                              \
    }

BETAQ_BINARY_OP(+=, mpfr_add)
BETAQ_BINARY_OP(-=, mpfr_sub)
BETAQ_BINARY_OP(*=, mpfr_mul)
BETAQ_BINARY_OP(/=, mpfr_div)
#undef BETAQ_BINARY_OP

BigReal& BigReal::operator*=(long o) {
    mpfr_mul_si(v_, v_, o, kRnd);
    return *this;
}

BigReal& BigReal::operator/=(long o) {
    mpfr_div_si(v_, v_, o, kRnd);
    return *this;
}

BigReal pi(long prec) {
    BigReal out(prec);
    mpfr_const_pi(out.get(), kRnd);
    return out;
}

BigReal log2_const(long prec) {
    BigReal out(prec);
    mpfr_const_log2(out.get(), kRnd);
    return out;
}

#define BETAQ_UNARY_FN(name, fn)                  \
    BigReal name(const BigReal& x) {              \
        BigReal out(x.precision());               \
        fn(out.get(), x.get(), kRnd);             \
        return out;                               \
    }

BETAQ_UNARY_FN(exp, mpfr_exp)
BETAQ_UNARY_FN(log, mpfr_log)
BETAQ_UNARY_FN(log1p, mpfr_log1p)
BETAQ_UNARY_FN(sqrt, mpfr_sqrt)
BETAQ_UNARY_FN(abs, mpfr_abs)
BETAQ_UNARY_FN(gamma, mpfr_gamma)
BETAQ_UNARY_FN(expm1, mpfr_expm1)
#undef BETAQ_UNARY_FN

BigReal pow(const BigReal& x, const BigReal& y) {
    BigReal out(min_prec(x, y));
    mpfr_pow(out.get(), x.get(), y.get(), kRnd);
    return out;
}

BigReal pow(const BigReal& x, long n) {
    BigReal out(x.precision());
    mpfr_pow_si(out.get(), x.get(), n, kRnd);
    return out;
}

BigReal exp2(const Rational& e, long prec) {
    BigReal out(prec);
    BigReal ex(e, prec);
    mpfr_exp2(out.get(), ex.get(), kRnd);
    return out;
}

BigReal rel_error(const BigReal& a, const BigReal& b) {
    BigReal diff = abs(a - b);
    if (b.is_zero()) return diff;
    return diff / abs(b);
}

BigReal tolerance_bits(long bits, long prec) { return exp2(Rational(-bits), prec); }

} // namespace betaq
