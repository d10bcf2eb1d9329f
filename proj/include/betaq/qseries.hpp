#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "betaq/rational.hpp"

namespace betaq {

/// Default number of q-exponents kept when a caller does not say otherwise.
inline constexpr long kDefaultTruncation = 200;

/// Truncated formal Laurent series in q with exact rational coefficients.
///
/// A series is `sum_{e = offset}^{truncation-1} c_e q^e + O(q^truncation)`.
/// Coefficients at exponents >= truncation are unknown; asking for one throws
/// UnknownCoefficient.  A nonzero series always has `coeff(offset) != 0`; the
/// zero series is canonical, with `offset() == truncation()` and no stored
/// coefficients.
class QSeries {
public:
    /// Zero series known to O(q^0).
    QSeries() = default;

    /// Builds `sum coeffs[i] q^(offset+i) + O(q^truncation)`.  Coefficients at
    /// or past the truncation are dropped; missing ones below it are zero.
    QSeries(long offset, std::vector<Rational> coeffs, long truncation);

    static QSeries zero(long truncation);
    static QSeries one(long truncation);
    static QSeries monomial(const Rational& c, long exponent, long truncation);

    long offset() const noexcept { return offset_; }
    long truncation() const noexcept { return truncation_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Leading coefficient; zero for the zero series.
    Rational leading() const;

    /// Coefficient of q^e.  Throws UnknownCoefficient when e >= truncation().
    Rational coeff(long e) const;

    /// Stored coefficients, for exponents offset() .. truncation()-1.
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    /// Same series known only up to O(q^n); n must not exceed truncation().
    QSeries truncated(long n) const;

    /// Multiplies by q^s.
    QSeries shifted(long s) const;

    /// First exponent below the shared truncation where the two series
    /// differ, or nullopt if they agree wherever both are known.
    friend std::optional<long> first_difference(const QSeries& a, const QSeries& b);

    /// Exact equality on the shared truncation window.
    friend bool agrees(const QSeries& a, const QSeries& b) { return !first_difference(a, b); }

    /// Structural equality: same truncation and same coefficients.
    friend bool operator==(const QSeries& a, const QSeries& b);

    QSeries operator-() const;
    QSeries& operator*=(const Rational& c);

    std::string to_string(int max_terms = 12) const;

private:
    void normalize();

    long offset_ = 0;
    long truncation_ = 0;
    std::vector<Rational> coeffs_;
};

QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_sub(const QSeries& a, const QSeries& b);

/// Cauchy product.  Offset is a.offset + b.offset; the result is known up to
/// min(a.truncation + b.offset, b.truncation + a.offset).
QSeries series_mul(const QSeries& a, const QSeries& b);

/// Multiplicative inverse; the result has offset -a.offset().
/// Throws ZeroLeadingCoefficient for the zero series.
QSeries series_inv(const QSeries& a);

/// a^e by repeated squaring; negative e goes through series_inv.
QSeries series_pow(const QSeries& a, long e);

/// Substitutes q -> q^m (m >= 1).
QSeries series_rescale(const QSeries& a, long m);

/// (q^delta; q^delta)_inf known to O(q^truncation), built from the
/// pentagonal number theorem.
QSeries euler_product(long delta, long truncation);

/// {"offset": int, "truncation": int, "coeffs": ["p/q", ...]}; coefficients
/// are exact decimal strings.
void to_json(nlohmann::json& j, const QSeries& s);
void from_json(const nlohmann::json& j, QSeries& s);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return series_add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return series_sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return series_mul(a, b); }
inline QSeries operator*(const Rational& c, QSeries a) { return a *= c; }

} // namespace betaq
