#include "betaq/qseries.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "betaq/errors.hpp"
#include "detail/int_series.hpp"

namespace betaq {

Rational parse_rational(std::string_view text) {
    Rational r;
    if (text.empty() || r.set_str(std::string(text), 10) != 0)
        throw Error("not a rational: '" + std::string(text) + "'");
    if (r.get_den() == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

QSeries::QSeries(long offset, std::vector<Rational> coeffs, long truncation)
    : offset_(offset), truncation_(truncation), coeffs_(std::move(coeffs)) {
    normalize();
}

void QSeries::normalize() {
    long known = truncation_ - offset_;
    if (known <= 0) {
        coeffs_.clear();
        offset_ = truncation_;
        return;
    }
    coeffs_.resize(static_cast<std::size_t>(known));
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) != 0; });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        offset_ = truncation_;
        return;
    }
    long skip = first - coeffs_.begin();
    if (skip > 0) {
        coeffs_.erase(coeffs_.begin(), first);
        offset_ += skip;
    }
}

QSeries QSeries::zero(long truncation) { return QSeries(truncation, {}, truncation); }

QSeries QSeries::one(long truncation) { return QSeries(0, {Rational(1)}, truncation); }

QSeries QSeries::monomial(const Rational& c, long exponent, long truncation) {
    return QSeries(exponent, {c}, truncation);
}

Rational QSeries::leading() const { return is_zero() ? Rational(0) : coeffs_.front(); }

Rational QSeries::coeff(long e) const {
    if (e >= truncation_) throw UnknownCoefficient(e);
    if (e < offset_) return 0;
    return coeffs_[static_cast<std::size_t>(e - offset_)];
}

QSeries QSeries::truncated(long n) const {
    if (n > truncation_) throw UnknownCoefficient(n - 1);
    if (n <= offset_) return zero(n);
    std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + (n - offset_));
    return QSeries(offset_, std::move(c), n);
}

QSeries QSeries::shifted(long s) const {
    QSeries out = *this;
    out.offset_ += s;
    out.truncation_ += s;
    return out;
}

std::optional<long> first_difference(const QSeries& a, const QSeries& b) {
    long hi = std::min(a.truncation(), b.truncation());
    long lo = std::min(a.offset(), b.offset());
    for (long e = lo; e < hi; ++e)
        if (a.coeff(e) != b.coeff(e)) return e;
    return std::nullopt;
}

bool operator==(const QSeries& a, const QSeries& b) {
    return a.truncation_ == b.truncation_ && a.offset_ == b.offset_ && a.coeffs_ == b.coeffs_;
}

QSeries QSeries::operator-() const {
    QSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

QSeries& QSeries::operator*=(const Rational& c) {
    if (sgn(c) == 0) return *this = zero(truncation_);
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::string QSeries::to_string(int max_terms) const {
    std::ostringstream os;
    int shown = 0;
    for (std::size_t i = 0; i < coeffs_.size() && shown < max_terms; ++i) {
        const Rational& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        long e = offset_ + static_cast<long>(i);
        Rational mag = abs(c);
        if (shown == 0)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        bool unit = mag == 1;
        if (!unit || e == 0) os << mag.get_str();
        if (e != 0) os << "q" << (e == 1 ? "" : "^" + std::to_string(e));
        ++shown;
    }
    if (shown == 0) os << "0";
    os << (shown == 0 ? " + " : " + ") << "O(q^" << truncation_ << ")";
    return os.str();
}

namespace {

QSeries combine(const QSeries& a, const QSeries& b, bool subtract) {
    long trunc = std::min(a.truncation(), b.truncation());
    long lo = std::min(a.offset(), b.offset());
    if (lo >= trunc) return QSeries::zero(trunc);
    std::vector<Rational> c(static_cast<std::size_t>(trunc - lo));
    for (long e = std::max(lo, a.offset()); e < trunc; ++e) c[e - lo] = a.coeff(e);
    for (long e = std::max(lo, b.offset()); e < trunc; ++e) {
        if (subtract)
            c[e - lo] -= b.coeff(e);
        else
            c[e - lo] += b.coeff(e);
    }
    return QSeries(lo, std::move(c), trunc);
}

} // namespace

QSeries series_add(const QSeries& a, const QSeries& b) { return combine(a, b, false); }
QSeries series_sub(const QSeries& a, const QSeries& b) { return combine(a, b, true); }

QSeries series_mul(const QSeries& a, const QSeries& b) {
    long trunc = std::min(a.truncation() + b.offset(), b.truncation() + a.offset());
    if (a.is_zero() || b.is_zero()) return QSeries::zero(trunc);
    long off = a.offset() + b.offset();
    long len = trunc - off;
    if (len <= 0) return QSeries::zero(trunc);

    // Clear denominators so the convolution runs on integers.
    auto [ia, da] = detail::to_integers(a.coeffs(), len);
    auto [ib, db] = detail::to_integers(b.coeffs(), len);
    std::vector<BigInt> prod = detail::convolve(ia, ib, static_cast<std::size_t>(len));
    return QSeries(off, detail::to_rationals(prod, da * db), trunc);
}

QSeries series_inv(const QSeries& a) {
    if (a.is_zero()) throw ZeroLeadingCoefficient();
    long prec = a.truncation() - a.offset();
    auto [ia, d] = detail::to_integers(a.coeffs(), prec);
    std::vector<Rational> out;
    if (abs(ia[0]) == 1) {
        // a = A/d with unit leading term: 1/a = d * (1/A), and 1/A is integral.
        std::vector<BigInt> inv = detail::inverse_unit(ia, static_cast<std::size_t>(prec));
        out = detail::to_rationals(inv, BigInt(1));
        for (auto& c : out) c *= d;
    } else {
        std::span<const Rational> c = a.coeffs();
        out.resize(static_cast<std::size_t>(prec));
        Rational lead_inv = 1 / c[0];
        out[0] = lead_inv;
        Rational acc;
        for (long n = 1; n < prec; ++n) {
            acc = 0;
            for (long j = 1; j <= n; ++j)
                if (sgn(c[j]) != 0) acc += c[j] * out[n - j];
            out[n] = -acc * lead_inv;
        }
    }
    return QSeries(-a.offset(), std::move(out), -a.offset() + prec);
}

QSeries series_pow(const QSeries& a, long e) {
    QSeries base = e < 0 ? series_inv(a) : a;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    QSeries result = QSeries::one(base.truncation() - base.offset());
    while (n > 0) {
        if (n & 1UL) result = series_mul(result, base);
        n >>= 1;
        if (n > 0) base = series_mul(base, base);
    }
    return result;
}

QSeries series_rescale(const QSeries& a, long m) {
    if (m < 1) throw Error("series_rescale needs m >= 1");
    if (a.is_zero()) return QSeries::zero(a.truncation() * m);
    std::span<const Rational> c = a.coeffs();
    std::vector<Rational> out((c.size() - 1) * static_cast<std::size_t>(m) + 1);
    for (std::size_t i = 0; i < c.size(); ++i) out[i * static_cast<std::size_t>(m)] = c[i];
    return QSeries(a.offset() * m, std::move(out), a.truncation() * m);
}

QSeries euler_product(long delta, long truncation) {
    if (delta < 1) throw Error("euler_product needs delta >= 1");
    if (truncation < 1) throw Error("euler_product needs truncation >= 1");
    std::vector<Rational> c(static_cast<std::size_t>(truncation));
    // sum_{j in Z} (-1)^j q^{delta j(3j-1)/2}
    for (long j = 0;; ++j) {
        long g_pos = j * (3 * j - 1) / 2;
        long g_neg = j * (3 * j + 1) / 2;
        if (delta * g_pos >= truncation) break;
        int sign = (j % 2 == 0) ? 1 : -1;
        c[delta * g_pos] = sign;
        if (j > 0 && delta * g_neg < truncation) c[delta * g_neg] = sign;
    }
    return QSeries(0, std::move(c), truncation);
}

void to_json(nlohmann::json& j, const QSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
    j = {{"offset", s.offset()}, {"truncation", s.truncation()}, {"coeffs", std::move(coeffs)}};
}

void from_json(const nlohmann::json& j, QSeries& s) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) {
        if (!c.is_string()) throw Error("QSeries coefficients must be strings");
        coeffs.push_back(parse_rational(c.get<std::string>()));
    }
    long offset = j.at("offset").get<long>();
    long truncation = j.at("truncation").get<long>();
    if (offset + static_cast<long>(coeffs.size()) > truncation)
        throw Error("QSeries has coefficients at or beyond its truncation");
    s = QSeries(offset, std::move(coeffs), truncation);
}

} // namespace betaq
