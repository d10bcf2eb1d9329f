#include "betaq/lambert.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "betaq/analytics.hpp"
#include "betaq/basis.hpp"
#include "betaq/eisenstein.hpp"
#include "betaq/errors.hpp"
#include "betaq/etaq.hpp"

namespace betaq {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

BigInt IntPolynomial::coeff(long i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<std::size_t>(i)];
}

BigInt IntPolynomial::operator()(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

bool IntPolynomial::is_palindromic() const { return std::equal(c_.begin(), c_.end(), c_.rbegin()); }

IntPolynomial IntPolynomial::substitute_power(long m) const {
    if (m < 1) throw Error("substitute_power needs m >= 1");
    if (c_.empty()) return {};
    std::vector<BigInt> out(static_cast<std::size_t>(degree() * m + 1));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i * static_cast<std::size_t>(m)] = c_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted(long s) const {
    if (s < 0) throw Error("polynomial shift must be nonnegative");
    if (c_.empty()) return {};
    std::vector<BigInt> out(static_cast<std::size_t>(s), BigInt(0));
    out.insert(out.end(), c_.begin(), c_.end());
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(char var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        BigInt mag = abs(c_[i]);
        os << (first ? (sgn(c_[i]) < 0 ? "-" : "") : (sgn(c_[i]) < 0 ? " - " : " + "));
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<long>(i)) + b.coeff(static_cast<long>(i));
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + BigInt(-1) * b; }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const BigInt& s, const IntPolynomial& p) {
    std::vector<BigInt> out = p.c_;
    for (auto& x : out) x *= s;
    return IntPolynomial(std::move(out));
}

IntPolynomial eulerian_poly(int r) {
    if (r < 0) throw Error("eulerian_poly needs r >= 0");
    std::vector<BigInt> sum;
    for (long l = 1; l <= r + 1; ++l) sum.push_back(pow_int(l, static_cast<unsigned long>(r)));
    IntPolynomial p(std::move(sum));
    IntPolynomial one_minus_t({BigInt(1), BigInt(-1)});
    for (int i = 0; i < r + 1; ++i) p = p * one_minus_t;
    const long keep = std::max(r - 1, 0) + 1;
    std::vector<BigInt> c(p.coeffs().begin(), p.coeffs().begin() + std::min<long>(keep, p.degree() + 1));
    return IntPolynomial(std::move(c));
}

IntPolynomial p_k_poly(int k) {
    if (k < 1) throw Error("p_k_poly needs k >= 1");
    IntPolynomial a = eulerian_poly(2 * k);
    IntPolynomial one_plus_t({BigInt(1), BigInt(1)});
    IntPolynomial lhs = a;
    for (int i = 0; i < 2 * k + 1; ++i) lhs = lhs * one_plus_t;
    return lhs - pow_int(2, 2 * k) * a.substitute_power(2).shifted(1);
}

QSeries lambert_series(const std::function<int(long)>& c, const IntPolynomial& num, long d, int e,
                       long truncation) {
    if (d < 1 || e < 0) throw Error("lambert_series needs d >= 1 and e >= 0");
    if (num.degree() >= 0 && sgn(num.coeff(0)) != 0) throw Error("lambert_series numerator needs zero constant term");
    if (truncation <= 0) return QSeries::zero(truncation);

    // C(m + e - 1, e - 1), the coefficients of 1/(1 - x)^e.
    std::vector<BigInt> nb(static_cast<std::size_t>(truncation));
    nb[0] = 1;
    for (long m = 1; m < truncation; ++m) {
        nb[m] = e == 0 ? BigInt(0) : BigInt(nb[m - 1] * (m + e - 1) / m);
    }

    std::vector<BigInt> acc(static_cast<std::size_t>(truncation));
    for (long n = 1; n < truncation; ++n) {
        int cn = c(n);
        if (cn == 0) continue;
        for (long j = 1; j <= num.degree(); ++j) {
            const BigInt& nj = num.coeffs()[j];
            if (sgn(nj) == 0) continue;
            const long base = n * j;
            if (base >= truncation) break;
            for (long m = 0; base + d * n * m < truncation; ++m) {
                if (cn > 0)
                    mpz_addmul(acc[base + d * n * m].get_mpz_t(), nj.get_mpz_t(), nb[m].get_mpz_t());
                else
                    mpz_submul(acc[base + d * n * m].get_mpz_t(), nj.get_mpz_t(), nb[m].get_mpz_t());
            }
        }
    }
    std::vector<Rational> out(acc.begin(), acc.end());
    return QSeries(0, std::move(out), truncation);
}

QSeries lambert_expand(int k, long truncation) {
    if (k < 1) throw Error("lambert_expand needs k >= 1");
    const CharacterTable chi = CharacterTable::chi_minus4();
    auto c = [&chi](long n) { return chi(n); };
    const Rational e2k(euler_number(2 * k));
    if (k % 2 == 1) {
        IntPolynomial num = eulerian_poly(2 * k).substitute_power(2).shifted(2);
        return Rational(-1 / e2k) * lambert_series(c, num, 2, 2 * k + 1, truncation);
    }
    IntPolynomial num = p_k_poly(k).shifted(1);
    return Rational(1 / (pow2(2 * k) * e2k)) * lambert_series(c, num, 2, 2 * k + 1, truncation);
}

IdentityReport verify_theorem2(int k, long truncation) {
    IdentityReport rep;
    rep.identity = "theorem2";
    rep.k = k;
    rep.truncation = truncation;
    QSeries f = eta_expand(quotients::f_k(k), truncation);
    QSeries lam = lambert_expand(k, truncation);
    rep.first_mismatch = first_difference(f, lam);
    QSeries diff = f - lam;
    rep.difference_zero = diff.is_zero();
    if (k == 1) {
        rep.holds = rep.difference_zero;
        return rep;
    }
    BasisSet basis = build_basis(k, truncation);
    Decomposition d = decompose_recording(diff, basis);
    ConditionReport cr = cusp_conditions(d);
    rep.residual_zero = d.residual_zero;
    rep.c1 = cr.c1;
    rep.c2 = cr.c2;
    rep.c3 = cr.c3;
    rep.holds = d.residual_zero && cr.all();
    return rep;
}

std::optional<ClassicalIdentity> parse_classical(const std::string& name) {
    if (name == "ramanujan") return ClassicalIdentity::ramanujan;
    if (name == "hou-sun" || name == "hou_sun" || name == "housun") return ClassicalIdentity::hou_sun;
    if (name == "k3") return ClassicalIdentity::k3;
    return std::nullopt;
}

std::string to_string(ClassicalIdentity which) {
    switch (which) {
    case ClassicalIdentity::ramanujan: return "ramanujan";
    case ClassicalIdentity::hou_sun: return "hou-sun";
    case ClassicalIdentity::k3: return "k3";
    }
    return "?";
}

namespace {

// A_6 exactly as it appears in the k = 3 identity.
IntPolynomial displayed_a6() {
    return IntPolynomial({BigInt(1), BigInt(57), BigInt(302), BigInt(302), BigInt(57), BigInt(1)});
}

} // namespace

QSeries classical_lhs(ClassicalIdentity which, long truncation) {
    switch (which) {
    case ClassicalIdentity::ramanujan: {
        // sum_{n >= 0} (-1)^n q^n / (1 - q^{2n+1}), term by term.
        std::vector<Rational> c(static_cast<std::size_t>(std::max<long>(truncation, 0)));
        for (long n = 0; n < truncation; ++n) {
            const int sign = n % 2 == 0 ? 1 : -1;
            for (long e = n; e < truncation; e += 2 * n + 1) c[e] += sign;
        }
        return QSeries(0, std::move(c), truncation);
    }
    case ClassicalIdentity::hou_sun: {
        // With m = 2n+1 and (-1)^n = chi_-4(m) the sum is
        // q^{-1} sum_m chi_-4(m) (q^m + q^{2m}) / (1 - q^m)^3.
        const CharacterTable chi = CharacterTable::chi_minus4();
        IntPolynomial num({BigInt(0), BigInt(1), BigInt(1)});
        QSeries s = lambert_series([&chi](long m) { return chi(m); }, num, 1, 3, truncation + 1);
        return s.shifted(-1);
    }
    case ClassicalIdentity::k3: {
        const CharacterTable chi = CharacterTable::chi_minus4();
        IntPolynomial num = displayed_a6().substitute_power(2).shifted(2);
        QSeries lam = lambert_series([&chi](long n) { return chi(n); }, num, 2, 7, truncation);
        QSeries t1 = eta_expand(EtaQuotient::parse("4^22*8^4/2^12"), truncation);
        return lam + Rational(17) * t1;
    }
    }
    throw Error("unknown identity");
}

QSeries classical_rhs(ClassicalIdentity which, long truncation) {
    switch (which) {
    case ClassicalIdentity::ramanujan:
        // (q^4;q^4)^2 / (q^2;q^4)^2 = (q^4;q^4)^4 / (q^2;q^2)^2
        return eta_product(EtaQuotient::parse("4^4/2^2"), truncation);
    case ClassicalIdentity::hou_sun:
        // (q^2;q^4)^2 (q^4;q^4)^6 / (q;q^2)^4 = (q^2;q^2)^6 (q^4;q^4)^4 / (q;q)^4
        return eta_product(EtaQuotient::parse("2^6*4^4/1^4"), truncation);
    case ClassicalIdentity::k3: {
        QSeries t1 = eta_expand(EtaQuotient::parse("4^22*8^4/2^12"), truncation);
        QSeries t2 = eta_expand(EtaQuotient::parse("4^46/(2^20*8^12)"), truncation);
        QSeries t3 = eta_expand(EtaQuotient::parse("8^20/(2^4*4^2)"), truncation);
        return Rational(61) * t1 + t2 + Rational(16) * t3;
    }
    }
    throw Error("unknown identity");
}

IdentityReport classical_report(ClassicalIdentity which, long truncation) {
    IdentityReport rep;
    rep.identity = to_string(which);
    rep.truncation = truncation;
    QSeries lhs = classical_lhs(which, truncation);
    QSeries rhs = classical_rhs(which, truncation);
    rep.first_mismatch = first_difference(lhs, rhs);
    rep.difference_zero = !rep.first_mismatch;
    rep.holds = rep.difference_zero && lhs.truncation() >= truncation && rhs.truncation() >= truncation;
    return rep;
}

void to_json(nlohmann::json& j, const IdentityReport& r) {
    j = {{"identity", r.identity},
         {"truncation", r.truncation},
         {"holds", r.holds},
         {"difference_zero", r.difference_zero}};
    if (r.identity == "theorem2") {
        j["k"] = r.k;
        j["residual_zero"] = r.residual_zero;
        j["c1"] = r.c1;
        j["c2"] = r.c2;
        j["c3"] = r.c3;
    }
    j["first_mismatch"] = r.first_mismatch ? nlohmann::json(*r.first_mismatch) : nlohmann::json(nullptr);
}

} // namespace betaq
