#include "betaq/basis.hpp"

#include <nlohmann/json.hpp>

#include "betaq/eisenstein.hpp"
#include "betaq/errors.hpp"

namespace betaq {

namespace {

std::string power_label(const std::string& name, long e) {
    if (e == 0) return "";
    return e == 1 ? name : name + "^" + std::to_string(e);
}

std::string join_labels(std::initializer_list<std::string> parts) {
    std::string out;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        if (!out.empty()) out += "*";
        out += p;
    }
    return out.empty() ? "1" : out;
}

} // namespace

BasisSet build_basis(int k, long truncation) {
    if (k < 1) throw Error("build_basis needs k >= 1");
    if (truncation <= 2L * k + 1) throw Error("build_basis needs truncation > 2k+1");
    const EtaQuotient f = quotients::big_f();
    const EtaQuotient f2 = quotients::big_f2();
    const EtaQuotient th = quotients::theta2();

    BasisSet b;
    b.k = k;
    b.truncation = truncation;
    for (long l = 0; l <= k - 1; ++l) {
        long te = 4 * (k - l) + 2;
        EtaQuotient q = (f.pow(l) * th.pow(te)).with_level(8);
        b.elements.push_back(
            {q, join_labels({power_label("F", l), power_label("theta2", te)}), eta_expand(q, truncation)});
    }
    for (long l = k; l <= 2L * k; ++l) {
        EtaQuotient q = (f.pow(2 * k - l) * f2.pow(l - k) * th.pow(2)).with_level(8);
        b.elements.push_back({q,
                              join_labels({power_label("F", 2 * k - l), power_label("F2", l - k), "theta2^2"}),
                              eta_expand(q, truncation)});
    }
    // F F2^k / theta2^2, through the series inverse of theta2^2.
    EtaQuotient last = (f * f2.pow(k) * th.pow(-2)).with_level(8);
    QSeries theta_sq = eta_expand(th.pow(2), truncation);
    QSeries s = eta_expand(f, truncation) * eta_expand(f2.pow(k), truncation) * series_inv(theta_sq);
    b.elements.push_back({last, join_labels({"F", power_label("F2", k), "theta2^-2"}), s.truncated(truncation)});
    return b;
}

Rational Decomposition::coefficient(int l) const {
    if (l < 0 || l > 2 * k + 1) throw Error("basis index out of range");
    if (l < k) return alpha[l];
    if (l <= 2 * k) return beta[l - k];
    return gamma;
}

Decomposition Decomposition::zero(int k) {
    Decomposition d;
    d.k = k;
    d.alpha.assign(static_cast<std::size_t>(k), Rational(0));
    d.beta.assign(static_cast<std::size_t>(k + 1), Rational(0));
    d.gamma = 0;
    return d;
}

Decomposition decompose_recording(const QSeries& g, const BasisSet& basis) {
    const int k = basis.k;
    if (g.offset() < 0 && !g.is_zero()) throw Error("decompose needs a series without negative exponents");
    if (g.truncation() <= 2L * k + 1) throw Error("decompose needs truncation > 2k+1");
    Decomposition d = Decomposition::zero(k);
    const long trunc = std::min(g.truncation(), basis.truncation);
    QSeries residual = g.truncated(trunc);
    for (int l = 0; l <= 2 * k + 1; ++l) {
        Rational c = residual.coeff(l);
        if (sgn(c) == 0) continue;
        if (l < k)
            d.alpha[l] = c;
        else if (l <= 2 * k)
            d.beta[l - k] = c;
        else
            d.gamma = c;
        residual = residual - c * basis.elements[l].series.truncated(trunc);
    }
    if (!residual.is_zero()) {
        d.residual_zero = false;
        d.first_residual = residual.offset();
    }
    return d;
}

Decomposition decompose(const QSeries& g, const BasisSet& basis) {
    Decomposition d = decompose_recording(g, basis);
    if (!d.residual_zero) throw NotInSpace(*d.first_residual);
    return d;
}

QSeries reconstruct(const Decomposition& d, const BasisSet& basis) {
    QSeries out = QSeries::zero(basis.truncation);
    for (int l = 0; l <= 2 * d.k + 1; ++l) {
        Rational c = d.coefficient(l);
        if (sgn(c) != 0) out = out + c * basis.elements[l].series;
    }
    return out;
}

ConditionReport cusp_conditions(const Decomposition& d) {
    const int k = d.k;
    ConditionReport r;
    r.c1 = sgn(d.alpha.empty() ? Rational(0) : d.alpha[0]) == 0 && sgn(d.gamma) == 0;
    Rational s2 = 0, s3 = 0;
    for (int l = 0; l <= 2 * k; ++l) {
        Rational term = d.coefficient(l) * pow2(-2L * l);
        s2 += term;
        s3 += (l % 2 == 0) ? term : Rational(-term);
    }
    s2 += d.gamma * pow2(-(4L * k + 3));
    s3 -= d.gamma * pow2(-(4L * k + 2));
    r.lhs2 = s2;
    r.lhs3 = s3;
    r.c2 = sgn(s2) == 0;
    r.c3 = sgn(s3) == 0;
    return r;
}

QSeries t_cusp_series(int k, long truncation) {
    return eta_expand(quotients::f_k(k), truncation) - h_k_series(k, truncation);
}

void to_json(nlohmann::json& j, const Decomposition& d) {
    auto strs = [](const std::vector<Rational>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& x : v) a.push_back(x.get_str());
        return a;
    };
    j = {{"k", d.k},
         {"alpha", strs(d.alpha)},
         {"beta", strs(d.beta)},
         {"gamma", d.gamma.get_str()},
         {"residual_zero", d.residual_zero}};
    if (d.first_residual) j["first_residual"] = *d.first_residual;
}

void to_json(nlohmann::json& j, const ConditionReport& c) {
    j = {{"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}, {"lhs2", c.lhs2.get_str()}, {"lhs3", c.lhs3.get_str()}};
}

} // namespace betaq
