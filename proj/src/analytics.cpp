#include "betaq/analytics.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "betaq/eisenstein.hpp"
#include "betaq/errors.hpp"
#include "betaq/etaq.hpp"

namespace betaq {

namespace {

BigInt binomial(long n, long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt factorial(long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

// sum_{n >= 1, n = 0 mod m} log(1 - x^n) for each m in `mods`, in one pass.
// Terms stop once x^n drops below 2^-(prec+24) * (1 - x).
std::vector<BigReal> pochhammer_log_sums(const BigReal& x, std::initializer_list<long> mods) {
    const long prec = x.precision();
    std::vector<BigReal> sums(mods.size(), BigReal(0L, prec));
    BigReal cutoff = (BigReal(1L, prec) - x) * tolerance_bits(prec + 24, prec);
    BigReal power = x;
    BigReal term(prec);
    for (long n = 1; power > cutoff; ++n) {
        mpfr_neg(term.get(), power.get(), MPFR_RNDN);
        mpfr_log1p(term.get(), term.get(), MPFR_RNDN);
        std::size_t i = 0;
        for (long m : mods) {
            if (n % m == 0) sums[i] += term;
            ++i;
        }
        power *= x;
    }
    return sums;
}

// Value at h = 0 of the polynomial through (h[i], y[i]).
BigReal neville_at_zero(std::vector<BigReal> h, std::vector<BigReal> y) {
    const std::size_t n = y.size();
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            // p_i = (h_i p_{i-1} - h_{i-level} p_i) / (h_i - h_{i-level})
            BigReal num = h[i] * y[i - 1] - h[i - level] * y[i];
            y[i] = num / (h[i] - h[i - level]);
        }
    }
    return y[n - 1];
}

} // namespace

BigInt euler_number(int m) {
    if (m < 0) throw Error("Euler numbers need m >= 0");
    if (m % 2 != 0) throw OddIndex(m);
    // cosh(z) * sum E_n z^n / n! = 1 gives sum_j C(n, 2j) E_{n-2j} = 0 for n > 0.
    std::vector<BigInt> e(static_cast<std::size_t>(m / 2 + 1));
    e[0] = 1;
    for (int n = 2; n <= m; n += 2) {
        BigInt acc = 0;
        for (int j = 1; 2 * j <= n; ++j) acc += binomial(n, 2 * j) * e[(n - 2 * j) / 2];
        e[n / 2] = -acc;
    }
    return e[m / 2];
}

Rational bernoulli_number(int m) {
    if (m < 0) throw Error("Bernoulli numbers need m >= 0");
    std::vector<Rational> b(static_cast<std::size_t>(m + 1));
    b[0] = 1;
    for (int n = 1; n <= m; ++n) {
        Rational acc = 0;
        for (int j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * b[j];
        b[n] = -acc / (n + 1);
    }
    return b[m];
}

BetaValue beta_odd(int k, long prec) {
    if (k < 0) throw Error("beta_odd needs k >= 0");
    Rational c(euler_number(2 * k), pow_int(4, static_cast<unsigned long>(k + 1)) * factorial(2 * k));
    c.canonicalize();
    if (k % 2 == 1) c = -c;
    BigReal v = BigReal(c, prec + 32) * pow(pi(prec + 32), 2 * k + 1);
    return {k, c, v.with_precision(prec)};
}

BigReal wallis_check(const BigReal& q) {
    const long prec = q.precision();
    if (q.sign() <= 0 || q >= BigReal(1L, prec)) throw Error("wallis_check needs 0 < q < 1");
    auto s = pochhammer_log_sums(q, {1, 2});
    BigReal log_val = 4 * s[1] - 2 * s[0];
    return (BigReal(1L, prec) - q) * exp(log_val);
}

BigReal f_k_numeric(int k, const BigReal& q) {
    const long prec = q.precision();
    if (q.sign() <= 0 || q >= BigReal(1L, prec)) throw Error("f_k_numeric needs 0 < q < 1");
    auto s = pochhammer_log_sums(q * q, {1, 2, 4});   // (q^2;q^2), (q^4;q^4), (q^8;q^8)
    BigReal log_val = (8L * k - 2) * s[1] + 4 * s[2] - (4L * k) * s[0];
    return pow(q, k + 1) * exp(log_val);
}

Rational eta_limit_rational(int k) { return pow2(-(4L * k + 3)); }

Rational lambert_limit_rational(int k) {
    BetaValue b = beta_odd(k, 64);
    Rational r = Rational(factorial(2 * k)) * b.rational_part / (Rational(pow_int(2, 2 * k + 1)) * Rational(euler_number(2 * k)));
    return k % 2 == 0 ? r : Rational(-r);
}

std::vector<BigReal> default_limit_grid(long prec, int j_first, int j_last) {
    std::vector<BigReal> grid;
    for (int j = j_first; j <= j_last; ++j) grid.push_back(BigReal(1L, prec) - exp2(Rational(-j), prec));
    return grid;
}

LimitReport limit_check(int k, std::span<const BigReal> q_grid, int order) {
    if (k < 1) throw Error("limit_check needs k >= 1");
    if (q_grid.empty()) throw Error("limit_check needs a nonempty grid");
    if (order < 0) throw Error("extrapolation order must be >= 0");
    LimitReport rep;
    rep.k = k;
    std::vector<BigReal> hs;
    for (std::size_t i = 0; i < q_grid.size(); ++i) {
        const BigReal& q = q_grid[i];
        const long prec = q.precision();
        if (q.sign() <= 0 || q >= BigReal(1L, prec)) throw Error("grid points must lie in (0, 1)");
        if (i > 0 && !(q > q_grid[i - 1])) throw Error("grid must increase toward 1");
        BigReal h = BigReal(1L, prec) - q;
        rep.q_grid.push_back(q);
        rep.scaled_values.push_back(pow(h, 2 * k + 1) * f_k_numeric(k, q));
        hs.push_back(h);
    }
    for (std::size_t i = 0; i < hs.size(); ++i) {
        std::size_t lo = i >= static_cast<std::size_t>(order) ? i - order : 0;
        std::vector<BigReal> hh(hs.begin() + lo, hs.begin() + i + 1);
        std::vector<BigReal> yy(rep.scaled_values.begin() + lo, rep.scaled_values.begin() + i + 1);
        rep.extrapolations.push_back(neville_at_zero(std::move(hh), std::move(yy)));
    }
    rep.extrapolated = rep.extrapolations.back();
    const long prec = rep.extrapolated.precision();
    rep.target = BigReal(eta_limit_rational(k), prec) * pow(pi(prec), 2 * k + 1);
    rep.rel_deviation = rel_error(rep.extrapolated, rep.target);
    rep.lambert_limit_matches = lambert_limit_rational(k) == eta_limit_rational(k);
    return rep;
}

std::vector<BigInt> t_count_table(int k, long n_max) {
    if (k < 1) throw Error("t_count needs k >= 1");
    if (n_max < 0) return {};
    const long trunc = n_max + 1;
    std::vector<Rational> psi(static_cast<std::size_t>(trunc));
    for (long j = 0; j * (j + 1) / 2 < trunc; ++j) psi[j * (j + 1) / 2] = 1;
    QSeries p(0, std::move(psi), trunc);
    QSeries gen = series_pow(p, 4L * k) * series_pow(series_rescale(p, 2).truncated(trunc), 2);
    std::vector<BigInt> out;
    for (long n = 0; n <= n_max; ++n) out.push_back(gen.coeff(n).get_num());
    return out;
}

BigInt t_count(int k, long n) {
    if (n < 0) throw Error("t_count needs n >= 0");
    return t_count_table(k, n).back();
}

Rational asymptotic_main_term(int k, long n, MainTermForm form) {
    if (k < 1) throw Error("asymptotic_main_term needs k >= 1");
    Rational e2k(euler_number(2 * k));
    Rational c = 1 / (Rational(pow2(2 * k)) * e2k);
    if (k % 2 == 1) c = form == MainTermForm::split ? Rational(-1 / e2k) : Rational(-c);
    return c * Rational(sigma_chi(2 * n + k + 1, k));
}

std::vector<AsymptoticRow> asymptotic_report(int k, long n_max) {
    if (k < 1) throw Error("asymptotic_report needs k >= 1");
    const long trunc = 2 * n_max + k + 2;
    QSeries f = eta_expand(quotients::f_k(k), trunc);
    QSeries h = h_k_series(k, trunc);
    std::vector<AsymptoticRow> rows;
    for (long n = 0; n <= n_max; ++n) {
        const long e = 2 * n + k + 1;
        AsymptoticRow row;
        row.n = n;
        row.t = f.coeff(e).get_num();
        row.main_term = asymptotic_main_term(k, n, MainTermForm::uniform);
        row.main_term_split = asymptotic_main_term(k, n, MainTermForm::split);
        row.ratio = Rational(Rational(row.t) / row.main_term).get_d();
        row.ratio_split = Rational(Rational(row.t) / row.main_term_split).get_d();
        row.cusp_remainder = Rational(row.t) - h.coeff(e);
        rows.push_back(std::move(row));
    }
    return rows;
}

long divisor_count(long n) {
    if (n < 1) throw Error("divisor_count needs n >= 1");
    long count = 0;
    for (long d = 1; d * d <= n; ++d)
        if (n % d == 0) count += (d * d == n) ? 1 : 2;
    return count;
}

GrowthReport coefficient_growth_check(int k, long n_max) {
    if (k < 1) throw Error("coefficient_growth_check needs k >= 1");
    GrowthReport rep;
    rep.k = k;
    rep.n_max = n_max;
    const long trunc = n_max + 1;
    QSeries t = eta_expand(quotients::f_k(k), trunc) - h_k_series(k, trunc);
    for (long n = 1; n <= n_max; ++n) {
        Rational a = t.coeff(n);
        if (sgn(a) == 0) continue;
        Rational scaled = abs(a) / (Rational(divisor_count(n)) * Rational(pow_int(n, static_cast<unsigned long>(k))));
        double v = scaled.get_d();
        if (v > rep.c_obs) {
            rep.c_obs = v;
            rep.argmax = n;
        }
        if (2 * n <= n_max) rep.c_obs_half = std::max(rep.c_obs_half, v);
    }
    return rep;
}

void to_json(nlohmann::json& j, const LimitReport& r) {
    auto decimals = [](const std::vector<BigReal>& xs) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& x : xs) arr.push_back(x.to_decimal(30));
        return arr;
    };
    j = {{"k", r.k},
         {"q_grid", decimals(r.q_grid)},
         {"scaled_values", decimals(r.scaled_values)},
         {"extrapolations", decimals(r.extrapolations)},
         {"extrapolated", r.extrapolated.to_decimal(30)},
         {"target", r.target.to_decimal(30)},
         {"rel_deviation", r.rel_deviation.to_decimal(6)},
         {"lambert_limit_matches", r.lambert_limit_matches}};
}

void to_json(nlohmann::json& j, const GrowthReport& r) {
    char buf[64];
    auto dec = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return std::string(buf);
    };
    j = {{"k", r.k},
         {"n_max", r.n_max},
         {"c_obs", dec(r.c_obs)},
         {"argmax", r.argmax},
         {"c_obs_half", dec(r.c_obs_half)}};
}

} // namespace betaq
