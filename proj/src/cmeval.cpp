#include "betaq/cmeval.hpp"

#include <nlohmann/json.hpp>

#include "betaq/basis.hpp"
#include "betaq/eisenstein.hpp"
#include "betaq/errors.hpp"
#include "betaq/etaq.hpp"

namespace betaq {

namespace {

constexpr long kGuard = 32;

BigReal lit(long v, long prec) { return BigReal(v, prec); }

// sum_{l=1}^{n} 2^l L[l]
BigReal weighted_prefix(const std::vector<BigReal>& L, int n, long prec) {
    BigReal s(0L, prec);
    for (int l = 1; l <= n; ++l) s += BigReal(pow2(l), prec) * L[l];
    return s;
}

std::vector<BigReal> lemma_sums_upto(int n, long prec) {
    std::vector<BigReal> L(static_cast<std::size_t>(n + 1), BigReal(0L, prec));
    for (int l = 1; l <= n; ++l) L[l] = lemma_lattice_sum(l, prec);
    return L;
}

// exp(-pi (2^k - 1)^2 / (12 2^k))
BigReal lemma_gaussian(int k, const BigReal& p) {
    const long prec = p.precision();
    BigReal two_k(pow2(k), prec);
    BigReal t = two_k - lit(1, prec);
    return exp(-(p * t * t / (lit(12, prec) * two_k)));
}

} // namespace

BigReal alternating_lattice_sum(long c, long prec) {
    if (c < 1) throw Error("lattice weight must be >= 1");
    const long wp = prec + kGuard;
    const BigReal p = pi(wp);
    const BigReal s = sqrt(lit(c, wp));
    BigReal total = -(p * log2_const(wp)) / (lit(2, wp) * s) + p * p / lit(24 * c, wp);
    const BigReal eps = tolerance_bits(wp, wp);
    for (long m = 1;; ++m) {
        BigReal denom = s * lit(m, wp) * expm1(lit(2, wp) * p * s * lit(m, wp));
        BigReal term = p / denom;
        if (m % 2 == 1)
            total -= term;
        else
            total += term;
        if (term < eps * abs(total)) break;
    }
    return total.with_precision(prec);
}

BigReal lattice_sum_L(int ell, long prec) {
    if (ell < 1) throw Error("lattice_sum_L needs l >= 1");
    return alternating_lattice_sum(1L << ell, prec);
}

BigReal lemma_lattice_sum(int ell, long prec) {
    if (ell < 1) throw Error("lemma_lattice_sum needs l >= 1");
    return alternating_lattice_sum(1L << (2 * (ell - 1)), prec);
}

BigReal lattice_sum_closed_form(int ell, long prec) {
    const long wp = prec + kGuard;
    const BigReal p = pi(wp);
    const BigReal ln2 = log2_const(wp);
    const BigReal p2 = p * p;
    const BigReal ls = log(sqrt(lit(2, wp)) - lit(1, wp));
    BigReal out(wp);
    switch (ell) {
    case 1: out = -(p2 / lit(24, wp)) - p * ln2 / lit(8, wp); break;
    case 2: out = -(lit(7, wp) * p2 / lit(96, wp)) - p * ln2 / lit(32, wp) - p * ls / lit(8, wp); break;
    case 3: {
        BigReal l4 = log(lit(1, wp) - exp2(Rational(-1, 4), wp));
        out = -(lit(31, wp) * p2 / lit(384, wp)) - lit(5, wp) * p * ln2 / lit(128, wp) + p * ls / lit(32, wp) -
              p * l4 / lit(8, wp);
        break;
    }
    default: throw Error("closed form only known for l = 1, 2, 3");
    }
    return out.with_precision(prec);
}

BigReal cm_constant_a(long prec) {
    const long wp = prec + kGuard;
    BigReal a = pow(pi(wp), BigReal(0.25, wp)) / gamma(BigReal(0.75, wp));
    return a.with_precision(prec);
}

BigReal eta_pow2_lemma(int k, long prec, LatticeWeight w) {
    if (k < 0) throw Error("eta_pow2_lemma needs k >= 0");
    const long wp = prec + kGuard;
    const BigReal p = pi(wp);
    BigReal sum(0L, wp);
    for (int l = 1; l <= k; ++l) {
        BigReal L = w == LatticeWeight::lemma ? lemma_lattice_sum(l, wp) : lattice_sum_L(l, wp);
        sum += BigReal(pow2(l), wp) * L;
    }
    BigReal v = cm_constant_a(wp) * exp2(Rational(-(k + 1), 2), wp) * lemma_gaussian(k, p) *
                exp(-(sum / (lit(2, wp) * p)));
    return v.with_precision(prec);
}

BigReal eta_direct(int r, long prec) {
    if (r < 0) throw Error("eta_direct needs r >= 0");
    const long wp = prec + kGuard;
    const BigReal p = pi(wp);
    const BigReal t(pow2(r), wp);
    const BigReal q = exp(-(lit(2, wp) * p * t));
    const BigReal eps = tolerance_bits(wp, wp);
    BigReal prod(1L, wp);
    BigReal qn = q;
    while (qn > eps) {
        prod *= lit(1, wp) - qn;
        qn *= q;
    }
    BigReal v = exp(-(lit(2, wp) * p * t / lit(24, wp))) * prod;
    return v.with_precision(prec);
}

BigReal eta_closed_form(int r, long prec) {
    const long wp = prec + kGuard;
    const BigReal a = cm_constant_a(wp);
    const BigReal one = lit(1, wp);
    const BigReal s2m1 = sqrt(lit(2, wp)) - one;
    BigReal out(wp);
    switch (r) {
    case 0: out = a * exp2(Rational(-1, 2), wp); break;
    case 1: out = a * exp2(Rational(-7, 8), wp); break;
    case 2: out = a * pow(s2m1, BigReal(0.25, wp)) * exp2(Rational(-21, 16), wp); break;
    case 3:
        out = a * pow(s2m1, BigReal(0.125, wp)) * sqrt(one - exp2(Rational(-1, 4), wp)) *
              exp2(Rational(-53, 32), wp);
        break;
    default: throw Error("eta closed form only known for r = 0..3");
    }
    return out.with_precision(prec);
}

BigReal psi_direct(int r, long prec) {
    if (r < 0) throw Error("psi_direct needs r >= 0");
    const long wp = prec + kGuard;
    const BigReal q = exp(-(lit(2, wp) * pi(wp) * BigReal(pow2(r), wp)));
    const BigReal eps = tolerance_bits(wp, wp);
    BigReal sum(0L, wp);
    for (long n = 0;; ++n) {
        BigReal term = pow(q, n * (n + 1) / 2);
        sum += term;
        if (n > 0 && term < eps) break;
    }
    return sum.with_precision(prec);
}

BigReal psi_closed_form(int r, long prec) {
    const long wp = prec + kGuard;
    const BigReal a = cm_constant_a(wp);
    const BigReal p = pi(wp);
    BigReal out(wp);
    switch (r) {
    case 1: out = a * sqrt(lit(2, wp) - sqrt(lit(2, wp))) * exp(p / lit(2, wp)) / lit(4, wp); break;
    case 2: out = a * (lit(1, wp) - exp2(Rational(-1, 4), wp)) * exp(p) / lit(4, wp); break;
    default: throw Error("Psi closed form only known for r = 1, 2");
    }
    return out.with_precision(prec);
}

FThetaValues ftheta_values(int r, long prec) {
    if (r < 0) throw Error("ftheta_values needs r >= 0");
    const long wp = prec + kGuard;
    const BigReal p = pi(wp);
    const BigReal a = cm_constant_a(wp);
    const std::vector<BigReal> L = lemma_sums_upto(r + 3, wp);
    const BigReal e1 = eta_direct(r + 1, wp), e2 = eta_direct(r + 2, wp), e3 = eta_direct(r + 3, wp);
    const BigReal two_r(pow2(r), wp);
    const BigReal s1 = weighted_prefix(L, r + 1, wp);
    const BigReal s2 = weighted_prefix(L, r + 2, wp);

    FThetaValues v;
    v.f_direct = (pow(e2, 8) / pow(e1, 4)).with_precision(prec);
    v.f2_direct = (pow(e3, 8) / pow(e2, 4)).with_precision(prec);
    v.theta2_direct = (pow(e2, 5) / (pow(e1, 2) * pow(e3, 2))).with_precision(prec);

    BigReal xf = -(lit(2, wp) * p * (lit(3, wp) * two_r - lit(1, wp)) / lit(3, wp)) - lit(2, wp) * s1 / p -
                 BigReal(pow2(r + 4), wp) * L[r + 2] / p;
    v.f_closed = (pow(a, 4) * exp2(Rational(-(2 * r + 8)), wp) * exp(xf)).with_precision(prec);

    BigReal xf2 = -(lit(2, wp) * p * (lit(6, wp) * two_r - lit(1, wp)) / lit(3, wp)) - lit(2, wp) * s2 / p -
                  BigReal(pow2(r + 5), wp) * L[r + 3] / p;
    v.f2_closed = (pow(a, 4) * exp2(Rational(-(2 * r + 10)), wp) * exp(xf2)).with_precision(prec);

    BigReal xt = p / lit(6, wp) - s1 / (lit(2, wp) * p) - lit(3, wp) * BigReal(pow2(r + 1), wp) * L[r + 2] / p +
                 BigReal(pow2(r + 3), wp) * L[r + 3] / p;
    v.theta2_closed = (a * exp2(Rational(-(r + 3), 2), wp) * exp(xt)).with_precision(prec);
    return v;
}

Rec2Values rec2_at_2i(long prec) {
    const long wp = prec + kGuard;
    const BigReal e8 = eta_direct(3, wp);
    BigReal rhs = exp(-(lit(3, wp) * pi(wp) / lit(2, wp))) * eta_closed_form(1, wp) * psi_closed_form(1, wp) *
                  psi_closed_form(2, wp) / eta_closed_form(2, wp);
    return {(e8 * e8).with_precision(prec), rhs.with_precision(prec)};
}

CMContext make_cm_context(int k, int r, long prec, LatticeWeight w) {
    if (k < 1 || r < 1) throw Error("CM evaluation needs k >= 1 and r >= 1");
    CMContext ctx;
    ctx.k = k;
    ctx.r = r;
    ctx.prec = prec;
    const long trunc = 4L * k + 40;
    BasisSet basis = build_basis(k, trunc);
    QSeries g = h_k_series(k, trunc) - eta_expand(quotients::f_k(k), trunc);
    Decomposition d = decompose(g, basis);
    ctx.alpha = d.alpha;
    ctx.beta = d.beta;
    ctx.gamma = d.gamma;
    if (w == LatticeWeight::lemma) {
        ctx.L = lemma_sums_upto(r + 3, prec + kGuard);
    } else {
        ctx.L.assign(static_cast<std::size_t>(r + 4), BigReal(0L, prec + kGuard));
        for (int l = 1; l <= r + 3; ++l) ctx.L[l] = lattice_sum_L(l, prec + kGuard);
    }
    return ctx;
}

BigReal hk_cm_closed(const CMContext& ctx, MTermForm form) {
    const int k = ctx.k;
    const int r = ctx.r;
    if (sgn(ctx.gamma) != 0 || (!ctx.alpha.empty() && sgn(ctx.alpha[0]) != 0))
        throw Error("closed form needs alpha_k(0) = 0 = gamma_k");
    const long wp = ctx.prec + kGuard;
    const BigReal p = pi(wp);
    const std::vector<BigReal>& L = ctx.L;
    const BigReal A = weighted_prefix(L, r + 1, wp) / p;
    const BigReal B = L[r + 2] / p;
    const BigReal C = L[r + 3] / p;

    BigReal J = p * lit(2 * k + 1, wp) / lit(3, wp) - lit(2 * k + 1, wp) * A -
                BigReal(pow2(r + 2), wp) * lit(4 * k + 1, wp) * B - BigReal(pow2(r + 4), wp) * C;
    auto M = [&](int l) {
        BigReal first = lit(l, wp) * BigReal(pow2(r + 1), wp) * (form == MTermForm::corrected ? p : A);
        return -first - BigReal(pow2(r + 3), wp) * lit(k - l + 1, wp) * B +
               BigReal(pow2(r + 5), wp) * lit(k - l + 1, wp) * C;
    };

    BigReal sum = exp(-(BigReal(pow2(r + 1), wp) * lit(k + 1, wp) * p)) * exp2(Rational(-2 * (k + 1)), wp);
    for (int l = 1; l <= k - 1; ++l)
        if (sgn(ctx.alpha[l]) != 0) sum += BigReal(ctx.alpha[l] * pow2(-2 * l), wp) * exp(M(l));
    for (int l = k; l <= 2 * k; ++l)
        if (sgn(ctx.beta[l - k]) != 0) sum += BigReal(ctx.beta[l - k] * pow2(-2 * l), wp) * exp(M(l));

    BigReal v = pow(cm_constant_a(wp), 4 * k + 2) * exp2(Rational(-(2 * k + 1) * (r + 3)), wp) * sum * exp(J);
    return v.with_precision(ctx.prec);
}

BigReal hk_cm_direct(int k, int r, long prec) {
    if (k < 1 || r < 1) throw Error("CM evaluation needs k >= 1 and r >= 1");
    const long wp = prec + kGuard;
    const BigReal q = exp(-(BigReal(pow2(r + 1), wp) * pi(wp)));
    // |h_n| <= 4 n^{2k}; with 2^{2k} q <= 1/2 the tail past N is at most 8 (N+1)^{2k} q^{N+1}.
    if (BigReal(pow2(2 * k), wp) * q > BigReal(0.5, wp)) throw Error("tail bound needs 2^{2k} q <= 1/2");
    const BigReal eps = tolerance_bits(wp, wp);
    for (long n_max = 16;; n_max *= 2) {
        QSeries h = h_k_series(k, n_max + 1);
        BigReal sum(0L, wp);
        for (long n = 1; n <= n_max; ++n) {
            const Rational c = h.coeff(n);
            if (sgn(c) != 0) sum += BigReal(c, wp) * pow(q, n);
        }
        BigReal tail = lit(8, wp) * BigReal(pow_int(n_max + 1, static_cast<unsigned long>(2 * k)), wp) *
                       pow(q, n_max + 1);
        if (tail < eps * abs(sum)) return sum.with_precision(prec);
    }
}

CMReport cm_report(int k, int r, long prec) {
    CMReport rep;
    rep.k = k;
    rep.r = r;
    rep.prec = prec;
    rep.closed = hk_cm_closed(make_cm_context(k, r, prec), MTermForm::corrected);
    rep.closed_verbatim = hk_cm_closed(make_cm_context(k, r, prec, LatticeWeight::literal), MTermForm::verbatim);
    rep.direct = hk_cm_direct(k, r, prec);
    rep.rel_err = rel_error(rep.closed, rep.direct);
    rep.rel_err_verbatim = rel_error(rep.closed_verbatim, rep.direct);
    return rep;
}

void to_json(nlohmann::json& j, const CMReport& r) {
    const int digits = static_cast<int>(r.prec * 0.30103);
    j = {{"k", r.k},
         {"r", r.r},
         {"prec", r.prec},
         {"closed", r.closed.to_decimal(digits)},
         {"direct", r.direct.to_decimal(digits)},
         {"rel_err", r.rel_err.to_decimal(6)},
         {"closed_verbatim", r.closed_verbatim.to_decimal(digits)},
         {"rel_err_verbatim", r.rel_err_verbatim.to_decimal(6)}};
}

} // namespace betaq
