#include "betaq/suite.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "betaq/analytics.hpp"
#include "betaq/basis.hpp"
#include "betaq/cmeval.hpp"
#include "betaq/eisenstein.hpp"
#include "betaq/errors.hpp"
#include "betaq/etaq.hpp"
#include "betaq/lambert.hpp"

namespace betaq {

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string sci(const BigReal& x) { return x.to_decimal(3); }

std::string fixed(double v, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

class Runner {
public:
    Runner(const std::function<void(const CheckResult&)>& cb) : cb_(cb) {}

    template <class Fn>
    void check(std::string id, std::string title, double time_limit, Fn&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r;
        r.id = std::move(id);
        r.title = std::move(title);
        try {
            Outcome o = fn();
            r.pass = o.pass;
            r.detail = std::move(o.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("error: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (time_limit > 0 && r.seconds > time_limit) {
            r.pass = false;
            r.detail += "; over the " + fixed(time_limit, 3) + " s limit";
        }
        if (cb_) cb_(r);
        results_.push_back(std::move(r));
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    const std::function<void(const CheckResult&)>& cb_;
    std::vector<CheckResult> results_;
};

Outcome classical(ClassicalIdentity which, long through) {
    IdentityReport r = classical_report(which, through + 1);
    std::string d = r.holds ? "exact through q^" + std::to_string(through)
                            : "first mismatch at q^" + std::to_string(r.first_mismatch.value_or(-1));
    return {r.holds, d};
}

QSeries random_series(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> off(0, 3), len(1, 12), extra(0, 2), num(-9, 9), den(1, 5);
    long o = off(rng);
    long n = len(rng);
    std::vector<Rational> c;
    for (long i = 0; i < n; ++i) {
        Rational x(num(rng), den(rng));
        x.canonicalize();
        c.push_back(x);
    }
    return QSeries(o, std::move(c), o + n + extra(rng));
}

bool same(const QSeries& a, const QSeries& b) { return a.truncation() == b.truncation() && agrees(a, b); }

Outcome ring_axioms(unsigned long long seed, int cases) {
    std::mt19937_64 rng(seed);
    int bad = 0;
    for (int i = 0; i < cases; ++i) {
        QSeries a = random_series(rng), b = random_series(rng), c = random_series(rng);
        bool ok = same(a + b, b + a) && same(a * b, b * a) && same((a + b) + c, a + (b + c)) &&
                  same((a * b) * c, a * (b * c)) && agrees(a * (b + c), a * b + a * c) &&
                  (a - a).is_zero();
        if (!a.is_zero()) {
            QSeries one = a * series_inv(a);
            ok = ok && same(one, QSeries::one(a.truncation() - a.offset()));
        }
        if (!ok) ++bad;
    }
    return {bad == 0, std::to_string(cases - bad) + "/" + std::to_string(cases) + " random cases"};
}

Outcome eulerian_identity(int r_max, long n_max) {
    for (int r = 0; r <= r_max; ++r) {
        for (long n = 1; n <= n_max; ++n) {
            std::vector<Rational> lhs(static_cast<std::size_t>(n + 1));
            for (long l = 1; l <= n; ++l) lhs[l] = Rational(pow_int(l, static_cast<unsigned long>(r)));
            QSeries left(0, std::move(lhs), n + 1);
            IntPolynomial a = eulerian_poly(r).shifted(1);
            std::vector<Rational> ac(a.coeffs().begin(), a.coeffs().end());
            QSeries num(0, std::move(ac), n + 1);
            QSeries den = series_pow(QSeries(0, {Rational(1), Rational(-1)}, n + 1), r + 1);
            QSeries right = num * series_inv(den);
            if (!agrees(left, right))
                return {false, "mismatch at r=" + std::to_string(r) + ", N=" + std::to_string(n)};
        }
    }
    return {true, "r <= " + std::to_string(r_max) + ", N <= " + std::to_string(n_max)};
}

Outcome pentagonal_structure(long trunc) {
    for (long delta = 1; delta <= 8; ++delta) {
        QSeries e = euler_product(delta, trunc);
        std::vector<int> expected(static_cast<std::size_t>(trunc));
        for (long j = -100; j <= 100; ++j) {
            long g = j * (3 * j - 1) / 2;
            if (delta * g < trunc) expected[delta * g] = (j % 2 == 0) ? 1 : -1;
        }
        for (long x = 0; x < trunc; ++x)
            if (e.coeff(x) != expected[x])
                return {false, "delta=" + std::to_string(delta) + " at q^" + std::to_string(x)};
    }
    return {true, "delta <= 8 to q^" + std::to_string(trunc - 1)};
}

Outcome basis_triangularity(int k_max) {
    for (int k = 1; k <= k_max; ++k) {
        BasisSet b = build_basis(k, 2L * k + 12);
        if (b.elements.size() != static_cast<std::size_t>(2 * k + 2)) return {false, "wrong size at k=" + std::to_string(k)};
        for (int l = 0; l <= 2 * k + 1; ++l) {
            const QSeries& s = b.elements[l].series;
            if (s.offset() != l || s.leading() != 1)
                return {false, "element " + std::to_string(l) + " at k=" + std::to_string(k)};
        }
    }
    return {true, "leading exponents 0..2k+1, k <= " + std::to_string(k_max)};
}

} // namespace

std::vector<CheckResult> run_suite(const SuiteOptions& opts, const std::function<void(const CheckResult&)>& on_result) {
    const int kmax = std::max(1, opts.k_max);
    const long prec = opts.prec;
    Runner run(on_result);

    run.check("1", "Ramanujan identity to q^500", 10, [] { return classical(ClassicalIdentity::ramanujan, 500); });
    run.check("2", "Hou-Sun identity to q^500", 10, [] { return classical(ClassicalIdentity::hou_sun, 500); });
    run.check("3", "k = 3 identity to q^300", 30, [] { return classical(ClassicalIdentity::k3, 300); });

    run.check("4", "f_1 = H_1 = Lambert side to q^400", 0, [] {
        const long t = 401;
        QSeries f = eta_expand(quotients::f_k(1), t);
        QSeries h = h_k_series(1, t);
        QSeries l = lambert_expand(1, t);
        bool ok = same(f, h) && same(f, l);
        return Outcome{ok, ok ? "identical through q^400" : "differs"};
    });

    run.check("5", "cusp part decomposes and meets c1-c3, k = 2.." + std::to_string(std::min(kmax, 6)), 120, [&] {
        std::ostringstream os;
        bool ok = true;
        for (int k = 2; k <= std::min(kmax, 6); ++k) {
            BasisSet basis = build_basis(k, 300);
            Decomposition d = decompose_recording(t_cusp_series(k, 300), basis);
            ConditionReport c = cusp_conditions(d);
            bool good = d.residual_zero && c.all();
            ok = ok && good;
            os << "k=" << k << (good ? " ok " : " FAIL ");
        }
        return Outcome{ok, os.str()};
    });

    run.check("6", "general chi_2 Eisenstein series vs 2^{2k+1}E(2t) - E(t), trunc 200", 0, [&] {
        bool ok = true;
        for (int k = 1; k <= std::min(kmax, 6); ++k) ok = ok && eis2_crosscheck(k, 200);
        return Outcome{ok, "k <= " + std::to_string(std::min(kmax, 6))};
    });

    auto lattice_check = [&](LatticeWeight w) {
        std::ostringstream os;
        bool ok = true;
        BigReal tol = tolerance_bits(240, prec);
        for (int l = 1; l <= 3; ++l) {
            BigReal v = w == LatticeWeight::literal ? lattice_sum_L(l, prec) : lemma_lattice_sum(l, prec);
            BigReal e = rel_error(v, lattice_sum_closed_form(l, prec));
            ok = ok && e < tol;
            os << "l=" << l << " rel " << sci(e) << " ";
        }
        return Outcome{ok, os.str()};
    };
    run.check("7", "L_l (weight 2^l) vs closed forms, rel < 2^-240", 5, [&] { return lattice_check(LatticeWeight::literal); });
    run.check("7b", "lattice sum with weight 4^(l-1) vs closed forms, rel < 2^-240", 5,
              [&] { return lattice_check(LatticeWeight::lemma); });

    auto eta_check = [&](LatticeWeight w) {
        std::ostringstream os;
        bool ok = true;
        BigReal tol = tolerance_bits(240, prec);
        for (int k = 0; k <= 4; ++k) {
            BigReal lem = eta_pow2_lemma(k, prec, w);
            BigReal e = rel_error(lem, eta_direct(k, prec));
            bool good = e < tol;
            if (k >= 1 && k <= 3) good = good && rel_error(lem, eta_closed_form(k, prec)) < tol;
            ok = ok && good;
            os << "k=" << k << " rel " << sci(e) << " ";
        }
        return Outcome{ok, os.str()};
    };
    run.check("8", "eta(2^k i) formula with 2^l weights vs direct and closed forms", 0,
              [&] { return eta_check(LatticeWeight::literal); });
    run.check("8b", "eta(2^k i) formula with 4^(l-1) weights vs direct and closed forms", 0,
              [&] { return eta_check(LatticeWeight::lemma); });

    auto cm_check = [&](bool verbatim) {
        std::ostringstream os;
        bool ok = true;
        for (int k = 1; k <= std::min(kmax, 3); ++k) {
            for (int r = 1; r <= 2; ++r) {
                BigReal direct = hk_cm_direct(k, r, prec);
                BigReal closed = verbatim
                                     ? hk_cm_closed(make_cm_context(k, r, prec, LatticeWeight::literal), MTermForm::verbatim)
                                     : hk_cm_closed(make_cm_context(k, r, prec), MTermForm::corrected);
                BigReal e = rel_error(closed, direct);
                ok = ok && e < BigReal::parse("1e-15", prec);
                os << "(" << k << "," << r << ") " << sci(e) << " ";
            }
        }
        return Outcome{ok, os.str()};
    };
    run.check("9", "H_k(2^r i) closed form as displayed vs Fourier sum, rel < 1e-15", 30, [&] { return cm_check(true); });
    run.check("9b", "H_k(2^r i) closed form, 4^(l-1) weights and M first term -l 2^{r+1} pi", 30,
              [&] { return cm_check(false); });

    run.check("10", "(1-q)^{2k+1} f_k -> pi^{2k+1}/2^{4k+3}, order-3 extrapolation, j = 4..12", 0, [&] {
        std::ostringstream os;
        bool ok = true;
        auto grid = default_limit_grid(128, 4, 12);
        for (int k = 1; k <= std::min(kmax, 3); ++k) {
            LimitReport r = limit_check(k, grid, 3);
            double tol = k == 1 ? 1e-3 : 1e-2;
            bool good = r.rel_deviation < BigReal(tol, 128) && r.lambert_limit_matches;
            ok = ok && good;
            os << "k=" << k << " rel " << sci(r.rel_deviation) << (r.lambert_limit_matches ? " exact-ok " : " exact-FAIL ");
        }
        return Outcome{ok, os.str()};
    });

    auto asym_check = [&](bool split) {
        std::ostringstream os;
        bool ok = true;
        for (int k = 1; k <= std::min(kmax, 3); ++k) {
            auto counts = t_count_table(k, 100);
            QSeries f = eta_expand(quotients::f_k(k), 2 * 100 + k + 2);
            for (long n = 0; n <= 100; ++n)
                if (Rational(counts[n]) != f.coeff(2 * n + k + 1)) {
                    ok = false;
                    os << "t_" << k << "(" << n << ") mismatch ";
                    break;
                }
        }
        os << "counts k<=" << std::min(kmax, 3) << " n<=100; ";
        for (int k = 2; k <= std::min(kmax, 3); ++k) {
            auto rows = asymptotic_report(k, 500);
            double ratio = split ? rows[500].ratio_split : rows[500].ratio;
            ok = ok && std::abs(ratio - 1) < 0.05;
            os << "k=" << k << " ratio " << fixed(ratio, 6) << " ";
        }
        return Outcome{ok, os.str()};
    };
    run.check("11", "t_k(n) = [q^{2n+k+1}] f_k; ratio with -1/E_{2k} main term for odd k", 0,
              [&] { return asym_check(true); });
    run.check("11b", "t_k(n) = [q^{2n+k+1}] f_k; ratio with the 2^{-2k} main term for odd k", 0,
              [&] { return asym_check(false); });

    run.check("12", "property suites", 0, [&] {
        Outcome parts[] = {ring_axioms(opts.seed, 200), eulerian_identity(10, 60), pentagonal_structure(400),
                           basis_triangularity(std::min(kmax, 6))};
        const char* names[] = {"ring axioms", "Eulerian identity", "pentagonal", "triangularity"};
        bool ok = true;
        std::ostringstream os;
        for (int i = 0; i < 4; ++i) {
            ok = ok && parts[i].pass;
            os << names[i] << (parts[i].pass ? " ok" : " FAIL") << " (" << parts[i].detail << ")" << (i < 3 ? "; " : "");
        }
        return Outcome{ok, os.str()};
    });

    return run.take();
}

std::string format_result(const CheckResult& r) {
    char head[96];
    std::snprintf(head, sizeof head, "%s  %-4s", r.pass ? "PASS" : "FAIL", r.id.c_str());
    return std::string(head) + r.title + "  [" + r.detail + "]  (" + fixed(r.seconds, 3) + " s)";
}

} // namespace betaq
