#include "betaq/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>

#include <nlohmann/json.hpp>

#include "betaq/analytics.hpp"
#include "betaq/basis.hpp"
#include "betaq/cmeval.hpp"
#include "betaq/eisenstein.hpp"
#include "betaq/errors.hpp"
#include "betaq/etaq.hpp"
#include "betaq/lambert.hpp"
#include "betaq/suite.hpp"

namespace betaq {

using nlohmann::json;

namespace {

int digits_for(long prec) { return static_cast<int>(std::floor(static_cast<double>(prec) * 0.30103)); }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

bool requires_k(Command c) {
    switch (c) {
    case Command::eisenstein:
    case Command::decompose:
    case Command::cm:
    case Command::limits:
    case Command::count:
    case Command::asympt: return true;
    default: return false;
    }
}

int cmd_expand(const RunConfig& cfg, std::ostream& out) {
    EtaQuotient q = EtaQuotient::parse(cfg.quotient);
    QSeries s = eta_expand(q, cfg.trunc);
    if (cfg.output == OutputFormat::text) {
        out << s.to_string(static_cast<int>(cfg.trunc)) << "\n";
        return 0;
    }
    json j = s;
    j["quotient"] = q;
    j["display"] = s.to_string(12);
    j["modularity"] = ghn_check(q);
    emit(out, j);
    return 0;
}

int cmd_eisenstein(const RunConfig& cfg, std::ostream& out) {
    CharacterTable psi = cfg.twist == 1 ? CharacterTable::trivial() : CharacterTable::chi2();
    EisensteinSpec spec{2 * cfg.k + 1, CharacterTable::chi_minus4(), psi};
    long scale = cfg.scale == 0 ? spec.big_r() : cfg.scale;
    QSeries s = eisenstein_series(spec, cfg.trunc, scale);
    bool ok = true;
    std::optional<bool> cross;
    if (cfg.twist == 2) {
        cross = eis2_crosscheck(cfg.k, cfg.trunc);
        ok = *cross;
    }
    if (cfg.output == OutputFormat::text) {
        out << s.to_string(12) << "\n";
        if (cross) out << "crosscheck " << (*cross ? "ok" : "FAILED") << "\n";
        return ok ? 0 : 1;
    }
    json j = {{"weight", spec.weight}, {"chi", spec.chi.name()}, {"psi", psi.name()}, {"scale", scale}};
    j["series"] = s;
    if (cross) j["crosscheck"] = *cross;
    emit(out, j);
    return ok ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    IdentityReport r;
    if (*cfg.identity == "theorem2") {
        r = verify_theorem2(cfg.k, cfg.trunc);
    } else {
        auto which = parse_classical(*cfg.identity);
        r = classical_report(*which, cfg.trunc);
    }
    if (cfg.output == OutputFormat::text) {
        out << r.identity << (r.holds ? " holds" : " FAILS") << " to O(q^" << r.truncation << ")";
        if (r.first_mismatch) out << ", first mismatch at q^" << *r.first_mismatch;
        out << "\n";
    } else {
        emit(out, json(r));
    }
    return r.holds ? 0 : 1;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
    const long t = cfg.trunc;
    QSeries g;
    bool cusp_target = false;
    if (cfg.target == "fk-minus-hk") {
        g = t_cusp_series(cfg.k, t);
        cusp_target = true;
    } else if (cfg.target == "hk-minus-fk") {
        g = -t_cusp_series(cfg.k, t);
        cusp_target = true;
    } else if (cfg.target == "fk") {
        g = eta_expand(quotients::f_k(cfg.k), t);
    } else {
        g = h_k_series(cfg.k, t);
    }
    BasisSet basis = build_basis(cfg.k, t);
    Decomposition d = decompose_recording(g, basis);
    ConditionReport c = cusp_conditions(d);
    bool ok = d.residual_zero && (!cusp_target || c.all());
    if (cfg.output == OutputFormat::text) {
        for (int l = 0; l <= 2 * cfg.k + 1; ++l)
            out << basis.elements[l].label << "  " << d.coefficient(l).get_str() << "\n";
        out << "residual " << (d.residual_zero ? "zero" : "NONZERO") << "; conditions " << c.c1 << c.c2 << c.c3 << "\n";
    } else {
        json j = {{"target", cfg.target}, {"truncation", t}};
        j["decomposition"] = d;
        j["conditions"] = c;
        json labels = json::array();
        for (const auto& e : basis.elements) labels.push_back(e.label);
        j["basis"] = labels;
        emit(out, j);
    }
    return ok ? 0 : 1;
}

int cmd_cm(const RunConfig& cfg, std::ostream& out) {
    CMReport r = cm_report(cfg.k, cfg.r, cfg.prec);
    bool ok = r.rel_err < BigReal::parse("1e-15", cfg.prec);
    if (cfg.output == OutputFormat::text) {
        out << "closed   " << r.closed.to_decimal(digits_for(cfg.prec)) << "\n"
            << "direct   " << r.direct.to_decimal(digits_for(cfg.prec)) << "\n"
            << "rel_err  " << r.rel_err.to_decimal(6) << "\n"
            << "verbatim rel_err " << r.rel_err_verbatim.to_decimal(6) << "\n";
    } else {
        emit(out, json(r));
    }
    return ok ? 0 : 1;
}

int cmd_limits(const RunConfig& cfg, std::ostream& out) {
    auto grid = default_limit_grid(cfg.prec, 4, 12);
    LimitReport r = limit_check(cfg.k, grid, 3);
    double tol = cfg.k == 1 ? 1e-3 : 1e-2;
    bool ok = r.rel_deviation < BigReal(tol, cfg.prec) && r.lambert_limit_matches;
    if (cfg.output == OutputFormat::text) {
        out << "extrapolated " << r.extrapolated.to_decimal(20) << "\n"
            << "target       " << r.target.to_decimal(20) << "\n"
            << "rel_dev      " << r.rel_deviation.to_decimal(4) << "\n";
    } else {
        json j = r;
        j["tolerance"] = cfg.k == 1 ? "1e-3" : "1e-2";
        j["beta_rational_part"] = beta_odd(cfg.k, 64).rational_part.get_str();
        j["eta_limit_rational"] = eta_limit_rational(cfg.k).get_str();
        j["lambert_limit_rational"] = lambert_limit_rational(cfg.k).get_str();
        emit(out, j);
    }
    return ok ? 0 : 1;
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
    BigInt t = t_count(cfg.k, cfg.n);
    const long e = 2 * cfg.n + cfg.k + 1;
    Rational coeff = eta_expand(quotients::f_k(cfg.k), e + 1).coeff(e);
    bool ok = Rational(t) == coeff;
    if (cfg.output == OutputFormat::text) {
        out << t.get_str() << "\n";
    } else if (cfg.output == OutputFormat::csv) {
        out << "k,n,t,fk_coefficient\n" << cfg.k << "," << cfg.n << "," << t.get_str() << "," << coeff.get_str() << "\n";
    } else {
        emit(out, {{"k", cfg.k},
                   {"n", cfg.n},
                   {"t", t.get_str()},
                   {"fk_exponent", e},
                   {"fk_coefficient", coeff.get_str()},
                   {"matches", ok}});
    }
    return ok ? 0 : 1;
}

int cmd_asympt(const RunConfig& cfg, std::ostream& out) {
    auto rows = asymptotic_report(cfg.k, cfg.nmax);
    char buf[64];
    auto dbl = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return std::string(buf);
    };
    if (cfg.output == OutputFormat::csv) {
        out << "n,t,main_term,ratio,main_term_split,ratio_split,cusp_remainder\n";
        for (const auto& r : rows)
            out << r.n << "," << r.t.get_str() << "," << r.main_term.get_str() << "," << dbl(r.ratio) << ","
                << r.main_term_split.get_str() << "," << dbl(r.ratio_split) << "," << r.cusp_remainder.get_str()
                << "\n";
    } else if (cfg.output == OutputFormat::text) {
        for (const auto& r : rows) out << r.n << "  " << dbl(r.ratio) << "\n";
    } else {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"n", r.n},
                           {"t", r.t.get_str()},
                           {"main_term", r.main_term.get_str()},
                           {"ratio", dbl(r.ratio)},
                           {"main_term_split", r.main_term_split.get_str()},
                           {"ratio_split", dbl(r.ratio_split)},
                           {"cusp_remainder", r.cusp_remainder.get_str()}});
        json j = {{"k", cfg.k}, {"nmax", cfg.nmax}, {"rows", arr}};
        if (cfg.k >= 2) j["growth"] = coefficient_growth_check(cfg.k, std::max(cfg.nmax, 1L) * 2 + cfg.k + 1);
        emit(out, j);
    }
    return 0;
}

int cmd_suite(const RunConfig& cfg, std::ostream& out) {
    SuiteOptions opts;
    opts.k_max = cfg.k_max;
    opts.prec = cfg.prec;
    bool text = cfg.output == OutputFormat::text;
    auto results = run_suite(opts, [&](const CheckResult& r) {
        if (text) out << format_result(r) << std::endl;
    });
    bool ok = true;
    json arr = json::array();
    for (const auto& r : results) {
        ok = ok && r.pass;
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
        arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", secs}});
    }
    if (!text) emit(out, {{"k_max", cfg.k_max}, {"prec", cfg.prec}, {"all_pass", ok}, {"checks", arr}});
    return ok ? 0 : 1;
}

} // namespace

long default_precision() {
    const char* env = std::getenv("BETAQ_PREC");
    if (env == nullptr || *env == '\0') return 256;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 64) throw UsageError("BETAQ_PREC must be an integer >= 64");
    return v;
}

void validate(const RunConfig& cfg) {
    if (cfg.trunc < 8) throw UsageError("--trunc must be >= 8");
    if (cfg.prec < 64) throw UsageError("--prec must be >= 64");
    if (requires_k(cfg.command) && cfg.k < 1) throw UsageError("--k must be >= 1");
    if (cfg.output == OutputFormat::csv && cfg.command != Command::asympt && cfg.command != Command::count)
        throw UsageError("--csv is only available for asympt and count");
    switch (cfg.command) {
    case Command::expand:
        if (cfg.quotient.empty()) throw UsageError("expand needs --quotient");
        break;
    case Command::eisenstein:
        if (cfg.twist != 1 && cfg.twist != 2) throw UsageError("--twist must be 1 or 2");
        if (cfg.scale < 0) throw UsageError("--scale must be positive");
        if (cfg.scale > 0 && cfg.scale % cfg.twist != 0) throw UsageError("--scale must be a multiple of the twist modulus");
        break;
    case Command::verify:
        if (!cfg.identity) throw UsageError("verify needs --identity");
        if (*cfg.identity != "theorem2" && !parse_classical(*cfg.identity))
            throw UsageError("unknown identity '" + *cfg.identity + "'");
        if (*cfg.identity == "theorem2" && cfg.k < 1) throw UsageError("--k must be >= 1");
        break;
    case Command::decompose:
        if (cfg.target != "fk-minus-hk" && cfg.target != "hk-minus-fk" && cfg.target != "fk" && cfg.target != "hk")
            throw UsageError("unknown --target '" + cfg.target + "'");
        if (cfg.trunc <= 2L * cfg.k + 1) throw UsageError("--trunc must exceed 2k+1");
        break;
    case Command::cm:
        if (cfg.r < 1) throw UsageError("--r must be >= 1");
        break;
    case Command::count:
        if (cfg.n < 0) throw UsageError("--n must be >= 0");
        break;
    case Command::asympt:
        if (cfg.nmax < 0) throw UsageError("--nmax must be >= 0");
        break;
    case Command::suite:
        if (cfg.k_max < 1) throw UsageError("--k-max must be >= 1");
        break;
    case Command::limits: break;
    }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        validate(cfg);
        switch (cfg.command) {
        case Command::expand: return cmd_expand(cfg, out);
        case Command::eisenstein: return cmd_eisenstein(cfg, out);
        case Command::verify: return cmd_verify(cfg, out);
        case Command::decompose: return cmd_decompose(cfg, out);
        case Command::cm: return cmd_cm(cfg, out);
        case Command::limits: return cmd_limits(cfg, out);
        case Command::count: return cmd_count(cfg, out);
        case Command::asympt: return cmd_asympt(cfg, out);
        case Command::suite: return cmd_suite(cfg, out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace betaq
