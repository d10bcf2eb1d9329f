#include <iostream>

#include <CLI11.hpp>

#include "betaq/cli.hpp"
#include "betaq/errors.hpp"

namespace {

struct Formats {
    bool json = false, csv = false, text = false;
};

void add_formats(CLI::App* sub, Formats& f, bool csv) {
    sub->add_flag("--json", f.json, "JSON output (default)");
    if (csv) sub->add_flag("--csv", f.csv, "CSV output");
    sub->add_flag("--text", f.text, "plain text output");
}

} // namespace

int main(int argc, char** argv) {
    using betaq::Command;
    betaq::RunConfig cfg;
    try {
        cfg.prec = betaq::default_precision();
    } catch (const betaq::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"q-series, eta quotients and Lambert series for Dirichlet beta values"};
    app.require_subcommand(1);
    Formats fmt;

    auto* expand = app.add_subcommand("expand", "expand an eta quotient");
    expand->add_option("--quotient", cfg.quotient, "e.g. \"4^6*8^4/2^4 @8\"")->required();
    expand->add_option("--trunc", cfg.trunc);
    add_formats(expand, fmt, false);

    auto* eis = app.add_subcommand("eisenstein", "Eisenstein series E_{2k+1}(chi_-4, psi)");
    eis->add_option("--k", cfg.k)->required();
    eis->add_option("--twist", cfg.twist, "1 or 2");
    eis->add_option("--scale", cfg.scale, "evaluate at scale*tau (default: modulus of psi)");
    eis->add_option("--trunc", cfg.trunc);
    add_formats(eis, fmt, false);

    std::string identity;
    auto* verify = app.add_subcommand("verify", "check a q-series identity");
    verify->add_option("--identity", identity, "ramanujan | hou-sun | k3 | theorem2")->required();
    verify->add_option("--k", cfg.k);
    verify->add_option("--trunc", cfg.trunc);
    add_formats(verify, fmt, false);

    auto* decompose = app.add_subcommand("decompose", "decompose in the weight 2k+1 basis");
    decompose->add_option("--k", cfg.k)->required();
    decompose->add_option("--target", cfg.target, "fk-minus-hk | hk-minus-fk | fk | hk");
    decompose->add_option("--trunc", cfg.trunc);
    add_formats(decompose, fmt, false);

    auto* cm = app.add_subcommand("cm", "evaluate H_k at tau = i/2^r");
    cm->add_option("--k", cfg.k)->required();
    cm->add_option("--r", cfg.r)->required();
    cm->add_option("--prec", cfg.prec, "bits (env BETAQ_PREC)");
    add_formats(cm, fmt, false);

    auto* limits = app.add_subcommand("limits", "q -> 1^- limits");
    limits->add_option("--k", cfg.k)->required();
    limits->add_option("--prec", cfg.prec, "bits (env BETAQ_PREC)");
    add_formats(limits, fmt, false);

    auto* count = app.add_subcommand("count", "representation count t_k(n)");
    count->add_option("--k", cfg.k)->required();
    count->add_option("--n", cfg.n)->required();
    add_formats(count, fmt, true);

    auto* asympt = app.add_subcommand("asympt", "t_k(n) against its main term");
    asympt->add_option("--k", cfg.k)->required();
    asympt->add_option("--nmax", cfg.nmax);
    add_formats(asympt, fmt, true);

    auto* suite = app.add_subcommand("suite", "run every end-to-end check");
    suite->add_option("--k-max", cfg.k_max);
    suite->add_option("--prec", cfg.prec, "bits (env BETAQ_PREC)");
    add_formats(suite, fmt, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (app.got_subcommand(expand)) cfg.command = Command::expand;
    else if (app.got_subcommand(eis)) cfg.command = Command::eisenstein;
    else if (app.got_subcommand(verify)) cfg.command = Command::verify;
    else if (app.got_subcommand(decompose)) cfg.command = Command::decompose;
    else if (app.got_subcommand(cm)) cfg.command = Command::cm;
    else if (app.got_subcommand(limits)) cfg.command = Command::limits;
    else if (app.got_subcommand(count)) cfg.command = Command::count;
    else if (app.got_subcommand(asympt)) cfg.command = Command::asympt;
    else cfg.command = Command::suite;

    if (int(fmt.json) + int(fmt.csv) + int(fmt.text) > 1) {
        std::cerr << "usage error: choose one of --json, --csv, --text\n";
        return 2;
    }
    if (fmt.csv) cfg.output = betaq::OutputFormat::csv;
    else if (fmt.text) cfg.output = betaq::OutputFormat::text;
    else if (!fmt.json && cfg.command == Command::suite) cfg.output = betaq::OutputFormat::text;
    if (!identity.empty()) cfg.identity = identity;

    return betaq::run(cfg, std::cout, std::cerr);
}
