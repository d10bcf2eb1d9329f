#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "betaq/cli.hpp"
#include "betaq/errors.hpp"

using namespace betaq;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome invoke(const RunConfig& cfg) {
    std::ostringstream out, err;
    int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("verify exits 0 and reports") {
    RunConfig cfg;
    cfg.command = Command::verify;
    cfg.identity = "ramanujan";
    cfg.trunc = 200;
    auto o = invoke(cfg);
    CHECK(o.code == 0);
    auto j = nlohmann::json::parse(o.out);
    CHECK(j["holds"] == true);
}

TEST_CASE("expand f_1") {
    RunConfig cfg;
    cfg.command = Command::expand;
    cfg.quotient = "4^6*8^4/2^4 @8";
    cfg.trunc = 10;
    auto o = invoke(cfg);
    CHECK(o.code == 0);
    auto j = nlohmann::json::parse(o.out);
    CHECK(j["offset"] == 2);
    CHECK(j["display"].get<std::string>().rfind("q^2", 0) == 0);
}

TEST_CASE("usage errors exit 2") {
    RunConfig cfg;
    cfg.command = Command::verify;
    cfg.identity = "nonsense";
    CHECK(invoke(cfg).code == 2);
    cfg.identity = "ramanujan";
    cfg.trunc = 4;
    CHECK(invoke(cfg).code == 2);
    RunConfig cm;
    cm.command = Command::cm;
    cm.prec = 32;
    CHECK(invoke(cm).code == 2);
    RunConfig csv;
    csv.command = Command::verify;
    csv.identity = "k3";
    csv.output = OutputFormat::csv;
    CHECK(invoke(csv).code == 2);
    RunConfig k0;
    k0.command = Command::count;
    k0.k = 0;
    CHECK(invoke(k0).code == 2);
}

TEST_CASE("BETAQ_PREC") {
    setenv("BETAQ_PREC", "128", 1);
    CHECK(default_precision() == 128);
    setenv("BETAQ_PREC", "12", 1);
    CHECK_THROWS_AS(default_precision(), UsageError);
    unsetenv("BETAQ_PREC");
    CHECK(default_precision() == 256);
}

TEST_CASE("asympt CSV columns") {
    RunConfig cfg;
    cfg.command = Command::asympt;
    cfg.k = 2;
    cfg.nmax = 5;
    cfg.output = OutputFormat::csv;
    auto o = invoke(cfg);
    CHECK(o.code == 0);
    std::istringstream lines(o.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "n,t,main_term,ratio,main_term_split,ratio_split,cusp_remainder");
    int rows = 0;
    for (std::string line; std::getline(lines, line);) ++rows;
    CHECK(rows == 6);
}

TEST_CASE("count, decompose, cm, eisenstein") {
    RunConfig count;
    count.command = Command::count;
    count.k = 2;
    count.n = 7;
    CHECK(invoke(count).code == 0);

    RunConfig dec;
    dec.command = Command::decompose;
    dec.k = 2;
    dec.trunc = 60;
    auto o = invoke(dec);
    CHECK(o.code == 0);
    auto j = nlohmann::json::parse(o.out);
    CHECK(j["decomposition"]["gamma"] == "0");
    dec.target = "fk";
    CHECK(invoke(dec).code == 0);

    RunConfig cm;
    cm.command = Command::cm;
    cm.k = 1;
    cm.r = 1;
    auto c = nlohmann::json::parse(invoke(cm).out);
    CHECK(c.contains("closed"));
    CHECK(c.contains("direct"));
    CHECK(c["rel_err"].is_string());

    RunConfig eis;
    eis.command = Command::eisenstein;
    eis.k = 2;
    eis.twist = 2;
    eis.trunc = 100;
    auto e = invoke(eis);
    CHECK(e.code == 0);
    CHECK(nlohmann::json::parse(e.out)["crosscheck"] == true);
    eis.scale = 3;
    CHECK(invoke(eis).code == 2);
}
