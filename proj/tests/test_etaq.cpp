#include <doctest.h>

#include <nlohmann/json.hpp>

#include "betaq/errors.hpp"
#include "betaq/etaq.hpp"

using namespace betaq;

namespace {

QSeries theta_sum(long scale, long trunc) {
    std::vector<Rational> c(trunc, 0);
    c[0] = 1;
    for (long n = 1; scale * n * n < trunc; ++n) c[scale * n * n] += 2;
    return QSeries(0, c, trunc);
}

} // namespace

TEST_CASE("parse and print") {
    EtaQuotient e = EtaQuotient::parse("4^6*8^4/2^4 @8");
    CHECK(e.level() == 8);
    CHECK(e.exponent(4) == 6);
    CHECK(e.exponent(2) == -4);
    CHECK(e.exponent(1) == 0);
    CHECK(e.sum_delta_r() == 48);
    CHECK(EtaQuotient::parse(e.to_string()) == e);
    CHECK(EtaQuotient::parse("2^2/1^1").level() == 2);
    CHECK_THROWS(EtaQuotient::parse("3^2 @8"));
    nlohmann::json j = e;
    CHECK(j["level"] == 8);
    CHECK(j.get<EtaQuotient>() == e);
}

TEST_CASE("theta functions") {
    CHECK(agrees(eta_expand(quotients::theta(), 300), theta_sum(1, 300)));
    CHECK(agrees(eta_expand(quotients::theta2(), 300), theta_sum(2, 300)));
}

TEST_CASE("triangular-number generating function") {
    // eta(16t)^2 / eta(8t) = q sum_n q^{8 T_n}
    std::vector<Rational> c(400, 0);
    for (long n = 0; 1 + 4 * n * (n + 1) < 400; ++n) c[1 + 4 * n * (n + 1)] = 1;
    CHECK(agrees(eta_expand(EtaQuotient::parse("16^2/8"), 400), QSeries(0, c, 400)));
    std::vector<Rational> d(200, 0);
    for (long n = 0; n * (n + 1) / 2 < 200; ++n) d[n * (n + 1) / 2] = 1;
    CHECK(agrees(eta_product(EtaQuotient::parse("2^2/1^1"), 200), QSeries(0, d, 200)));
}

TEST_CASE("fractional prefactor is rejected") {
    CHECK_THROWS_AS(eta_expand(EtaQuotient::parse("2^2/1^1"), 10), FractionalPrefactor);
}

TEST_CASE("f_1 expansion") {
    QSeries f1 = eta_expand(quotients::f_k(1), 10);
    CHECK(f1.offset() == 2);
    CHECK(f1.leading() == 1);
}

TEST_CASE("modularity conditions") {
    for (int k = 1; k <= 6; ++k) {
        auto r = ghn_check(quotients::f_k(k));
        CHECK(r.weight == 2 * k + 1);
        CHECK(r.cond24_a);
        CHECK(r.cond24_b);
        CHECK(r.is_holomorphic);
        REQUIRE(r.character_discriminant);
        CHECK(*r.character_discriminant == -4);
    }
    auto f = ghn_check(quotients::big_f());
    CHECK(f.weight == 2);
    CHECK(f.cusp_orders.at(4) == 1);
    auto delta = ghn_check(EtaQuotient::parse("1^24"));
    CHECK(delta.weight == 12);
    CHECK(delta.is_cusp);
    CHECK(delta.cusp_orders.at(1) == 1);
    auto t = ghn_check(quotients::theta());
    CHECK(t.weight == Rational(1, 2));
    CHECK(!t.character_discriminant);
}

TEST_CASE("Delta has Ramanujan's tau coefficients") {
    QSeries d = eta_expand(EtaQuotient::parse("1^24"), 8);
    const long tau[] = {1, -24, 252, -1472, 4830, -6048, -16744};
    for (long n = 1; n <= 7; ++n) CHECK(d.coeff(n) == tau[n - 1]);
}
