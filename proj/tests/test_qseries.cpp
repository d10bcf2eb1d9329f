#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "betaq/errors.hpp"
#include "betaq/qseries.hpp"

using namespace betaq;

namespace {

// p(n) by the coin-change recurrence over part sizes.
std::vector<BigInt> colored_partitions(int colors, long n_max) {
    std::vector<BigInt> p(n_max + 1, 0);
    p[0] = 1;
    for (int c = 0; c < colors; ++c)
        for (long part = 1; part <= n_max; ++part)
            for (long n = part; n <= n_max; ++n) p[n] += p[n - part];
    return p;
}

std::vector<Rational> schoolbook(const std::vector<Rational>& a, const std::vector<Rational>& b, size_t n) {
    std::vector<Rational> c(n, 0);
    for (size_t i = 0; i < a.size() && i < n; ++i)
        for (size_t j = 0; j < b.size() && i + j < n; ++j) c[i + j] += a[i] * b[j];
    return c;
}

QSeries random_series(std::mt19937_64& rng, long offset, long n, bool unit_lead) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::vector<Rational> c(n);
    for (auto& x : c) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
    }
    if (unit_lead && c[0] == 0) c[0] = 1;
    return QSeries(offset, c, offset + n);
}

} // namespace

TEST_CASE("canonical zero and construction") {
    QSeries z = QSeries::zero(10);
    CHECK(z.is_zero());
    CHECK(z.offset() == 10);
    QSeries s(0, {0, 0, 3, 1}, 6);
    CHECK(s.offset() == 2);
    CHECK(s.leading() == 3);
    CHECK(s.coeff(5) == 0);
    CHECK_THROWS_AS(s.coeff(6), UnknownCoefficient);
    CHECK(s.coeff(-4) == 0);
}

TEST_CASE("partition numbers from the inverse Euler product") {
    const long n = 120;
    auto p = colored_partitions(1, n - 1);
    QSeries inv = series_inv(euler_product(1, n));
    for (long e = 0; e < n; ++e) CHECK(inv.coeff(e) == Rational(p[e]));
    CHECK(p[100] == BigInt("190569292"));
}

TEST_CASE("four-colored partitions") {
    const long n = 80;
    auto p4 = colored_partitions(4, n - 1);
    QSeries s = series_pow(euler_product(1, n), -4);
    for (long e = 0; e < n; ++e) CHECK(s.coeff(e) == Rational(p4[e]));
}

TEST_CASE("Euler product at scale delta is the rescaled product") {
    CHECK(euler_product(3, 90) == series_rescale(euler_product(1, 30), 3));
}

TEST_CASE("multiplication matches schoolbook convolution") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        long na = 1 + trial % 17, nb = 1 + (trial * 7) % 23;
        QSeries a = random_series(rng, 0, na, true), b = random_series(rng, 0, nb, true);
        std::vector<Rational> av(a.coeffs().begin(), a.coeffs().end()), bv(b.coeffs().begin(), b.coeffs().end());
        QSeries c = a * b;
        CHECK(c.truncation() == std::min(na, nb));
        auto ref = schoolbook(av, bv, c.truncation());
        for (long e = 0; e < c.truncation(); ++e) CHECK(c.coeff(e) == ref[e]);
    }
}

TEST_CASE("truncation bookkeeping") {
    QSeries a(2, {1, 1}, 10), b(3, {1}, 7);
    QSeries c = a * b;
    CHECK(c.offset() == 5);
    CHECK(c.truncation() == std::min(10 + 3, 7 + 2));
    QSeries i = series_inv(a);
    CHECK(i.offset() == -2);
    CHECK(i.truncation() == 10 - 4);
    QSeries p0 = series_pow(a, 0);
    CHECK(p0.truncation() == 10 - 2);
    CHECK((a + b).truncation() == 7);
}

TEST_CASE("random inverses") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> len(1, 64), off(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        long o = off(rng);
        QSeries a = random_series(rng, o, len(rng), true);
        QSeries prod = a * series_inv(a);
        CHECK(prod.truncation() == a.truncation() - a.offset());
        CHECK(agrees(prod, QSeries::one(prod.truncation())));
    }
}

TEST_CASE("inverse of zero throws") {
    CHECK_THROWS_AS(series_inv(QSeries::zero(5)), ZeroLeadingCoefficient);
}

TEST_CASE("power agrees with repeated multiplication") {
    std::mt19937_64 rng(3);
    QSeries a = random_series(rng, 1, 20, true);
    QSeries r = QSeries::one(100);
    for (int e = 1; e <= 5; ++e) {
        r = r * a;
        CHECK(series_pow(a, e) == r);
    }
    CHECK(agrees(series_pow(a, -3) * series_pow(a, 3), QSeries::one(50)));
}

TEST_CASE("rescaling is a ring homomorphism") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        QSeries a = random_series(rng, trial % 3, 25, true), b = random_series(rng, 0, 30, true);
        for (long m : {2L, 3L, 8L}) {
            CHECK(series_rescale(a * b, m) == series_rescale(a, m) * series_rescale(b, m));
            CHECK(series_rescale(a + b, m) == series_rescale(a, m) + series_rescale(b, m));
        }
    }
}

TEST_CASE("first difference and agreement") {
    QSeries a(0, {1, 2, 3, 4}, 4), b(0, {1, 2, 5}, 3);
    CHECK(first_difference(a, b) == 2L);
    CHECK(!first_difference(a, a.truncated(2)));
}

TEST_CASE("json round trip") {
    QSeries s(-1, {Rational(1, 3), 0, -2}, 5);
    nlohmann::json j = s;
    CHECK(j["offset"] == -1);
    CHECK(j["coeffs"][0] == "1/3");
    CHECK(j.get<QSeries>() == s);
}
