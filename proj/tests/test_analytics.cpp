#include <doctest.h>

#include <cmath>
#include <functional>

#include "betaq/analytics.hpp"
#include "betaq/errors.hpp"
#include "betaq/etaq.hpp"

using namespace betaq;

namespace {

// Histogram of T_{n_1} + ... + T_{n_u} + 2(T_a + T_b) over all tuples with
// total at most n_max.
std::vector<long> brute_counts(int k, long n_max) {
    std::vector<long> tri;
    for (long i = 0; i * (i + 1) / 2 <= n_max; ++i) tri.push_back(i * (i + 1) / 2);
    const int slots = 4 * k + 2;
    std::vector<long> out(n_max + 1, 0);
    auto weight = [&](int s) { return s < 4 * k ? 1L : 2L; };
    // depth-first enumeration with pruning on the running total
    std::function<void(int, long)> rec = [&](int s, long total) {
        if (s == slots) {
            ++out[total];
            return;
        }
        for (long t : tri) {
            long next = total + weight(s) * t;
            if (next > n_max) break;
            rec(s + 1, next);
        }
    };
    rec(0, 0);
    return out;
}

double beta_series(int s) {
    // alternating sum, averaged over the last two partial sums
    long double sum = 0, prev = 0;
    for (long n = 0; n <= 200000; ++n) {
        prev = sum;
        long double term = 1.0L / std::pow(2.0L * n + 1, s);
        sum += (n % 2 ? -term : term);
    }
    return static_cast<double>((sum + prev) / 2);
}

} // namespace

TEST_CASE("Euler and Bernoulli numbers") {
    const long e[] = {1, -1, 5, -61, 1385, -50521, 2702765};
    for (int m = 0; m <= 6; ++m) CHECK(euler_number(2 * m) == e[m]);
    CHECK(euler_number(24) == BigInt("15514534163557086905"));
    CHECK_THROWS_AS(euler_number(3), OddIndex);
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(4) == Rational(-1, 30));
    CHECK(bernoulli_number(3) == 0);
}

TEST_CASE("beta at odd integers") {
    CHECK(beta_odd(0).rational_part == Rational(1, 4));
    CHECK(beta_odd(1).rational_part == Rational(1, 32));
    CHECK(beta_odd(2).rational_part == Rational(5, 1536));
    for (int k = 0; k <= 3; ++k)
        CHECK(beta_odd(k, 128).value.to_double() == doctest::Approx(beta_series(2 * k + 1)).epsilon(1e-9));
}

TEST_CASE("Wallis-type limit") {
    double half_pi = M_PI / 2;
    CHECK(std::abs(wallis_check(BigReal(0.9, 128)).to_double() / half_pi - 1) < 0.10);
    CHECK(std::abs(wallis_check(BigReal(0.99, 128)).to_double() / half_pi - 1) < 0.015);
    CHECK(wallis_check(BigReal(1e-6, 128)).to_double() == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("f_k at a real point matches its q-expansion") {
    BigReal q(0.3, 128);
    for (int k = 1; k <= 3; ++k) {
        QSeries f = eta_expand(quotients::f_k(k), 120);
        double s = 0;
        for (long e = f.offset(); e < 120; ++e) s += f.coeff(e).get_d() * std::pow(0.3, static_cast<double>(e));
        CHECK(f_k_numeric(k, q).to_double() == doctest::Approx(s).epsilon(1e-12));
    }
}

TEST_CASE("q -> 1 limits") {
    auto grid = default_limit_grid(128, 4, 10);
    auto r1 = limit_check(1, grid);
    CHECK(r1.rel_deviation.to_double() < 1e-3);
    CHECK(r1.lambert_limit_matches);
    auto r2 = limit_check(2, default_limit_grid(128));
    CHECK(r2.rel_deviation.to_double() < 1e-2);
    for (int k = 1; k <= 6; ++k) {
        CHECK(eta_limit_rational(k) == pow2(-(4 * k + 3)));
        CHECK(abs(lambert_limit_rational(k)) == eta_limit_rational(k));
    }
}

TEST_CASE("t_k(n) by brute force") {
    CHECK(t_count(1, 0) == 1);
    CHECK(t_count(1, 1) == 4);
    CHECK(t_count(1, 2) == 8);
    auto b1 = brute_counts(1, 30);
    auto t1 = t_count_table(1, 30);
    for (long n = 0; n <= 30; ++n) CHECK(t1[n] == b1[n]);
    auto b2 = brute_counts(2, 10);
    for (long n = 0; n <= 10; ++n) CHECK(t_count(2, n) == b2[n]);
}

TEST_CASE("t_k(n) is a coefficient of f_k") {
    for (int k = 1; k <= 3; ++k) {
        auto t = t_count_table(k, 100);
        QSeries f = eta_expand(quotients::f_k(k), 2 * 100 + k + 2);
        for (long n = 0; n <= 100; ++n) CHECK(f.coeff(2 * n + k + 1) == Rational(t[n]));
    }
}

TEST_CASE("main term") {
    auto rows = asymptotic_report(1, 100);
    for (const auto& r : rows) {
        CHECK(Rational(r.t) == r.main_term);
        CHECK(r.cusp_remainder == 0);
        CHECK(r.main_term_split == 4 * r.main_term);
    }
    auto r3 = asymptotic_report(3, 500).back();
    CHECK(std::abs(r3.ratio - 1) < 0.05);
    CHECK(r3.ratio_split == doctest::Approx(1.0 / 64).epsilon(0.05));
}

TEST_CASE("cusp coefficient growth") {
    CHECK(coefficient_growth_check(1, 200).c_obs == 0);
    auto g = coefficient_growth_check(2, 600);
    CHECK(g.c_obs > 0);
    CHECK(std::isfinite(g.c_obs));
    CHECK(g.c_obs < 10);
    CHECK(divisor_count(12) == 6);
}
