#include <doctest.h>

#include <numeric>

#include "betaq/analytics.hpp"
#include "betaq/eisenstein.hpp"
#include "betaq/errors.hpp"
#include "betaq/etaq.hpp"
#include "betaq/lambert.hpp"

using namespace betaq;

namespace {

int chi4(long n) {
    long r = ((n % 4) + 4) % 4;
    return r == 1 ? 1 : r == 3 ? -1 : 0;
}

BigInt naive_sigma(long n, int k) {
    BigInt s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) s += chi4(n / d) * pow_int(d, 2 * k);
    return s;
}

} // namespace

TEST_CASE("chi_-4 table") {
    auto c = CharacterTable::chi_minus4();
    CHECK(c(5) == 1);
    CHECK(c(7) == -1);
    CHECK(c(6) == 0);
    CHECK(c(-1) == -1);
    CHECK(c.conductor() == 4);
    CHECK(!c.is_principal());
    auto p = CharacterTable::chi2();
    CHECK(p.is_principal());
    CHECK(p.conductor() == 1);
    CHECK(p.primitive().modulus() == 1);
}

TEST_CASE("invalid character tables are rejected") {
    CHECK_THROWS(CharacterTable("bad", {0, 1, 1, 1}));
    CHECK_THROWS(CharacterTable("bad", {0, 1, 0, 0}));
    CHECK_THROWS(CharacterTable("bad", {0, 1, 1, -1, 1}));
    CHECK_NOTHROW(CharacterTable("chi5", {0, 1, -1, -1, 1}));
}

TEST_CASE("sigma_chi against direct enumeration") {
    CHECK(sigma_chi(1, 1) == 1);
    CHECK(sigma_chi(2, 1) == 4);
    CHECK(sigma_chi(5, 1) == 26);
    for (int k = 1; k <= 4; ++k)
        for (long n = 1; n <= 120; ++n) CHECK(sigma_chi(n, k) == naive_sigma(n, k));
}

TEST_CASE("sigma_chi is multiplicative") {
    for (long m = 1; m <= 30; ++m)
        for (long n = 1; n <= 30; ++n)
            if (std::gcd(m, n) == 1) CHECK(sigma_chi(m * n, 2) == sigma_chi(m, 2) * sigma_chi(n, 2));
    // sigma(2m) = 2^{2k} sigma(m)
    for (long m = 1; m <= 50; ++m) CHECK(sigma_chi(2 * m, 3) == 64 * sigma_chi(m, 3));
}

TEST_CASE("moebius") {
    const long mu[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
    for (long n = 1; n <= 12; ++n) CHECK(moebius(n) == mu[n - 1]);
}

TEST_CASE("Eisenstein series E_3(chi_-4) at 2 tau") {
    QSeries e = eisenstein_chi4(1, 12, 2);
    CHECK(e.coeff(0) == 0);
    const long expect[] = {1, 4, 8, 16, 26};
    for (long n = 1; n <= 5; ++n) {
        CHECK(e.coeff(2 * n) == expect[n - 1]);
        CHECK(e.coeff(2 * n - 1) == 0);
    }
}

TEST_CASE("parity violation") {
    EisensteinSpec spec{4, CharacterTable::chi_minus4(), CharacterTable::trivial()};
    CHECK_THROWS_AS(eisenstein_series(spec, 10), ParityViolation);
}

TEST_CASE("H_k coefficients from the divisor sums") {
    const long T = 120;
    for (int k = 1; k <= 5; ++k) {
        QSeries h = h_k_series(k, T);
        Rational e2k(euler_number(2 * k));
        for (long n = 1; n < T; ++n) {
            Rational expect;
            if (k % 2 == 1) {
                expect = n % 2 == 0 ? Rational(-naive_sigma(n / 2, k)) / e2k : Rational(0);
            } else {
                BigInt s = naive_sigma(n, k);
                if (n % 2 == 0) s -= pow_int(4, k) * naive_sigma(n / 2, k);
                expect = Rational(s) / (Rational(pow_int(4, k)) * e2k);
            }
            CHECK(h.coeff(n) == expect);
        }
        CHECK(h.coeff(0) == 0);
    }
}

TEST_CASE("H_1 is f_1") {
    CHECK(agrees(h_k_series(1, 300), eta_expand(quotients::f_k(1), 300)));
}

TEST_CASE("chi_2 twist agrees with the untwisted assembly") {
    for (int k = 1; k <= 6; ++k) {
        CHECK(eis2_crosscheck(k, 100));
        CHECK(agrees(h_k_series_via_chi2(k, 150), h_k_series(k, 150)));
    }
    CHECK(eis2_crosscheck(1, 3));
}
