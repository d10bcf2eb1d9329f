#include <doctest.h>

#include <random>

#include "betaq/basis.hpp"
#include "betaq/eisenstein.hpp"
#include "betaq/errors.hpp"
#include "betaq/etaq.hpp"

using namespace betaq;

TEST_CASE("basis shape") {
    for (int k = 1; k <= 6; ++k) {
        BasisSet b = build_basis(k, 60);
        REQUIRE(b.elements.size() == static_cast<size_t>(2 * k + 2));
        for (int l = 0; l <= 2 * k + 1; ++l) {
            CHECK(b.elements[l].series.offset() == l);
            CHECK(b.elements[l].series.leading() == 1);
            CHECK(b.elements[l].series.truncation() >= 60);
            if (l < 2 * k + 1) CHECK(ghn_check(b.elements[l].quotient).weight == 2 * k + 1);
        }
        CHECK(agrees(b.elements[0].series, eta_expand(quotients::theta2().pow(4 * k + 2), 60)));
    }
}

TEST_CASE("self decomposition gives unit vectors") {
    const int k = 3;
    BasisSet b = build_basis(k, 80);
    for (int l = 0; l <= 2 * k + 1; ++l) {
        Decomposition d = decompose(b.elements[l].series, b);
        for (int m = 0; m <= 2 * k + 1; ++m) CHECK(d.coefficient(m) == (m == l ? 1 : 0));
    }
    Decomposition z = decompose(QSeries::zero(80), b);
    for (int m = 0; m <= 2 * k + 1; ++m) CHECK(z.coefficient(m) == 0);
    CHECK(cusp_conditions(z).all());
}

TEST_CASE("random combinations round trip") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
    for (int trial = 0; trial < 100; ++trial) {
        int k = 1 + trial % 4;
        BasisSet b = build_basis(k, 50);
        std::vector<Rational> c(2 * k + 2);
        QSeries g = QSeries::zero(50);
        for (int l = 0; l <= 2 * k + 1; ++l) {
            c[l] = Rational(num(rng), den(rng));
            c[l].canonicalize();
            g = g + c[l] * b.elements[l].series;
        }
        Decomposition d = decompose(g, b);
        for (int l = 0; l <= 2 * k + 1; ++l) CHECK(d.coefficient(l) == c[l]);
        CHECK(agrees(reconstruct(d, b), g));
    }
}

TEST_CASE("series outside the space is rejected") {
    BasisSet b = build_basis(1, 40);
    QSeries g = b.elements[1].series + QSeries::monomial(1, 11, 40);
    CHECK_THROWS_AS(decompose(g, b), NotInSpace);
    Decomposition d = decompose_recording(g, b);
    CHECK(!d.residual_zero);
    CHECK(d.first_residual == 11L);
}

TEST_CASE("f_1 decomposes with reconstruction") {
    BasisSet b = build_basis(1, 100);
    QSeries f1 = eta_expand(quotients::f_k(1), 100);
    Decomposition d = decompose(f1, b);
    CHECK(d.alpha[0] == 0);
    CHECK(agrees(reconstruct(d, b), f1));
}

TEST_CASE("cusp conditions") {
    CHECK(t_cusp_series(1, 200).is_zero());
    for (int k = 2; k <= 6; ++k) {
        QSeries t = t_cusp_series(k, 120);
        CHECK(!t.is_zero());
        CHECK(t.offset() >= 1);
        BasisSet b = build_basis(k, 120);
        CHECK(cusp_conditions(decompose(t, b)).all());
        CHECK(!cusp_conditions(decompose(eta_expand(quotients::f_k(k), 120), b)).all());
    }
}
