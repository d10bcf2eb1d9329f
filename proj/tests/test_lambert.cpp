#include <doctest.h>

#include "betaq/eisenstein.hpp"
#include "betaq/etaq.hpp"
#include "betaq/lambert.hpp"

using namespace betaq;

namespace {

// Eulerian numbers <r, m> from <r, m> = (m+1)<r-1, m> + (r-m)<r-1, m-1>.
IntPolynomial eulerian_recurrence(int r) {
    std::vector<BigInt> row{1};
    for (int n = 1; n <= r; ++n) {
        std::vector<BigInt> next(n, 0);
        for (int m = 0; m < n; ++m) {
            if (m < static_cast<int>(row.size())) next[m] += BigInt(m + 1) * row[m];
            if (m >= 1) next[m] += BigInt(n - m) * row[m - 1];
        }
        row = next;
    }
    return IntPolynomial(row);
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

TEST_CASE("Eulerian polynomials") {
    CHECK(eulerian_poly(0) == IntPolynomial({1}));
    CHECK(eulerian_poly(1) == IntPolynomial({1}));
    CHECK(eulerian_poly(4) == IntPolynomial({1, 11, 11, 1}));
    for (int r = 1; r <= 14; ++r) {
        CHECK(eulerian_poly(r) == eulerian_recurrence(r));
        CHECK(eulerian_poly(r).is_palindromic());
        CHECK(eulerian_poly(r)(1) == factorial(r));
    }
}

TEST_CASE("P_k polynomials") {
    CHECK(p_k_poly(1) == IntPolynomial({1, 0, 6, 0, 1}));
    for (int k = 1; k <= 6; ++k) {
        IntPolynomial p = p_k_poly(k);
        CHECK(p.degree() == 4 * k);
        CHECK(p(1) == pow_int(4, k) * factorial(2 * k));
        CHECK(p.coeff(0) == 1);
        CHECK(p.is_palindromic());
    }
}

TEST_CASE("polynomial arithmetic") {
    IntPolynomial a({1, 1}), b({-1, 1});
    CHECK(a * b == IntPolynomial({-1, 0, 1}));
    CHECK((a - a).degree() == -1);
    CHECK(a.substitute_power(3) == IntPolynomial({1, 0, 0, 1}));
    CHECK(a.shifted(2) == IntPolynomial({0, 0, 1, 1}));
    CHECK(a.to_string() == "1 + t");
}

TEST_CASE("generic Lambert series against a direct double sum") {
    const long T = 80;
    auto c = [](long n) { return n % 3 == 0 ? 0 : (n % 3 == 1 ? 1 : -1); };
    // sum c(n) q^n / (1 - q^{2n})^2 = sum c(n) sum_j (j+1) q^{n(2j+1)}
    std::vector<Rational> ref(T, 0);
    for (long n = 1; n < T; ++n)
        for (long j = 0; n * (2 * j + 1) < T; ++j) ref[n * (2 * j + 1)] += c(n) * (j + 1);
    CHECK(agrees(lambert_series(c, IntPolynomial({0, 1}), 2, 2, T), QSeries(0, ref, T)));
}

TEST_CASE("Lambert expansion equals H_k") {
    for (int k = 1; k <= 6; ++k) CHECK(agrees(lambert_expand(k, 150), h_k_series(k, 150)));
    QSeries l2 = lambert_expand(2, 20);
    CHECK(l2.coeff(0) == 0);
    CHECK(l2.coeff(1) == Rational(1, 80));
}

TEST_CASE("f_k minus the Lambert side") {
    auto r1 = verify_theorem2(1, 400);
    CHECK(r1.holds);
    CHECK(r1.difference_zero);
    for (int k = 2; k <= 4; ++k) {
        auto r = verify_theorem2(k, 200);
        CHECK(r.holds);
        CHECK(!r.difference_zero);
        CHECK(r.residual_zero);
        CHECK(r.c1);
        CHECK(r.c2);
        CHECK(r.c3);
    }
}

TEST_CASE("classical identities at moderate truncation") {
    for (auto which : {ClassicalIdentity::ramanujan, ClassicalIdentity::hou_sun, ClassicalIdentity::k3}) {
        auto r = classical_report(which, 120);
        CHECK(r.holds);
        CHECK(!r.first_mismatch);
    }
    CHECK(parse_classical("hou-sun") == ClassicalIdentity::hou_sun);
    CHECK(!parse_classical("nope"));
}

TEST_CASE("a perturbed side is caught") {
    QSeries lhs = classical_lhs(ClassicalIdentity::ramanujan, 60);
    QSeries rhs = classical_rhs(ClassicalIdentity::ramanujan, 60) + QSeries::monomial(1, 37, 60);
    CHECK(first_difference(lhs, rhs) == 37L);
}
