#include <doctest.h>

#include <cmath>

#include "betaq/cmeval.hpp"

using namespace betaq;

namespace {

// sum_{m,n >= 1} (-1)^m / (n^2 + c m^2), the n-sum cut at N with an
// Euler-Maclaurin tail, the m-sum averaged over two consecutive cut-offs.
double naive_lattice(long c) {
    const long N = 4000, M = 3000;
    double partial = 0, prev = 0;
    for (long m = 1; m <= M + 1; ++m) {
        double a2 = static_cast<double>(c) * m * m, a = std::sqrt(a2);
        double s = 0;
        for (long n = N; n >= 1; --n) s += 1.0 / (static_cast<double>(n) * n + a2);
        double x = static_cast<double>(N);
        s += (M_PI / 2 - std::atan(x / a)) / a - 0.5 / (x * x + a2);
        prev = partial;
        partial += (m % 2 ? -s : s);
    }
    return 0.5 * (partial + prev);
}

bool close(const BigReal& a, const BigReal& b, long bits) { return rel_error(a, b) < tolerance_bits(bits, a.precision()); }

} // namespace

TEST_CASE("fast lattice sum against the naive double sum") {
    for (long c : {1L, 2L, 4L, 8L, 16L}) {
        double fast = alternating_lattice_sum(c, 128).to_double();
        CHECK(std::abs(fast - naive_lattice(c)) < 1e-6 * std::abs(fast));
    }
}

TEST_CASE("lattice weights") {
    CHECK(lattice_sum_L(2, 256) == alternating_lattice_sum(4, 256));
    CHECK(lemma_lattice_sum(3, 256) == alternating_lattice_sum(16, 256));
    CHECK(std::abs(lattice_sum_closed_form(1, 128).to_double() + 0.683431) < 1e-6);
    for (int l = 1; l <= 3; ++l) CHECK(close(lemma_lattice_sum(l, 256), lattice_sum_closed_form(l, 256), 240));
}

TEST_CASE("eta at i from the Gamma function") {
    const long p = 256;
    BigReal quarter(Rational(1, 4), p);
    BigReal expect = gamma(quarter) / (2 * pow(pi(p), BigReal(Rational(3, 4), p)));
    CHECK(close(eta_direct(0, p), expect, 240));
    CHECK(std::abs(eta_direct(0, p).to_double() - 0.7682254) < 1e-7);
    CHECK(close(eta_closed_form(0, p), expect, 240));
}

TEST_CASE("eta at 2^r i: direct, closed forms and lemma") {
    for (int r = 0; r <= 3; ++r) {
        CHECK(close(eta_direct(r, 256), eta_closed_form(r, 256), 240));
        CHECK(close(eta_pow2_lemma(r, 256), eta_direct(r, 256), 240));
    }
    for (int r = 4; r <= 6; ++r) CHECK(close(eta_pow2_lemma(r, 256), eta_direct(r, 256), 230));
}

TEST_CASE("Psi values") {
    for (int r = 1; r <= 2; ++r) {
        BigReal t(2 * pi(256) * (1L << r));
        BigReal s(0L, 256);
        for (long n = 0; n < 30; ++n) s += exp(-(t * (n * (n + 1) / 2)));
        CHECK(close(psi_direct(r, 256), s, 240));
        CHECK(close(psi_closed_form(r, 256), s, 240));
    }
}

TEST_CASE("F, F(2 tau), theta(2 tau) and the eta(8i) recursion") {
    for (int r = 1; r <= 2; ++r) {
        auto v = ftheta_values(r, 256);
        CHECK(close(v.f_closed, v.f_direct, 230));
        CHECK(close(v.f2_closed, v.f2_direct, 230));
        CHECK(close(v.theta2_closed, v.theta2_direct, 230));
    }
    auto rec = rec2_at_2i(256);
    CHECK(close(rec.lhs, rec.rhs, 240));
}

TEST_CASE("H_k at 2^r i") {
    for (int k = 1; k <= 2; ++k) {
        BigReal direct = hk_cm_direct(k, 1, 128);
        CHECK(direct.sign() > 0);
        CHECK(close(hk_cm_closed(make_cm_context(k, 1, 128)), direct, 100));
    }
    // leading term sigma(1) e^{-8 pi}
    double lead = std::exp(-8 * M_PI);
    CHECK(std::abs(hk_cm_direct(1, 1, 128).to_double() / lead - 1) < 1e-9);
    CHECK(hk_cm_direct(1, 2, 128).to_double() / hk_cm_direct(1, 1, 128).to_double() ==
          doctest::Approx(std::exp(-8 * M_PI)).epsilon(1e-6));
}
