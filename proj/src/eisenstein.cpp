#include "betaq/eisenstein.hpp"

#include <numeric>

#include "betaq/analytics.hpp"
#include "betaq/errors.hpp"

namespace betaq {

namespace {

long mod_floor(long n, long m) {
    long r = n % m;
    return r < 0 ? r + m : r;
}

} // namespace

CharacterTable::CharacterTable(std::string name, std::vector<int> values)
    : name_(std::move(name)), values_(std::move(values)) {
    const long m = modulus();
    if (m < 1) throw Error("character '" + name_ + "' has an empty value table");
    for (long n = 0; n < m; ++n) {
        int v = values_[n];
        if (v < -1 || v > 1) throw Error("character '" + name_ + "' has a value outside {-1,0,1}");
        if ((v == 0) != (std::gcd(n, m) > 1))
            throw Error("character '" + name_ + "' vanishes off the non-units or on a unit");
    }
    if ((*this)(1) != 1) throw Error("character '" + name_ + "' has chi(1) != 1");
    for (long a = 0; a < m; ++a)
        for (long b = 0; b < m; ++b)
            if ((*this)(a * b) != (*this)(a) * (*this)(b))
                throw Error("character '" + name_ + "' is not multiplicative");

    principal_ = true;
    for (long n = 0; n < m; ++n)
        if (std::gcd(n, m) == 1 && values_[n] != 1) principal_ = false;

    for (long r = 1; r <= m; ++r) {
        if (m % r != 0) continue;
        bool induced = true;
        for (long n = 1; n < m && induced; ++n)
            if (std::gcd(n, m) == 1 && n % r == 1 % r && values_[n] != 1) induced = false;
        if (induced) {
            conductor_ = r;
            break;
        }
    }
}

CharacterTable CharacterTable::chi_minus4() { return CharacterTable("chi_-4", {0, 1, 0, -1}); }
CharacterTable CharacterTable::trivial() { return CharacterTable("1", {1}); }
CharacterTable CharacterTable::chi2() { return CharacterTable("chi_2", {0, 1}); }

int CharacterTable::operator()(long n) const { return values_[mod_floor(n, modulus())]; }

CharacterTable CharacterTable::primitive() const {
    const long r = conductor_;
    const long m = modulus();
    std::vector<int> vals(static_cast<std::size_t>(r));
    for (long a = 0; a < r; ++a) {
        if (std::gcd(a, r) > 1) continue;
        for (long n = a; n < m * r + r; n += r) {
            if (std::gcd(n, m) == 1) {
                vals[a] = (*this)(n);
                break;
            }
        }
    }
    return CharacterTable(name_ + "^0", std::move(vals));
}

long moebius(long n) {
    if (n < 1) throw Error("moebius needs n >= 1");
    long result = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

BigInt twisted_divisor_sum(const CharacterTable& chi, long n, int e) {
    if (n < 1) throw Error("divisor sums need n >= 1");
    BigInt total = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        long d2 = n / d;
        total += chi(n / d) * pow_int(d, static_cast<unsigned long>(e));
        if (d2 != d) total += chi(n / d2) * pow_int(d2, static_cast<unsigned long>(e));
    }
    return total;
}

BigInt sigma_chi(long n, int k) {
    if (k < 1) throw Error("sigma_chi needs k >= 1");
    return twisted_divisor_sum(CharacterTable::chi_minus4(), n, 2 * k);
}

namespace {

// sum_{c | (ell, d)} c mu(ell/c) psi0(ell/c) conj(psi0)(d/c); psi0 is real.
long inner_sum(long ell, long d, const CharacterTable& psi0) {
    long g = std::gcd(ell, d);
    long total = 0;
    for (long c = 1; c <= g; ++c) {
        if (g % c != 0) continue;
        total += c * moebius(ell / c) * psi0(ell / c) * psi0(d / c);
    }
    return total;
}

void check_parity(const EisensteinSpec& spec) {
    int lhs = spec.chi(-1) * spec.psi(-1);
    int rhs = spec.weight % 2 == 0 ? 1 : -1;
    if (lhs != rhs) throw ParityViolation();
}

} // namespace

BigInt eisenstein_coefficient(const EisensteinSpec& spec, long n) {
    if (n < 1) throw Error("eisenstein_coefficient needs n >= 1");
    const CharacterTable psi0 = spec.psi.primitive();
    const long ell = spec.ell();
    BigInt total = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        long inner = inner_sum(ell, d, psi0);
        if (inner == 0 || spec.chi(n / d) == 0) continue;
        total += spec.chi(n / d) * inner * pow_int(d, static_cast<unsigned long>(spec.weight - 1));
    }
    return total;
}

QSeries eisenstein_series(const EisensteinSpec& spec, long truncation, long scale) {
    check_parity(spec);
    if (spec.weight < 1) throw Error("Eisenstein weight must be positive");
    if (scale < 1 || scale % spec.big_r() != 0)
        throw Error("argument scale " + std::to_string(scale) + " leaves q^(n/" + std::to_string(spec.big_r()) +
                    ") fractional");
    const long step = scale / spec.big_r();
    if (truncation <= 0) return QSeries::zero(truncation);

    std::vector<Rational> coeffs(static_cast<std::size_t>(truncation));
    if (spec.chi.is_principal()) {
        if (spec.psi.modulus() != 1)
            throw Error("constant term for principal chi is only implemented for psi of modulus 1");
        coeffs[0] = -bernoulli_number(spec.weight) / (2 * spec.weight);
    }

    // a(n) = sum_{d m = n} chi(m) d^{k-1} inner(d), accumulated by a sieve over d.
    const long n_max = (truncation - 1) / step;
    const CharacterTable psi0 = spec.psi.primitive();
    const long ell = spec.ell();
    std::vector<BigInt> a(static_cast<std::size_t>(n_max + 1));
    for (long d = 1; d <= n_max; ++d) {
        long inner = inner_sum(ell, d, psi0);
        if (inner == 0) continue;
        BigInt dk = pow_int(d, static_cast<unsigned long>(spec.weight - 1)) * inner;
        for (long m = 1; d * m <= n_max; ++m) {
            int c = spec.chi(m);
            if (c > 0)
                a[d * m] += dk;
            else if (c < 0)
                a[d * m] -= dk;
        }
    }
    for (long n = 1; n <= n_max; ++n) coeffs[n * step] = Rational(a[n]);
    return QSeries(0, std::move(coeffs), truncation);
}

QSeries eisenstein_chi4(int k, long truncation, long scale) {
    EisensteinSpec spec{2 * k + 1, CharacterTable::chi_minus4(), CharacterTable::trivial()};
    return eisenstein_series(spec, truncation, scale);
}

QSeries h_k_series(int k, long truncation) {
    if (k < 1) throw Error("h_k_series needs k >= 1");
    const Rational e2k(euler_number(2 * k));
    if (k % 2 == 1) return Rational(-1 / e2k) * eisenstein_chi4(k, truncation, 2);
    const Rational four_k = pow2(2 * k);
    QSeries diff = eisenstein_chi4(k, truncation, 1) - four_k * eisenstein_chi4(k, truncation, 2);
    return Rational(1 / (four_k * e2k)) * diff;
}

QSeries h_k_series_via_chi2(int k, long truncation) {
    if (k % 2 == 1) return h_k_series(k, truncation);
    const Rational e2k(euler_number(2 * k));
    const Rational four_k = pow2(2 * k);
    EisensteinSpec twisted{2 * k + 1, CharacterTable::chi_minus4(), CharacterTable::chi2()};
    QSeries diff = four_k * eisenstein_chi4(k, truncation, 2) - eisenstein_series(twisted, truncation, 2);
    return Rational(1 / (four_k * e2k)) * diff;
}

bool eis2_crosscheck(int k, long truncation) {
    EisensteinSpec twisted{2 * k + 1, CharacterTable::chi_minus4(), CharacterTable::chi2()};
    QSeries general = eisenstein_series(twisted, truncation, 2);
    QSeries combo = pow2(2 * k + 1) * eisenstein_chi4(k, truncation, 2) - eisenstein_chi4(k, truncation, 1);
    return general.truncation() == combo.truncation() && agrees(general, combo);
}

} // namespace betaq
