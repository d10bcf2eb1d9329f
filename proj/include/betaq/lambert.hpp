#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "betaq/qseries.hpp"
#include "betaq/rational.hpp"

namespace betaq {

/// Polynomial with big-integer coefficients, ascending degree.  The zero
/// polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    BigInt coeff(long i) const;
    BigInt operator()(const BigInt& t) const;
    bool is_palindromic() const;

    /// p(t^m).
    IntPolynomial substitute_power(long m) const;
    IntPolynomial shifted(long s) const;   // t^s p(t)

    std::string to_string(char var = 't') const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const BigInt& s, const IntPolynomial& p);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim();
    std::vector<BigInt> c_;
};

/// A_r(t) = (1-t)^{r+1} sum_{l=1}^{r+1} l^r t^{l-1}, cut at degree max(r-1, 0).
IntPolynomial eulerian_poly(int r);

/// P_k(t) = (1+t)^{2k+1} A_{2k}(t) - 2^{2k} t A_{2k}(t^2).
IntPolynomial p_k_poly(int k);

/// sum_{n >= 1} c(n) num(q^n) / (1 - q^{d n})^e to O(q^truncation).  num must
/// have zero constant term.
QSeries lambert_series(const std::function<int(long)>& c, const IntPolynomial& num, long d, int e,
                       long truncation);

/// The Eisenstein side written as a Lambert series:
///   k odd:  -(1/E_{2k}) sum chi_-4(n) q^{2n} A_{2k}(q^{2n}) / (1 - q^{2n})^{2k+1}
///   k even: (1/(2^{2k} E_{2k})) sum chi_-4(n) q^n P_k(q^n) / (1 - q^{2n})^{2k+1}
QSeries lambert_expand(int k, long truncation);

struct IdentityReport {
    std::string identity;
    int k = 0;
    long truncation = 0;
    bool holds = false;
    /// Lowest exponent where the two sides differ.
    std::optional<long> first_mismatch;
    /// For the cusp-form identities: whether f_k - (Lambert side) is zero,
    /// its decomposition residual, and the three cusp conditions.
    bool difference_zero = false;
    bool residual_zero = true;
    bool c1 = true, c2 = true, c3 = true;
};

/// D = f_k - lambert_expand(k).  Holds when D is zero for k = 1, and for
/// k >= 2 when D decomposes with zero residual and satisfies the three
/// cusp conditions.
IdentityReport verify_theorem2(int k, long truncation);

enum class ClassicalIdentity { ramanujan, hou_sun, k3 };

/// Parses "ramanujan", "hou-sun" (or "hou_sun") and "k3".
std::optional<ClassicalIdentity> parse_classical(const std::string& name);
std::string to_string(ClassicalIdentity which);

IdentityReport classical_report(ClassicalIdentity which, long truncation);
inline bool verify_classical(ClassicalIdentity which, long truncation) {
    return classical_report(which, truncation).holds;
}

/// Both sides of the classical identities, exposed for tests.
QSeries classical_lhs(ClassicalIdentity which, long truncation);
QSeries classical_rhs(ClassicalIdentity which, long truncation);

void to_json(nlohmann::json& j, const IdentityReport& r);

} // namespace betaq
