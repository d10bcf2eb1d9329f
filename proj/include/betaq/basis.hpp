#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "betaq/etaq.hpp"
#include "betaq/qseries.hpp"
#include "betaq/rational.hpp"

namespace betaq {

struct BasisElement {
    EtaQuotient quotient;
    std::string label;   // e.g. "F^1*theta2^6"
    QSeries series;      // q^lead + O(q^{lead+1})
};

/// Basis of M_{2k+1}(8, chi_-4) indexed by leading exponent 0 .. 2k+1:
///   l <= k-1:      F^l theta2^{4(k-l)+2}
///   k <= l <= 2k:  F^{2k-l} F2^{l-k} theta2^2
///   l = 2k+1:      F F2^k / theta2^2
struct BasisSet {
    int k = 0;
    long truncation = 0;
    std::vector<BasisElement> elements;
};

BasisSet build_basis(int k, long truncation);

struct Decomposition {
    int k = 0;
    std::vector<Rational> alpha;   // alpha_k(0 .. k-1)
    std::vector<Rational> beta;    // beta_k(k .. 2k), beta[i] is beta_k(k+i)
    Rational gamma;
    bool residual_zero = true;
    std::optional<long> first_residual;   // exponent of the first nonzero residual coefficient

    /// Coefficient of basis element l, 0 <= l <= 2k+1.
    Rational coefficient(int l) const;
    static Decomposition zero(int k);
};

/// Forward substitution on leading exponents.  Throws NotInSpace with the
/// first exponent where the residual is nonzero.
Decomposition decompose(const QSeries& g, const BasisSet& basis);

/// As decompose, but records a nonzero residual instead of throwing.
Decomposition decompose_recording(const QSeries& g, const BasisSet& basis);

QSeries reconstruct(const Decomposition& d, const BasisSet& basis);

struct ConditionReport {
    bool c1 = false;   // alpha_k(0) = 0 = gamma_k
    bool c2 = false;
    bool c3 = false;
    Rational lhs2;     // left side of condition c2
    Rational lhs3;     // left side of condition c3
    bool all() const { return c1 && c2 && c3; }
};

ConditionReport cusp_conditions(const Decomposition& d);

/// T_{2k+1} = f_k - H_k.
QSeries t_cusp_series(int k, long truncation);

void to_json(nlohmann::json& j, const Decomposition& d);
void to_json(nlohmann::json& j, const ConditionReport& c);

} // namespace betaq
