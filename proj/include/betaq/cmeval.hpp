#pragma once

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "betaq/bigreal.hpp"
#include "betaq/rational.hpp"

namespace betaq {

/// sum_{m,n >= 1} (-1)^m / (n^2 + c m^2) for an integer weight c >= 1.
///
/// The n-sum is collapsed with sum_n 1/(n^2+a^2) = (pi a coth(pi a) - 1)/(2a^2);
/// the slowly convergent pieces of the m-sum are then summed in closed form,
/// leaving sum_m (-1)^m pi / (sqrt(c) m (e^{2 pi sqrt(c) m} - 1)).
BigReal alternating_lattice_sum(long c, long prec);

/// L_l with weight 2^l.
BigReal lattice_sum_L(int ell, long prec);

/// The lattice sum with weight 4^{l-1}, which is the quantity the eta
/// evaluation at 2^k i actually involves (it coincides with L_l at l = 2).
BigReal lemma_lattice_sum(int ell, long prec);

/// Closed forms for l = 1, 2, 3:
///   -pi^2/24 - pi log2/8
///   -7pi^2/96 - pi log2/32 - pi log(sqrt2-1)/8
///   -31pi^2/384 - 5pi log2/128 + pi log(sqrt2-1)/32 - pi log(1-2^{-1/4})/8
BigReal lattice_sum_closed_form(int ell, long prec);

enum class LatticeWeight { lemma, literal };

/// pi^{1/4} / (Gamma(3/4) 2^{(k+1)/2}) exp(-pi (2^k-1)^2 / (12 2^k) - (1/2pi) sum_{l<=k} 2^l L_l).
BigReal eta_pow2_lemma(int k, long prec, LatticeWeight w = LatticeWeight::lemma);

/// eta(2^r i) from q^{1/24} (q;q)_inf at q = e^{-2 pi 2^r}.
BigReal eta_direct(int r, long prec);

/// Classical closed forms for eta(2^r i), r = 0..3.
BigReal eta_closed_form(int r, long prec);

/// Psi(t i) = sum_{n >= 0} e^{-2 pi t n(n+1)/2}, t = 2^r.
BigReal psi_direct(int r, long prec);
/// Closed forms for Psi(2i) and Psi(4i) (r = 1, 2).
BigReal psi_closed_form(int r, long prec);

/// a = pi^{1/4} / Gamma(3/4).
BigReal cm_constant_a(long prec);

/// F, F(2 tau) and theta(2 tau) at tau_r = 2^r i: direct eta values and the
/// lemma-based exponential forms.
struct FThetaValues {
    BigReal f_direct, f_closed;
    BigReal f2_direct, f2_closed;
    BigReal theta2_direct, theta2_closed;
};
FThetaValues ftheta_values(int r, long prec);

/// Both sides of eta(4 tau)^2 = e^{3 pi i tau / 4} eta(tau) Psi(tau) Psi(2 tau) / eta(2 tau) at tau = 2i.
struct Rec2Values {
    BigReal lhs;
    BigReal rhs;
};
Rec2Values rec2_at_2i(long prec);

/// Exact data for evaluating H_k at tau_r = 2^r i.
struct CMContext {
    int k = 0;
    int r = 0;
    long prec = 0;                 // target precision; internal values carry 32 guard bits
    std::vector<Rational> alpha;   // decomposition of H_k - f_k
    std::vector<Rational> beta;
    Rational gamma;
    std::vector<BigReal> L;        // L[l] for l = 1 .. r+3 (index 0 unused)
};

/// L is filled with lemma_lattice_sum by default; LatticeWeight::literal uses
/// lattice_sum_L.
CMContext make_cm_context(int k, int r, long prec, LatticeWeight w = LatticeWeight::lemma);

enum class MTermForm {
    /// First term of M(l, r) is -l 2^{r+1} pi, the factor q^l at tau_r.
    corrected,
    /// First term is -(l 2^{r+1}/pi) sum_{m <= r+1} 2^m L_m.
    verbatim,
};

BigReal hk_cm_closed(const CMContext& ctx, MTermForm form = MTermForm::corrected);

/// sum of the Fourier coefficients of H_k times q^n, q = e^{-2^{r+1} pi},
/// stopping once the tail bound drops below 2^-(prec+32) of the partial sum.
BigReal hk_cm_direct(int k, int r, long prec);

struct CMReport {
    int k = 0, r = 0;
    long prec = 0;
    BigReal direct;
    BigReal closed, rel_err;                     // 4^{l-1} weights, corrected M
    BigReal closed_verbatim, rel_err_verbatim;   // 2^l weights, M as displayed
};

CMReport cm_report(int k, int r, long prec);

void to_json(nlohmann::json& j, const CMReport& r);

} // namespace betaq
