#pragma once

#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "betaq/bigreal.hpp"
#include "betaq/qseries.hpp"
#include "betaq/rational.hpp"

namespace betaq {

/// E_m from 2/(e^z + e^-z) = sum E_n z^n / n!, by exact inversion of cosh.
/// Throws OddIndex for odd m.
BigInt euler_number(int m);

/// B_m from z/(e^z - 1) = sum B_n z^n / n!.
Rational bernoulli_number(int m);

struct BetaValue {
    int k;
    Rational rational_part;   // beta(2k+1) = rational_part * pi^{2k+1}
    BigReal value;
};

/// beta(2k+1) = (-1)^k E_{2k} / (4^{k+1} (2k)!) pi^{2k+1}, k >= 0.
BetaValue beta_odd(int k, long prec = BigReal::kDefaultPrecision);

/// (1 - q) (q^2; q^2)^4 / (q; q)^2, which tends to pi/2 as q -> 1-.
BigReal wallis_check(const BigReal& q);

/// f_k evaluated at a real 0 < q < 1 from its product form.
BigReal f_k_numeric(int k, const BigReal& q);

/// The q -> 1- limit of (1-q)^{2k+1} f_k.
struct LimitReport {
    int k = 0;
    std::vector<BigReal> q_grid;
    std::vector<BigReal> scaled_values;      // (1-q)^{2k+1} f_k(q)
    /// Polynomial extrapolation to 1-q = 0 through the samples
    /// max(0, i-order) .. i, for each grid index i.
    std::vector<BigReal> extrapolations;
    BigReal extrapolated;                    // last entry of extrapolations
    BigReal target;                          // pi^{2k+1} / 2^{4k+3}
    BigReal rel_deviation;
    /// pi-free identity between the eta-side limit and the Lambert-side
    /// limit (2k)! beta(2k+1) / (2^{2k+1} E_{2k}), checked exactly.
    bool lambert_limit_matches = false;
};

/// Grid points must lie in (0, 1) and increase toward 1.
LimitReport limit_check(int k, std::span<const BigReal> q_grid, int order = 3);

/// The default grid q = 1 - 2^-j, j = 4..12, at `prec` bits.
std::vector<BigReal> default_limit_grid(long prec = 128, int j_first = 4, int j_last = 12);

/// 1 / 2^{4k+3} as the rational part of the limit, and the Lambert-side
/// rational part (sign per parity) (2k)! c_beta / (2^{2k+1} E_{2k}).
Rational eta_limit_rational(int k);
Rational lambert_limit_rational(int k);

/// Number of (n_1..n_{4k}, a, b) in N^{4k+2} (N includes 0) with
/// n = T_{n_1} + ... + T_{n_{4k}} + 2(T_a + T_b).
BigInt t_count(int k, long n);

/// t_count(k, 0..n_max) from Psi(x)^{4k} Psi(x^2)^2.
std::vector<BigInt> t_count_table(int k, long n_max);

enum class MainTermForm {
    /// c_k sigma_{chi_-4; 2k}(2n+k+1) with c_k = 1/(2^{2k} E_{2k}) for k even
    /// and -1/(2^{2k} E_{2k}) for k odd.  For k odd H_k only has even
    /// exponents and sigma(2m) = 2^{2k} sigma(m), which is where the 2^{2k}
    /// comes from.
    uniform,
    /// Same, but with c_k = -1/E_{2k} for k odd.  Too large by 2^{2k}.
    split,
};

Rational asymptotic_main_term(int k, long n, MainTermForm form = MainTermForm::uniform);

struct AsymptoticRow {
    long n;
    BigInt t;                 // coefficient of q^{2n+k+1} in f_k
    Rational main_term;       // uniform form
    Rational main_term_split;
    double ratio;             // t / main_term
    double ratio_split;
    Rational cusp_remainder;  // a_k(2n+k+1) = t - [q^{2n+k+1}] H_k
};

std::vector<AsymptoticRow> asymptotic_report(int k, long n_max);

struct GrowthReport {
    int k = 0;
    long n_max = 0;
    /// max over 1 <= n <= n_max of |a_k(n)| / (d(n) n^k), T_{2k+1} = sum a_k(n) q^n.
    double c_obs = 0;
    long argmax = 0;
    /// Same supremum over the first half of the window.
    double c_obs_half = 0;
};

GrowthReport coefficient_growth_check(int k, long n_max);

long divisor_count(long n);

void to_json(nlohmann::json& j, const LimitReport& r);
void to_json(nlohmann::json& j, const GrowthReport& r);

} // namespace betaq
