#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "betaq/qseries.hpp"
#include "betaq/rational.hpp"

namespace betaq {

/// prod_{delta | N} eta(delta tau)^{r_delta} on Gamma_0(N).
///
/// Factors with a zero exponent are dropped; every delta must divide the
/// level.
class EtaQuotient {
public:
    EtaQuotient() = default;
    EtaQuotient(long level, std::map<long, long> factors);

    /// Parses the compact form "4^6*8^4/2^4 @8".  Without "@N" the level is
    /// the lcm of the scales.  "1" stands for the empty product.
    static EtaQuotient parse(std::string_view text);

    long level() const noexcept { return level_; }
    const std::map<long, long>& factors() const noexcept { return factors_; }
    long exponent(long delta) const;

    /// sum delta * r_delta; the q-prefactor is q^(this / 24).
    long sum_delta_r() const;
    /// sum r_delta, i.e. twice the weight.
    long sum_r() const;

    /// Product of quotients; the level becomes the lcm of the two levels.
    EtaQuotient operator*(const EtaQuotient& other) const;
    EtaQuotient pow(long e) const;
    EtaQuotient with_level(long level) const { return EtaQuotient(level, factors_); }

    std::string to_string() const;

    friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

private:
    long level_ = 1;
    std::map<long, long> factors_;
};

void to_json(nlohmann::json& j, const EtaQuotient& e);
void from_json(const nlohmann::json& j, EtaQuotient& e);

/// prod (q^delta; q^delta)_inf^{r_delta} to O(q^truncation), without the
/// q^(sum delta r / 24) prefactor.
QSeries eta_product(const EtaQuotient& e, long truncation);

/// Full q-expansion including the prefactor, to O(q^truncation).
/// Throws FractionalPrefactor when 24 does not divide sum delta r_delta.
QSeries eta_expand(const EtaQuotient& e, long truncation);

struct ModularityReport {
    Rational weight;   // (1/2) sum r_delta
    bool cond24_a = false;   // sum delta r_delta == 0 mod 24
    bool cond24_b = false;   // sum (N/delta) r_delta == 0 mod 24
    std::map<long, Rational> cusp_orders;   // keyed by the divisor s of N
    bool is_holomorphic = false;
    bool is_cusp = false;
    /// Fundamental discriminant D of ((-1)^k prod delta^{r_delta} / .),
    /// present only for integral weight.
    std::optional<long> character_discriminant;
};

/// Gordon-Hughes-Newman conditions over the cusp representatives s | N.
ModularityReport ghn_check(const EtaQuotient& e);

void to_json(nlohmann::json& j, const ModularityReport& r);

/// The quotients used throughout the level-8 construction.
namespace quotients {
EtaQuotient f_k(long k);        // eta(4t)^{8k-2} eta(8t)^4 / eta(2t)^{4k}
EtaQuotient big_f();            // F = eta(4t)^8 / eta(2t)^4
EtaQuotient big_f2();           // F(2t)
EtaQuotient theta();            // theta(t) = eta(2t)^5 / (eta(t)^2 eta(4t)^2)
EtaQuotient theta2();           // theta(2t)
} // namespace quotients

} // namespace betaq
