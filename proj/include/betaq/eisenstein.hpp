#pragma once

#include <string>
#include <vector>

#include "betaq/qseries.hpp"
#include "betaq/rational.hpp"

namespace betaq {

/// A real Dirichlet character given by its values on one period.
///
/// Construction checks that the table is a character: value 1 at 1, zero
/// exactly on residues sharing a factor with the modulus, and complete
/// multiplicativity.  The conductor is computed.
class CharacterTable {
public:
    CharacterTable(std::string name, std::vector<int> values);

    static CharacterTable chi_minus4();   // (-4/.), modulus 4
    static CharacterTable trivial();      // modulus 1
    static CharacterTable chi2();         // principal character mod 2

    const std::string& name() const noexcept { return name_; }
    long modulus() const noexcept { return static_cast<long>(values_.size()); }
    long conductor() const noexcept { return conductor_; }
    bool is_principal() const noexcept { return principal_; }
    const std::vector<int>& values() const noexcept { return values_; }

    /// chi(n) for any integer n, negative included.
    int operator()(long n) const;

    /// The primitive character inducing this one (modulus == conductor).
    CharacterTable primitive() const;

private:
    std::string name_;
    std::vector<int> values_;
    long conductor_ = 1;
    bool principal_ = false;
};

inline int char_value(const CharacterTable& c, long n) { return c(n); }

/// sum_{d | n} chi_{-4}(n/d) d^{2k}.
BigInt sigma_chi(long n, int k);

/// Generic twisted divisor sum sum_{d | n} chi(n/d) d^{e}.
BigInt twisted_divisor_sum(const CharacterTable& chi, long n, int e);

struct EisensteinSpec {
    int weight;
    CharacterTable chi;
    CharacterTable psi;

    long big_r() const { return psi.modulus(); }
    long ell() const { return psi.modulus() / psi.conductor(); }
};

/// The coefficient a(n) of the normalized Eisenstein series.
BigInt eisenstein_coefficient(const EisensteinSpec& spec, long n);

/// Normalized E_{k,chi,psi}(scale * tau) to O(q^truncation).  a(n) sits at
/// q^{n * scale / R}, so scale must be a multiple of R.
///
/// The constant term vanishes unless chi is principal; for principal chi it
/// is only available when psi has modulus 1.  Throws ParityViolation when
/// chi(-1) psi(-1) != (-1)^k.
QSeries eisenstein_series(const EisensteinSpec& spec, long truncation, long scale = 1);

/// E_{2k+1, chi_-4, 1}(scale * tau).
QSeries eisenstein_chi4(int k, long truncation, long scale);

/// The Eisenstein part H_k of f_k:
///   k odd:  -(1/E_{2k}) E(2 tau)
///   k even: (E(tau) - 2^{2k} E(2 tau)) / (2^{2k} E_{2k})
/// with E = E_{2k+1, chi_-4, 1}.
QSeries h_k_series(int k, long truncation);

/// H_k for k even assembled from the chi_2-twisted series instead:
/// (2^{2k} E(2 tau) - E_{2k+1,chi_-4,chi_2}(2 tau)) / (2^{2k} E_{2k}).
/// For k odd this is the same as h_k_series.
QSeries h_k_series_via_chi2(int k, long truncation);

/// True iff E_{2k+1,chi_-4,chi_2}(2 tau) from the general coefficient law
/// equals 2^{2k+1} E(2 tau) - E(tau) to O(q^truncation).
bool eis2_crosscheck(int k, long truncation);

long moebius(long n);

} // namespace betaq
