#pragma once

// Integer kernels behind QSeries and the eta expansions.  Vectors hold the
// coefficients of q^0, q^1, ... of a power series truncated to their length.

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "betaq/rational.hpp"

namespace betaq::detail {

// (numerators, d) with coeffs[i] == numerators[i] / d, first len entries only.
inline std::pair<std::vector<BigInt>, BigInt> to_integers(std::span<const Rational> coeffs, long len) {
    std::size_t n = std::min(coeffs.size(), static_cast<std::size_t>(std::max(len, 0L)));
    BigInt d = 1;
    for (std::size_t i = 0; i < n; ++i)
        if (coeffs[i].get_den() != 1) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), coeffs[i].get_den_mpz_t());
    std::vector<BigInt> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (d == 1) {
            out[i] = coeffs[i].get_num();
        } else {
            mpz_divexact(out[i].get_mpz_t(), d.get_mpz_t(), coeffs[i].get_den_mpz_t());
            out[i] *= coeffs[i].get_num();
        }
    }
    return {std::move(out), std::move(d)};
}

inline std::vector<Rational> to_rationals(const std::vector<BigInt>& nums, const BigInt& den) {
    std::vector<Rational> out(nums.size());
    for (std::size_t i = 0; i < nums.size(); ++i) {
        out[i] = Rational(nums[i], den);
        out[i].canonicalize();
    }
    return out;
}

inline std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b, std::size_t len) {
    std::vector<BigInt> out(len);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (sgn(a[i]) == 0) continue;
        std::size_t stop = std::min(b.size(), len - i);
        for (std::size_t j = 0; j < stop; ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return out;
}

// 1/A for integral A with A[0] == +-1.
inline std::vector<BigInt> inverse_unit(const std::vector<BigInt>& a, std::size_t len) {
    std::vector<BigInt> out(len);
    if (len == 0) return out;
    const bool neg = sgn(a[0]) < 0;
    out[0] = a[0];
    BigInt acc;
    for (std::size_t n = 1; n < len; ++n) {
        acc = 0;
        std::size_t stop = std::min(n, a.size() - 1);
        for (std::size_t j = 1; j <= stop; ++j)
            if (sgn(a[j]) != 0) mpz_addmul(acc.get_mpz_t(), a[j].get_mpz_t(), out[n - j].get_mpz_t());
        out[n] = neg ? BigInt(acc) : BigInt(-acc);
    }
    return out;
}

// Sparse series: (exponent, coefficient) pairs with small integer coefficients.
using SparseTerms = std::vector<std::pair<std::size_t, long>>;

// x <- x * s, in place, where s[0] == (0, 1).
inline void mul_sparse_in_place(std::vector<BigInt>& x, const SparseTerms& s) {
    for (std::size_t n = x.size(); n-- > 0;) {
        for (const auto& [e, c] : s) {
            if (e == 0 || e > n) continue;
            const BigInt& src = x[n - e];
            if (sgn(src) == 0) continue;
            if (c > 0)
                mpz_addmul_ui(x[n].get_mpz_t(), src.get_mpz_t(), static_cast<unsigned long>(c));
            else
                mpz_submul_ui(x[n].get_mpz_t(), src.get_mpz_t(), static_cast<unsigned long>(-c));
        }
    }
}

// x <- x / s, in place, where s[0] == (0, 1).
inline void div_sparse_in_place(std::vector<BigInt>& x, const SparseTerms& s) {
    for (std::size_t n = 0; n < x.size(); ++n) {
        for (const auto& [e, c] : s) {
            if (e == 0 || e > n) continue;
            const BigInt& src = x[n - e];
            if (sgn(src) == 0) continue;
            if (c > 0)
                mpz_submul_ui(x[n].get_mpz_t(), src.get_mpz_t(), static_cast<unsigned long>(c));
            else
                mpz_addmul_ui(x[n].get_mpz_t(), src.get_mpz_t(), static_cast<unsigned long>(-c));
        }
    }
}

} // namespace betaq::detail
