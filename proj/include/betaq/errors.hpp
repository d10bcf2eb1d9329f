#pragma once

#include <stdexcept>
#include <string>

namespace betaq {

// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroLeadingCoefficient : public Error {
public:
    ZeroLeadingCoefficient() : Error("series has zero leading coefficient") {}
};

// Asking for a coefficient at or above a series' truncation.
class UnknownCoefficient : public Error {
public:
    explicit UnknownCoefficient(long exponent)
        : Error("coefficient of q^" + std::to_string(exponent) + " is beyond the truncation"),
          exponent_(exponent) {}
    long exponent() const noexcept { return exponent_; }

private:
    long exponent_;
};

class FractionalPrefactor : public Error {
public:
    explicit FractionalPrefactor(long sum_delta_r)
        : Error("eta quotient prefactor q^(" + std::to_string(sum_delta_r) + "/24) is not integral") {}
};

class ParityViolation : public Error {
public:
    ParityViolation() : Error("chi(-1) psi(-1) != (-1)^k") {}
};

class NotInSpace : public Error {
public:
    explicit NotInSpace(long exponent)
        : Error("residual has a nonzero coefficient at q^" + std::to_string(exponent)),
          exponent_(exponent) {}
    long exponent() const noexcept { return exponent_; }

private:
    long exponent_;
};

class OddIndex : public Error {
public:
    explicit OddIndex(int m) : Error("Euler number E_" + std::to_string(m) + " has odd index") {}
};

class UsageError : public Error {
public:
    using Error::Error;
};

} // namespace betaq
