#pragma once

#include <cstdint>
#include <vector>

#include "perdecomp/shift_poly.hpp"

namespace perdecomp {

/// The k-th cyclotomic polynomial with integer coefficients (ascending powers).
///   Phi_1 = x - 1, Phi_2 = x + 1, Phi_3 = x^2 + x + 1, Phi_6 = x^2 - x + 1,
///   Phi_12 = x^4 - x^2 + 1, ...
class CyclotomicPoly {
public:
    /// Throws InvalidParameter for k < 1.
    static CyclotomicPoly of(std::int64_t k);

    std::int64_t index() const noexcept { return k_; }
    const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }
    std::size_t degree() const noexcept { return coeffs_.size() - 1; }

    /// Phi_k(E^unit) as a shift polynomial.
    ShiftPoly to_shift_poly(const Rational& unit = Rational(1)) const;

private:
    CyclotomicPoly(std::int64_t k, std::vector<std::int64_t> coeffs)
        : k_(k), coeffs_(std::move(coeffs)) {}

    std::int64_t k_;
    std::vector<std::int64_t> coeffs_;
};

/// Ascending list of positive divisors of n (n >= 1).
std::vector<std::int64_t> divisors(std::int64_t n);

/// Multiplicative order of e^{2 pi i j / p}, i.e. p / gcd(j, p).
std::int64_t root_order(std::int64_t j, std::int64_t p);

}  // namespace perdecomp
