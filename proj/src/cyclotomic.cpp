#include "perdecomp/cyclotomic.hpp"

#include <numeric>
#include <stdexcept>

#include "perdecomp/errors.hpp"

namespace perdecomp {

namespace {

using IntPoly = std::vector<std::int64_t>;

// Exact division by a monic divisor; throws if a remainder is left.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
    const std::size_t dn = den.size() - 1;
    IntPoly quotient(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const std::int64_t q = num[i];
        quotient[i - dn] = q;
        for (std::size_t t = 0; t <= dn; ++t) num[i - dn + t] -= q * den[t];
    }
    for (std::size_t i = 0; i < dn; ++i) {
        if (num[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
    }
    return quotient;
}

}  // namespace

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw InvalidParameter("divisors need a positive integer");
    std::vector<std::int64_t> small;
    std::vector<std::int64_t> large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::int64_t root_order(std::int64_t j, std::int64_t p) {
    std::int64_t r = ((j % p) + p) % p;
    return p / std::gcd(r, p);
}

CyclotomicPoly CyclotomicPoly::of(std::int64_t k) {
    if (k < 1) throw InvalidParameter("cyclotomic index must be positive");
    // x^k - 1 = prod_{d | k} Phi_d(x)
    IntPoly poly(static_cast<std::size_t>(k) + 1, 0);
    poly.front() = -1;
    poly.back() = 1;
    for (std::int64_t d : divisors(k)) {
        if (d == k) break;
        poly = divide_exact(std::move(poly), of(d).coefficients());
    }
    return CyclotomicPoly(k, std::move(poly));
}

ShiftPoly CyclotomicPoly::to_shift_poly(const Rational& unit) const {
    std::vector<double> c(coeffs_.begin(), coeffs_.end());
    return ShiftPoly::from_powers(c, unit);
}

}  // namespace perdecomp
