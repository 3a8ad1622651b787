#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace perdecomp {

/// Exact fraction with 64-bit numerator and denominator.
///
/// Always kept reduced with a positive denominator, so equality is structural.
/// Intermediate products use 128-bit arithmetic; a result that does not fit
/// back into 64 bits throws std::overflow_error.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    /// Accepts "n", "-n", "n/d" with optional surrounding whitespace.
    static Rational parse(std::string_view text);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    bool is_zero() const noexcept { return num_ == 0; }
    bool is_positive() const noexcept { return num_ > 0; }

    /// Largest integer not greater than the value.
    std::int64_t floor() const noexcept;
    double to_double() const noexcept;

    /// "3" for integers, "-1/2" otherwise.
    std::string str() const;

    Rational operator-() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    /// Floored modulo: result lies in [0, b) for b > 0.
    friend Rational operator%(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace perdecomp
