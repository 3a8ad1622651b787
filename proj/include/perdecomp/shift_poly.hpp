#pragma once

#include <initializer_list>
#include <map>
#include <span>
#include <string>

#include "perdecomp/rational.hpp"
#include "perdecomp/signal.hpp"

namespace perdecomp {

/// Formal finite sum  sum_i c_i E^{h_i}  with rational shifts.
///
/// Shifts are not reduced modulo any period here; reduction happens when the
/// polynomial is applied to a signal, so the same object acts on every grid.
class ShiftPoly {
public:
    using Terms = std::map<Rational, double>;

    /// The zero operator.
    ShiftPoly() = default;
    explicit ShiftPoly(Terms terms);

    static ShiftPoly identity() { return shift(Rational(0)); }
    static ShiftPoly shift(const Rational& h, double coefficient = 1.0);
    /// E - I
    static ShiftPoly forward_difference();
    /// I - E^{-1}
    static ShiftPoly backward_difference();
    /// sum_i coeffs[i] E^{i * unit}
    static ShiftPoly from_powers(std::span<const double> coeffs,
                                 const Rational& unit = Rational(1));
    static ShiftPoly from_powers(std::initializer_list<double> coeffs,
                                 const Rational& unit = Rational(1));

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    double coefficient(const Rational& h) const;

    /// Human-readable form such as "2I + E^2 - E^1/2".
    std::string str() const;

    ShiftPoly operator-() const;
    friend ShiftPoly operator+(const ShiftPoly& a, const ShiftPoly& b);
    friend ShiftPoly operator-(const ShiftPoly& a, const ShiftPoly& b);
    /// Composition: E^a E^b = E^{a+b}.
    friend ShiftPoly operator*(const ShiftPoly& a, const ShiftPoly& b);
    friend ShiftPoly operator*(double c, const ShiftPoly& a);

    friend bool operator==(const ShiftPoly&, const ShiftPoly&) = default;

private:
    void add_term(const Rational& h, double c);

    Terms terms_;
};

/// sum_i c_i E^{h_i} f, each shift reduced modulo the grid period.
Signal apply_operator(const ShiftPoly& op, const Signal& f);

/// True when every shift of op lands on the grid.
bool accepts(const Grid& grid, const ShiftPoly& op);

}  // namespace perdecomp
