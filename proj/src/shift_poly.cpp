#include "perdecomp/shift_poly.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "perdecomp/errors.hpp"

namespace perdecomp {

ShiftPoly::ShiftPoly(Terms terms) {
    for (const auto& [h, c] : terms) add_term(h, c);
}

void ShiftPoly::add_term(const Rational& h, double c) {
    auto [it, inserted] = terms_.try_emplace(h, c);
    if (!inserted) it->second += c;
    if (it->second == 0.0) terms_.erase(it);
}

ShiftPoly ShiftPoly::shift(const Rational& h, double coefficient) {
    ShiftPoly p;
    p.add_term(h, coefficient);
    return p;
}

ShiftPoly ShiftPoly::forward_difference() { return shift(Rational(1)) - identity(); }

ShiftPoly ShiftPoly::backward_difference() { return identity() - shift(Rational(-1)); }

ShiftPoly ShiftPoly::from_powers(std::span<const double> coeffs, const Rational& unit) {
    ShiftPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        p.add_term(unit * Rational(static_cast<std::int64_t>(i)), coeffs[i]);
    }
    return p;
}

ShiftPoly ShiftPoly::from_powers(std::initializer_list<double> coeffs, const Rational& unit) {
    return from_powers(std::span<const double>(coeffs.begin(), coeffs.size()), unit);
}

double ShiftPoly::coefficient(const Rational& h) const {
    auto it = terms_.find(h);
    return it == terms_.end() ? 0.0 : it->second;
}

std::string ShiftPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [h, c] : terms_) {
        double mag = std::abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (mag != 1.0) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", mag);
            out += buf;
        }
        if (h.is_zero()) {
            out += "I";
        } else if (h == Rational(1)) {
            out += "E";
        } else {
            out += "E^" + (h.is_integer() || h.num() > 0 ? h.str() : "(" + h.str() + ")");
        }
    }
    return out;
}

ShiftPoly ShiftPoly::operator-() const { return -1.0 * *this; }

ShiftPoly operator+(const ShiftPoly& a, const ShiftPoly& b) {
    ShiftPoly r = a;
    for (const auto& [h, c] : b.terms_) r.add_term(h, c);
    return r;
}

ShiftPoly operator-(const ShiftPoly& a, const ShiftPoly& b) { return a + (-b); }

ShiftPoly operator*(const ShiftPoly& a, const ShiftPoly& b) {
    ShiftPoly r;
    for (const auto& [ha, ca] : a.terms_) {
        for (const auto& [hb, cb] : b.terms_) r.add_term(ha + hb, ca * cb);
    }
    return r;
}

ShiftPoly operator*(double c, const ShiftPoly& a) {
    ShiftPoly r;
    if (c == 0.0) return r;
    for (const auto& [h, v] : a.terms_) r.add_term(h, c * v);
    return r;
}

bool accepts(const Grid& grid, const ShiftPoly& op) {
    for (const auto& term : op.terms()) {
        if (!grid.accepts_shift(term.first)) return false;
    }
    return true;
}

Signal apply_operator(const ShiftPoly& op, const Signal& f) {
    const std::size_t n = f.size();
    std::vector<double> out(n, 0.0);
    for (const auto& [h, c] : op.terms()) {
        const std::size_t k = f.grid().shift_index(h);
        for (std::size_t j = 0; j < n; ++j) out[j] += c * f[(j + k) % n];
    }
    return Signal(f.grid(), std::move(out));
}

}  // namespace perdecomp
