#include "perdecomp/subspaces.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "dft.hpp"
#include "perdecomp/circulant.hpp"
#include "perdecomp/cyclotomic.hpp"
#include "perdecomp/errors.hpp"

namespace perdecomp {

namespace {

std::int64_t integer_period(const Grid& grid) {
    if (!grid.period().is_integer()) {
        throw InvalidParameter("operation needs an integer grid period, got " +
                               grid.period().str());
    }
    return grid.period().num();
}

bool is_power_of_two(std::int64_t k) { return k > 0 && (k & (k - 1)) == 0; }

void require_divides(std::int64_t d, std::int64_t p) {
    if (d < 1 || p < 1) throw InvalidParameter("periods must be positive integers");
    if (p % d != 0) {
        throw NotADivisor(std::to_string(d) + " does not divide " + std::to_string(p));
    }
}

void require_member(const Signal& f, const SubspaceLabel& label, double tol) {
    if (!is_member(f, label, tol)) {
        throw NotInSubspace("input is not in " + label.name + " (tolerance " +
                            std::to_string(tol) + ", relative)");
    }
}

double relative_tol(const Signal& f, double tol) { return tol * (1.0 + sup_norm(f)); }

// Splits f over the bins of its N-point DFT by the order of the unit-shift
// eigenvalue e^{2 pi i j / P}; returns one signal per requested order.
std::vector<Signal> components_by_order(const Signal& f, const std::vector<std::int64_t>& orders) {
    const std::int64_t period = integer_period(f.grid());
    const std::size_t n = f.size();
    if (n % static_cast<std::size_t>(period) != 0) {
        throw IncommensurateShift("unit shift is off-grid: N=" + std::to_string(n) +
                                  " is not a multiple of the period " + std::to_string(period));
    }
    for (std::int64_t k : orders) require_divides(k, period);

    detail::Dft dft(n);
    const auto spec = dft.forward(f.values());
    std::vector<Signal> out;
    out.reserve(orders.size());
    for (std::int64_t k : orders) {
        std::vector<std::complex<double>> kept(n, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            if (root_order(static_cast<std::int64_t>(j), period) == k) kept[j] = spec[j];
        }
        out.push_back(detail::real_inverse(dft, f.grid(), kept));
    }
    return out;
}

RationalProjection project_rational(const Signal& f, const ShiftPoly& base_num,
                                    const ShiftPoly& kernel_num, const ShiftPoly& den) {
    const CirculantOp op = CirculantOp::bind(den, f.grid());
    return {op.solve(apply_operator(base_num, f)), op.solve(apply_operator(kernel_num, f))};
}

ShiftPoly E(std::int64_t k) { return ShiftPoly::shift(Rational(k)); }

}  // namespace

SubspaceLabel periodic_label(std::int64_t d) {
    return {SubspaceKind::periodic, d, "P_" + std::to_string(d)};
}

SubspaceLabel antiperiodic_label(std::int64_t d) {
    return {SubspaceKind::antiperiodic, d, "AP_" + std::to_string(d)};
}

SubspaceLabel cyclotomic_label(std::int64_t k, std::int64_t p) {
    if (k < 1) throw InvalidParameter("cyclotomic index must be positive");
    if (k == 1) return periodic_label(1);
    if (is_power_of_two(k)) return antiperiodic_label(k / 2);
    std::string name = "C_" + std::to_string(k);
    if (p == 12) {
        if (k == 3) name = "S";
        if (k == 6) name = "T";
        if (k == 12) name = "U";
    }
    return {SubspaceKind::cyclotomic, k, name};
}

bool is_member(const Signal& f, const SubspaceLabel& label, double tol) {
    switch (label.kind) {
        case SubspaceKind::periodic:
            return periodicity_defect(f, Rational(label.param)) <= relative_tol(f, tol);
        case SubspaceKind::antiperiodic:
            return antiperiodicity_defect(f, Rational(label.param)) <= relative_tol(f, tol);
        case SubspaceKind::cyclotomic:
            return in_kernel(CyclotomicPoly::of(label.param).to_shift_poly(), f, tol);
    }
    return false;
}

ShiftPoly fold_operator(std::int64_t d, std::int64_t m) {
    if (d < 1 || m < 1) throw InvalidParameter("fold needs positive d and m");
    ShiftPoly op;
    for (std::int64_t i = 0; i < m; ++i) op = op + E(i * d);
    return op;
}

ShiftPoly alternating_fold_operator(std::int64_t d, std::int64_t m) {
    if (d < 1 || m < 1) throw InvalidParameter("fold needs positive d and m");
    ShiftPoly op;
    for (std::int64_t i = 0; i < m; ++i) op = op + ShiftPoly::shift(Rational(i * d), i % 2 == 0 ? 1.0 : -1.0);
    return op;
}

Signal fold(const Signal& f, std::int64_t d) { return fold(f, d, integer_period(f.grid())); }

Signal fold(const Signal& f, std::int64_t d, std::int64_t p) {
    require_divides(d, p);
    return apply_operator(fold_operator(d, p / d), f);
}

Signal normalized_fold(const Signal& f, std::int64_t d, std::int64_t p) {
    require_divides(d, p);
    return scale(1.0 / static_cast<double>(p / d), fold(f, d, p));
}

Signal fold_preimage(const Signal& f_d, std::int64_t d, std::int64_t p, double tol) {
    require_divides(d, p);
    require_member(f_d, periodic_label(d), tol);
    return scale(1.0 / static_cast<double>(p / d), f_d);
}

Signal fold_null_component(const Signal& g, std::int64_t d, std::int64_t p) {
    return combine(1.0, g, -1.0, normalized_fold(g, d, p));
}

Signal antifold(const Signal& f, std::int64_t d, std::int64_t p) {
    require_divides(d, p);
    const std::int64_t m = p / d;
    if (m % 2 == 0) {
        throw EvenQuotient("antifold needs an odd quotient p/d, got " + std::to_string(m));
    }
    return apply_operator(alternating_fold_operator(d, m), f);
}

Signal antifold_preimage(const Signal& f_d, std::int64_t d, std::int64_t p, double tol) {
    require_divides(d, p);
    const std::int64_t m = p / d;
    if (m % 2 == 0) {
        throw EvenQuotient("antifold needs an odd quotient p/d, got " + std::to_string(m));
    }
    require_member(f_d, antiperiodic_label(d), tol);
    return scale(1.0 / static_cast<double>(m), f_d);
}

RationalProjection project_P3(const Signal& f, double tol) {
    require_member(f, periodic_label(3), tol);
    const ShiftPoly I = ShiftPoly::identity();
    return project_rational(f, I + E(1) + E(2), I - E(1), 2.0 * I + E(2));
}

RationalProjection project_AP3(const Signal& f, double tol) {
    require_member(f, antiperiodic_label(3), tol);
    const ShiftPoly I = ShiftPoly::identity();
    return project_rational(f, E(2) - E(1) + I, I + E(1), 2.0 * I + E(2));
}

RationalProjection project_AP6(const Signal& f, double tol) {
    require_member(f, antiperiodic_label(6), tol);
    const ShiftPoly I = ShiftPoly::identity();
    return project_rational(f, E(4) - E(2) + I, I + E(2), 2.0 * I + E(4));
}

Signal cyclotomic_project(const Signal& f, std::int64_t k) {
    return components_by_order(f, {k}).front();
}

Decomposition::Decomposition(Signal source, std::int64_t period,
                             std::vector<DecompositionPart> parts)
    : source_(std::move(source)), period_(period), parts_(std::move(parts)) {}

const Signal& Decomposition::part(std::string_view name) const {
    for (const auto& p : parts_) {
        if (p.label.name == name) return p.signal;
    }
    throw InvalidParameter("decomposition has no part named " + std::string(name));
}

Signal Decomposition::sum() const {
    Signal total = Signal::zeros(source_.grid());
    for (const auto& p : parts_) total = combine(1.0, total, 1.0, p.signal);
    return total;
}

Decomposition cyclotomic_decompose(const Signal& f, std::int64_t p, double tol) {
    const std::int64_t grid_period = integer_period(f.grid());
    require_divides(p, grid_period);
    require_member(f, periodic_label(p), tol);
    const auto ks = divisors(p);
    auto signals = components_by_order(f, ks);
    std::vector<DecompositionPart> parts;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        parts.push_back({cyclotomic_label(ks[i], p), ks[i], std::move(signals[i])});
    }
    return Decomposition(f, p, std::move(parts));
}

std::vector<SubspaceForm> p6_forms(const Signal& f, double tol) {
    require_member(f, periodic_label(6), tol);
    std::vector<SubspaceForm> forms;
    for (std::int64_t d : {1, 2, 3}) {
        ShiftPoly op = fold_operator(d, 6 / d);
        forms.push_back({periodic_label(d), op, apply_operator(op, f)});
    }
    {
        ShiftPoly op = alternating_fold_operator(1, 6);
        forms.push_back({antiperiodic_label(1), op, apply_operator(op, f)});
    }
    {
        // f~_2 = (I - E^2 + E^4) g with g the 6-antiperiodic part of f.
        ShiftPoly op = alternating_fold_operator(2, 3) *
                       (0.5 * (ShiftPoly::identity() - E(6)));
        forms.push_back({antiperiodic_label(2), op, apply_operator(op, f)});
    }
    {
        ShiftPoly op = alternating_fold_operator(3, 2);
        forms.push_back({antiperiodic_label(3), op, apply_operator(op, f)});
    }
    return forms;
}

std::vector<SubspaceForm> p12_forms(const Signal& f, double tol) {
    require_member(f, periodic_label(12), tol);
    std::vector<SubspaceForm> forms;
    for (std::int64_t d : {1, 2, 3, 4, 6}) {
        ShiftPoly op = fold_operator(d, 12 / d);
        forms.push_back({periodic_label(d), op, apply_operator(op, f)});
    }
    for (std::int64_t d : {1, 2, 3, 6}) {
        ShiftPoly op = alternating_fold_operator(d, 12 / d);
        forms.push_back({antiperiodic_label(d), op, apply_operator(op, f)});
    }
    return forms;
}

}  // namespace perdecomp
