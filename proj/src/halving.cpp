#include "perdecomp/halving.hpp"

#include <algorithm>
#include <string>

#include "perdecomp/errors.hpp"

namespace perdecomp {

namespace {

// Splits h against the shift E^{half}: ((h + E h)/2, (h - E h)/2).
HalfSplit split_at(const Signal& h, const Rational& half) {
    Signal shifted = shift_signal(h, half);
    return {combine(0.5, h, 0.5, shifted), combine(0.5, h, -0.5, shifted)};
}

void require_levels(const Signal& f, int n) {
    if (n < 0) throw InvalidParameter("generation depth must be non-negative");
    if (n >= 63 || f.size() % (std::size_t{1} << n) != 0) {
        throw GridNotDivisible("2^" + std::to_string(n) + " does not divide N=" +
                               std::to_string(f.size()));
    }
}

Rational level_shift(const Rational& period, int level) {
    return period / Rational(std::int64_t{1} << level);
}

}  // namespace

HalfSplit split_half(const Signal& h) {
    if (h.size() % 2 != 0) {
        throw OddSampleCount("split needs an even sample count, got N=" + std::to_string(h.size()));
    }
    return split_at(h, level_shift(h.grid().period(), 1));
}

Signal periodic_generation(const Signal& f, int n) {
    require_levels(f, n);
    Signal current = f;
    for (int k = 1; k <= n; ++k) {
        current = split_at(current, level_shift(f.grid().period(), k)).periodic;
    }
    return current;
}

Signal antiperiodic_generation(const Signal& f, int n) {
    if (n < 1) throw InvalidParameter("antiperiodic generations start at n = 1");
    require_levels(f, n);
    Signal parent = periodic_generation(f, n - 1);
    return split_at(parent, level_shift(f.grid().period(), n)).antiperiodic;
}

ShiftPoly periodic_generation_operator(const Rational& period, int n) {
    ShiftPoly op = ShiftPoly::identity();
    for (int i = 1; i <= n; ++i) {
        op = op * (ShiftPoly::identity() + ShiftPoly::shift(level_shift(period, i)));
    }
    return (1.0 / static_cast<double>(std::int64_t{1} << n)) * op;
}

ShiftPoly antiperiodic_generation_operator(const Rational& period, int n) {
    if (n < 1) throw InvalidParameter("antiperiodic generations start at n = 1");
    ShiftPoly op = ShiftPoly::identity() - ShiftPoly::shift(level_shift(period, n));
    for (int i = 1; i < n; ++i) {
        op = op * (ShiftPoly::identity() + ShiftPoly::shift(level_shift(period, i)));
    }
    return (1.0 / static_cast<double>(std::int64_t{1} << n)) * op;
}

GenerationTable::GenerationTable(Signal source, std::vector<Signal> periodic,
                                 std::vector<Signal> antiperiodic, double product_deviation)
    : source_(std::move(source)),
      periodic_(std::move(periodic)),
      antiperiodic_(std::move(antiperiodic)),
      product_deviation_(product_deviation) {}

const Signal& GenerationTable::periodic(int k) const {
    if (k < 0 || k > depth()) throw InvalidParameter("generation index out of range");
    return k == 0 ? source_ : periodic_[static_cast<std::size_t>(k - 1)];
}

const Signal& GenerationTable::antiperiodic(int k) const {
    if (k < 1 || k > depth()) throw InvalidParameter("generation index out of range");
    return antiperiodic_[static_cast<std::size_t>(k - 1)];
}

Signal GenerationTable::reconstruct() const {
    Signal sum = periodic(depth());
    for (const Signal& term : antiperiodic_) sum = combine(1.0, sum, 1.0, term);
    return sum;
}

GenerationTable generation_table(const Signal& f, int n) {
    require_levels(f, n);
    const Rational& p = f.grid().period();
    std::vector<Signal> periodic;
    std::vector<Signal> antiperiodic;
    double deviation = 0.0;
    Signal current = f;
    for (int k = 1; k <= n; ++k) {
        HalfSplit s = split_at(current, level_shift(p, k));
        deviation = std::max(
            deviation,
            max_abs_diff(s.periodic, apply_operator(periodic_generation_operator(p, k), f)));
        deviation = std::max(
            deviation,
            max_abs_diff(s.antiperiodic,
                         apply_operator(antiperiodic_generation_operator(p, k), f)));
        current = s.periodic;
        periodic.push_back(std::move(s.periodic));
        antiperiodic.push_back(std::move(s.antiperiodic));
    }
    return GenerationTable(f, std::move(periodic), std::move(antiperiodic), deviation);
}

Signal SeriesReport::partial_sum(int levels, const Grid& grid) const {
    if (levels < 0 || levels > static_cast<int>(partial_terms.size())) {
        throw InvalidParameter("partial sum beyond the computed terms");
    }
    Signal sum = Signal::zeros(grid);
    for (int k = 0; k < levels; ++k) {
        sum = combine(1.0, sum, 1.0, partial_terms[static_cast<std::size_t>(k)]);
    }
    return sum;
}

SeriesReport antiperiodic_series(const Signal& f, double tol, int max_levels) {
    require_levels(f, max_levels);
    SeriesReport report;
    Signal current = f;
    report.residual_norms.push_back(sup_norm(current));
    report.converged = report.residual_norms.back() <= tol;
    for (int k = 1; k <= max_levels && !report.converged; ++k) {
        HalfSplit s = split_at(current, level_shift(f.grid().period(), k));
        report.partial_terms.push_back(std::move(s.antiperiodic));
        current = std::move(s.periodic);
        report.residual_norms.push_back(sup_norm(current));
        report.levels_used = k;
        report.converged = report.residual_norms.back() <= tol;
    }
    return report;
}

}  // namespace perdecomp
