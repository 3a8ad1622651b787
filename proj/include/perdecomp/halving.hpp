#pragma once

#include <cstddef>
#include <vector>

#include "perdecomp/shift_poly.hpp"
#include "perdecomp/signal.hpp"

namespace perdecomp {

/// h = periodic + antiperiodic, with periodic of period p/2 and antiperiodic
/// of antiperiod p/2 (p the grid period).
struct HalfSplit {
    Signal periodic;
    Signal antiperiodic;
};

/// f = (h + E^{p/2} h)/2,  g = (h - E^{p/2} h)/2. Throws OddSampleCount.
HalfSplit split_half(const Signal& h);

/// n-th periodic generation f_n (period p/2^n) by iterated halving.
/// n = 0 returns f. Throws GridNotDivisible unless 2^n divides N.
Signal periodic_generation(const Signal& f, int n);

/// n-th antiperiodic generation (antiperiod p/2^n), n >= 1.
Signal antiperiodic_generation(const Signal& f, int n);

/// The same generations evaluated as a single operator product,
///   f_n  = 2^{-n} prod_{i=1..n} (I + E^{p/2^i}) f
///   f~_n = 2^{-n} (I - E^{p/2^n}) prod_{i=1..n-1} (I + E^{p/2^i}) f.
/// Used to cross-check the iterated route.
ShiftPoly periodic_generation_operator(const Rational& period, int n);
ShiftPoly antiperiodic_generation_operator(const Rational& period, int n);

class GenerationTable {
public:
    GenerationTable(Signal source, std::vector<Signal> periodic, std::vector<Signal> antiperiodic,
                    double product_deviation);

    const Signal& source() const noexcept { return source_; }
    int depth() const noexcept { return static_cast<int>(periodic_.size()); }

    /// f_k for 0 <= k <= depth (f_0 is the source).
    const Signal& periodic(int k) const;
    /// f~_k for 1 <= k <= depth.
    const Signal& antiperiodic(int k) const;

    /// f_n + sum_{k=1..n} f~_k; reproduces the source.
    Signal reconstruct() const;

    /// Largest sup-norm gap between the iterated generations and the
    /// operator-product generations.
    double product_deviation() const noexcept { return product_deviation_; }

private:
    Signal source_;
    std::vector<Signal> periodic_;
    std::vector<Signal> antiperiodic_;
    double product_deviation_;
};

GenerationTable generation_table(const Signal& f, int n);

struct SeriesReport {
    /// f~_1, f~_2, ..., one per level used.
    std::vector<Signal> partial_terms;
    /// residual_norms[k] = sup |f_k|, k = 0..levels_used.
    std::vector<double> residual_norms;
    bool converged = false;
    int levels_used = 0;

    /// sum_{k=1..levels} f~_k over the source grid.
    Signal partial_sum(int levels, const Grid& grid) const;
};

/// Expands f as a series of antiperiodic generations, stopping at the first
/// level whose periodic remainder has sup norm <= tol, or at max_levels.
/// Non-convergence is reported, not thrown.
SeriesReport antiperiodic_series(const Signal& f, double tol, int max_levels);

}  // namespace perdecomp
