#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "perdecomp/rational.hpp"

namespace perdecomp {

/// Default absolute tolerance for sample-level comparisons.
inline constexpr double kDefaultTol = 1e-9;

/// Uniform sampling of one period [0, period) with n_samples points.
class Grid {
public:
    Grid(Rational period, std::size_t n_samples);

    const Rational& period() const noexcept { return period_; }
    std::size_t n_samples() const noexcept { return n_; }
    Rational step() const { return period_ / Rational(static_cast<std::int64_t>(n_)); }

    /// The abscissa j * step.
    Rational sample_point(std::size_t j) const;

    /// Number of samples a shift by h advances, after reducing h modulo the
    /// period. Throws IncommensurateShift when h mod period is off-grid.
    std::size_t shift_index(const Rational& h) const;

    /// True when a shift by h lands on the grid.
    bool accepts_shift(const Rational& h) const;

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    Rational period_;
    std::size_t n_;
};

/// One period of a function sampled on a Grid. Sample j stands for f(j * step);
/// indices outside [0, N) wrap around.
class Signal {
public:
    Signal(Grid grid, std::vector<double> values);

    static Signal zeros(const Grid& grid);

    const Grid& grid() const noexcept { return grid_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }

    double operator[](std::size_t j) const noexcept { return values_[j]; }
    double wrapped(std::int64_t j) const noexcept;

private:
    Grid grid_;
    std::vector<double> values_;
};

// ---------------------------------------------------------------------------
// Generators

/// x - floor(x), evaluated exactly on the rational sample points.
struct Sawtooth {};
/// amplitude * cos(2 pi frequency x)
struct Cosine {
    Rational frequency;
    double amplitude = 1.0;
};
/// amplitude * sin(2 pi frequency x)
struct Sine {
    Rational frequency;
    double amplitude = 1.0;
};
struct Constant {
    double value = 0.0;
};
/// Explicit samples; must have exactly n_samples entries.
struct SampleList {
    std::vector<double> values;
};

using Generator = std::variant<Sawtooth, Cosine, Sine, Constant, SampleList>;

Signal make_signal(const Grid& grid, const Generator& generator);

// ---------------------------------------------------------------------------
// Elementary operations

/// E^h f. Pure index rotation; no interpolation.
Signal shift_signal(const Signal& f, const Rational& h);

bool is_periodic_with(const Signal& f, const Rational& q, double tol = kDefaultTol);
bool is_antiperiodic_with(const Signal& f, const Rational& q, double tol = kDefaultTol);

/// Largest |f[j+k] -/+ f[j]| for the shift q; the quantity the predicates test.
double periodicity_defect(const Signal& f, const Rational& q);
double antiperiodicity_defect(const Signal& f, const Rational& q);

/// g(x) = f(omega x): same samples, period divided by omega.
Signal dilate(const Signal& f, const Rational& omega);

enum class PointwiseMap { identity, abs, square, cube, exp, negate };
enum class Parity { even, odd, neither };

Parity parity(PointwiseMap m) noexcept;
const char* to_string(PointwiseMap m) noexcept;
double apply_map(PointwiseMap m, double x) noexcept;

Signal map_pointwise(PointwiseMap m, const Signal& f);

double sup_norm(const Signal& f) noexcept;
double mean(const Signal& f) noexcept;

/// a*f + b*g; throws GridMismatch if the grids differ.
Signal combine(double a, const Signal& f, double b, const Signal& g);
Signal scale(double a, const Signal& f);

/// sup |f - g|; throws GridMismatch.
double max_abs_diff(const Signal& f, const Signal& g);

}  // namespace perdecomp
