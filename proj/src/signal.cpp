#include "perdecomp/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "perdecomp/errors.hpp"

namespace perdecomp {

Grid::Grid(Rational period, std::size_t n_samples) : period_(period), n_(n_samples) {
    if (!period_.is_positive()) {
        throw InvalidParameter("grid period must be positive, got " + period_.str());
    }
    if (n_ == 0) throw InvalidParameter("grid needs at least one sample");
}

Rational Grid::sample_point(std::size_t j) const {
    return period_ * Rational(static_cast<std::int64_t>(j), static_cast<std::int64_t>(n_));
}

std::size_t Grid::shift_index(const Rational& h) const {
    Rational k = (h % period_) / step();
    if (!k.is_integer()) {
        throw IncommensurateShift("shift " + h.str() + " is not a multiple of the step " +
                                  step().str() + " modulo period " + period_.str());
    }
    return static_cast<std::size_t>(k.num());
}

bool Grid::accepts_shift(const Rational& h) const {
    return ((h % period_) / step()).is_integer();
}

Signal::Signal(Grid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_.n_samples()) {
        throw LengthMismatch("expected " + std::to_string(grid_.n_samples()) +
                             " samples, got " + std::to_string(values_.size()));
    }
}

Signal Signal::zeros(const Grid& grid) {
    return Signal(grid, std::vector<double>(grid.n_samples(), 0.0));
}

double Signal::wrapped(std::int64_t j) const noexcept {
    const auto n = static_cast<std::int64_t>(values_.size());
    std::int64_t r = j % n;
    if (r < 0) r += n;
    return values_[static_cast<std::size_t>(r)];
}

namespace {

// Evaluates amplitude * trig(2 pi frequency x) with the phase reduced exactly
// to [0, 1) before the single conversion to floating point.
template <class Fn>
std::vector<double> sample_trig(const Grid& grid, const Rational& frequency, double amplitude,
                                Fn fn) {
    std::vector<double> out(grid.n_samples());
    for (std::size_t j = 0; j < out.size(); ++j) {
        Rational phase = (frequency * grid.sample_point(j)) % Rational(1);
        out[j] = amplitude * fn(2.0 * std::numbers::pi * phase.to_double());
    }
    return out;
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw InvalidParameter(std::string(what) + " must be finite");
}

}  // namespace

Signal make_signal(const Grid& grid, const Generator& generator) {
    struct Visitor {
        const Grid& grid;

        std::vector<double> operator()(const Sawtooth&) const {
            std::vector<double> out(grid.n_samples());
            for (std::size_t j = 0; j < out.size(); ++j) {
                Rational x = grid.sample_point(j);
                out[j] = (x - Rational(x.floor())).to_double();
            }
            return out;
        }
        std::vector<double> operator()(const Cosine& c) const {
            require_finite(c.amplitude, "amplitude");
            return sample_trig(grid, c.frequency, c.amplitude, [](double t) { return std::cos(t); });
        }
        std::vector<double> operator()(const Sine& s) const {
            require_finite(s.amplitude, "amplitude");
            return sample_trig(grid, s.frequency, s.amplitude, [](double t) { return std::sin(t); });
        }
        std::vector<double> operator()(const Constant& c) const {
            require_finite(c.value, "constant value");
            return std::vector<double>(grid.n_samples(), c.value);
        }
        std::vector<double> operator()(const SampleList& list) const {
            if (list.values.size() != grid.n_samples()) {
                throw LengthMismatch("sample list has " + std::to_string(list.values.size()) +
                                     " entries, grid has " + std::to_string(grid.n_samples()));
            }
            for (double v : list.values) require_finite(v, "sample");
            return list.values;
        }
    };
    return Signal(grid, std::visit(Visitor{grid}, generator));
}

Signal shift_signal(const Signal& f, const Rational& h) {
    const std::size_t k = f.grid().shift_index(h);
    const std::size_t n = f.size();
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = f[(j + k) % n];
    return Signal(f.grid(), std::move(out));
}

namespace {

std::size_t checked_period_shift(const Signal& f, const Rational& q) {
    if (!q.is_positive()) throw InvalidParameter("period must be positive, got " + q.str());
    return f.grid().shift_index(q);
}

template <class Combine>
double defect(const Signal& f, std::size_t k, Combine combine) {
    const std::size_t n = f.size();
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        worst = std::max(worst, std::abs(combine(f[(j + k) % n], f[j])));
    }
    return worst;
}

}  // namespace

double periodicity_defect(const Signal& f, const Rational& q) {
    return defect(f, checked_period_shift(f, q), [](double a, double b) { return a - b; });
}

double antiperiodicity_defect(const Signal& f, const Rational& q) {
    return defect(f, checked_period_shift(f, q), [](double a, double b) { return a + b; });
}

bool is_periodic_with(const Signal& f, const Rational& q, double tol) {
    return periodicity_defect(f, q) <= tol;
}

bool is_antiperiodic_with(const Signal& f, const Rational& q, double tol) {
    return antiperiodicity_defect(f, q) <= tol;
}

Signal dilate(const Signal& f, const Rational& omega) {
    if (!omega.is_positive()) throw InvalidParameter("dilation factor must be positive");
    Grid g(f.grid().period() / omega, f.grid().n_samples());
    return Signal(g, std::vector<double>(f.values().begin(), f.values().end()));
}

Parity parity(PointwiseMap m) noexcept {
    switch (m) {
        case PointwiseMap::abs:
        case PointwiseMap::square: return Parity::even;
        case PointwiseMap::identity:
        case PointwiseMap::cube:
        case PointwiseMap::negate: return Parity::odd;
        case PointwiseMap::exp: return Parity::neither;
    }
    return Parity::neither;
}

const char* to_string(PointwiseMap m) noexcept {
    switch (m) {
        case PointwiseMap::identity: return "identity";
        case PointwiseMap::abs: return "abs";
        case PointwiseMap::square: return "square";
        case PointwiseMap::cube: return "cube";
        case PointwiseMap::exp: return "exp";
        case PointwiseMap::negate: return "negate";
    }
    return "?";
}

double apply_map(PointwiseMap m, double x) noexcept {
    switch (m) {
        case PointwiseMap::identity: return x;
        case PointwiseMap::abs: return std::abs(x);
        case PointwiseMap::square: return x * x;
        case PointwiseMap::cube: return x * x * x;
        case PointwiseMap::exp: return std::exp(x);
        case PointwiseMap::negate: return -x;
    }
    return x;
}

Signal map_pointwise(PointwiseMap m, const Signal& f) {
    std::vector<double> out(f.size());
    std::transform(f.values().begin(), f.values().end(), out.begin(),
                   [m](double x) { return apply_map(m, x); });
    return Signal(f.grid(), std::move(out));
}

double sup_norm(const Signal& f) noexcept {
    double s = 0.0;
    for (double v : f.values()) s = std::max(s, std::abs(v));
    return s;
}

double mean(const Signal& f) noexcept {
    double s = 0.0;
    for (double v : f.values()) s += v;
    return s / static_cast<double>(f.size());
}

namespace {

void require_same_grid(const Signal& f, const Signal& g) {
    if (!(f.grid() == g.grid())) {
        throw GridMismatch("grids differ: period " + f.grid().period().str() + " N=" +
                           std::to_string(f.size()) + " vs period " +
                           g.grid().period().str() + " N=" + std::to_string(g.size()));
    }
}

}  // namespace

Signal combine(double a, const Signal& f, double b, const Signal& g) {
    require_same_grid(f, g);
    std::vector<double> out(f.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = a * f[j] + b * g[j];
    return Signal(f.grid(), std::move(out));
}

Signal scale(double a, const Signal& f) {
    std::vector<double> out(f.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = a * f[j];
    return Signal(f.grid(), std::move(out));
}

double max_abs_diff(const Signal& f, const Signal& g) {
    require_same_grid(f, g);
    double d = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) d = std::max(d, std::abs(f[j] - g[j]));
    return d;
}

}  // namespace perdecomp
