#include "perdecomp/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dft.hpp"
#include "perdecomp/errors.hpp"

namespace perdecomp {

std::vector<std::size_t> Spectrum::bins_below(double threshold) const {
    std::vector<std::size_t> bins;
    for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
        if (std::abs(eigenvalues[j]) < threshold) bins.push_back(j);
    }
    return bins;
}

CirculantOp::CirculantOp(Grid grid, ShiftPoly source, std::vector<double> coefficients)
    : grid_(std::move(grid)), source_(std::move(source)), coefficients_(std::move(coefficients)) {
    const std::size_t n = coefficients_.size();
    first_column_.assign(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) first_column_[(n - k) % n] += coefficients_[k];

    detail::Dft dft(n);
    spectrum_.eigenvalues.resize(n);
    spectrum_.min_abs = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
        std::complex<double> acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (coefficients_[k] != 0.0) acc += coefficients_[k] * dft.root(j * k);
        }
        spectrum_.eigenvalues[j] = acc;
        spectrum_.min_abs = std::min(spectrum_.min_abs, std::abs(acc));
        spectrum_.max_abs = std::max(spectrum_.max_abs, std::abs(acc));
    }
}

CirculantOp CirculantOp::bind(const ShiftPoly& op, const Grid& grid) {
    std::vector<double> coefficients(grid.n_samples(), 0.0);
    for (const auto& [h, c] : op.terms()) coefficients[grid.shift_index(h)] += c;
    return CirculantOp(grid, op, std::move(coefficients));
}

Signal CirculantOp::apply(const Signal& f) const {
    if (!(f.grid() == grid_)) throw GridMismatch("signal grid differs from the operator grid");
    const std::size_t n = coefficients_.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const double c = coefficients_[k];
        if (c == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) out[j] += c * f[(j + k) % n];
    }
    return Signal(grid_, std::move(out));
}

Signal CirculantOp::solve(const Signal& g, std::optional<double> sing_tol) const {
    if (!(g.grid() == grid_)) throw GridMismatch("right-hand side grid differs from the operator grid");
    const double threshold = sing_tol.value_or(kRelativeSingularTol * spectrum_.max_abs);
    if (spectrum_.max_abs == 0.0 || spectrum_.min_abs < threshold) {
        auto bins = spectrum_.max_abs == 0.0 ? spectrum_.bins_below(1.0)
                                             : spectrum_.bins_below(threshold);
        std::string list;
        for (std::size_t b : bins) list += (list.empty() ? "" : ",") + std::to_string(b);
        throw SingularOperator("operator " + source_.str() + " is singular at bins {" + list + "}",
                               std::move(bins));
    }
    detail::Dft dft(grid_.n_samples());
    auto spec = dft.forward(g.values());
    for (std::size_t j = 0; j < spec.size(); ++j) spec[j] /= spectrum_.eigenvalues[j];
    return detail::real_inverse(dft, grid_, spec);
}

Signal apply_rational(const ShiftPoly& num, const ShiftPoly& den, const Signal& f,
                      std::optional<double> sing_tol) {
    return CirculantOp::bind(den, f.grid()).solve(apply_operator(num, f), sing_tol);
}

bool in_kernel(const ShiftPoly& op, const Signal& f, double tol) {
    return sup_norm(apply_operator(op, f)) <= tol * (1.0 + sup_norm(f));
}

}  // namespace perdecomp
