#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "perdecomp/shift_poly.hpp"
#include "perdecomp/signal.hpp"

namespace perdecomp {

/// Relative singularity threshold: a bin is singular when its eigenvalue
/// magnitude is below this times the largest magnitude.
inline constexpr double kRelativeSingularTol = 1e-9;
/// Imaginary residue after an inverse transform that is silently dropped.
inline constexpr double kImagResidueTol = 1e-10;

struct Spectrum {
    std::vector<std::complex<double>> eigenvalues;
    double min_abs = 0.0;
    double max_abs = 0.0;

    /// Bins with |eigenvalue| < threshold.
    std::vector<std::size_t> bins_below(double threshold) const;
};

/// A shift polynomial bound to a grid: the circulant matrix
///   (A f)[n] = sum_k a[k] f[(n + k) mod N]
/// with a[k] the summed coefficients of every shift landing on k samples.
/// Bin j of the DFT is an eigenvector with eigenvalue sum_k a[k] e^{2 pi i j k / N}.
class CirculantOp {
public:
    /// Throws IncommensurateShift when a shift of op is off-grid.
    static CirculantOp bind(const ShiftPoly& op, const Grid& grid);

    const Grid& grid() const noexcept { return grid_; }
    const ShiftPoly& source() const noexcept { return source_; }
    /// a[k], k = 0..N-1.
    const std::vector<double>& coefficients() const noexcept { return coefficients_; }
    /// Image of the unit impulse at sample 0.
    const std::vector<double>& first_column() const noexcept { return first_column_; }
    const Spectrum& spectrum() const noexcept { return spectrum_; }

    Signal apply(const Signal& f) const;

    /// Solves A y = g by dividing DFT bins. sing_tol defaults to
    /// kRelativeSingularTol * max |eigenvalue|. Throws SingularOperator
    /// (with the offending bins) or GridMismatch.
    Signal solve(const Signal& g, std::optional<double> sing_tol = std::nullopt) const;

private:
    CirculantOp(Grid grid, ShiftPoly source, std::vector<double> coefficients);

    Grid grid_;
    ShiftPoly source_;
    std::vector<double> coefficients_;
    std::vector<double> first_column_;
    Spectrum spectrum_;
};

/// den^{-1} num f, the meaning of the fraction num/den acting on f.
Signal apply_rational(const ShiftPoly& num, const ShiftPoly& den, const Signal& f,
                      std::optional<double> sing_tol = std::nullopt);

/// sup |op f| <= tol * (1 + sup |f|).
bool in_kernel(const ShiftPoly& op, const Signal& f, double tol = kDefaultTol);

}  // namespace perdecomp
