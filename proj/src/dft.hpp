#pragma once

// Naive O(N^2) discrete Fourier transform. Twiddles are indexed by (j*n mod N)
// so each angle is produced from an exact integer ratio.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "perdecomp/signal.hpp"

namespace perdecomp::detail {

class Dft {
public:
    explicit Dft(std::size_t n);

    std::size_t size() const noexcept { return n_; }

    /// e^{2 pi i m / N}
    std::complex<double> root(std::size_t m) const noexcept { return roots_[m % n_]; }

    /// F[j] = sum_n x[n] e^{-2 pi i j n / N}
    std::vector<std::complex<double>> forward(std::span<const double> x) const;

    /// x[n] = (1/N) sum_j F[j] e^{2 pi i j n / N}
    std::vector<std::complex<double>> inverse(std::span<const std::complex<double>> spec) const;

private:
    std::size_t n_;
    std::vector<std::complex<double>> roots_;
};

/// Inverse transform of a spectrum that must be conjugate-symmetric; returns
/// the real part after checking the imaginary residue against
/// kImagResidueTol * (1 + sup |real|). Throws std::logic_error otherwise.
Signal real_inverse(const Dft& dft, const Grid& grid, std::span<const std::complex<double>> spec);

}  // namespace perdecomp::detail
