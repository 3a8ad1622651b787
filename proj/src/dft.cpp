#include "dft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "perdecomp/circulant.hpp"

namespace perdecomp::detail {

Dft::Dft(std::size_t n) : n_(n), roots_(n) {
    for (std::size_t m = 0; m < n; ++m) {
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
        roots_[m] = {std::cos(angle), std::sin(angle)};
    }
}

std::vector<std::complex<double>> Dft::forward(std::span<const double> x) const {
    std::vector<std::complex<double>> out(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        std::complex<double> acc = 0.0;
        for (std::size_t k = 0; k < n_; ++k) acc += x[k] * std::conj(roots_[(j * k) % n_]);
        out[j] = acc;
    }
    return out;
}

std::vector<std::complex<double>> Dft::inverse(std::span<const std::complex<double>> spec) const {
    std::vector<std::complex<double>> out(n_);
    const double inv_n = 1.0 / static_cast<double>(n_);
    for (std::size_t k = 0; k < n_; ++k) {
        std::complex<double> acc = 0.0;
        for (std::size_t j = 0; j < n_; ++j) acc += spec[j] * roots_[(j * k) % n_];
        out[k] = acc * inv_n;
    }
    return out;
}

Signal real_inverse(const Dft& dft, const Grid& grid, std::span<const std::complex<double>> spec) {
    auto values = dft.inverse(spec);
    std::vector<double> re(values.size());
    double sup_re = 0.0;
    double sup_im = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) {
        re[k] = values[k].real();
        sup_re = std::max(sup_re, std::abs(re[k]));
        sup_im = std::max(sup_im, std::abs(values[k].imag()));
    }
    if (sup_im > kImagResidueTol * (1.0 + sup_re)) {
        throw std::logic_error("inverse transform left an imaginary residue of " +
                               std::to_string(sup_im));
    }
    return Signal(grid, std::move(re));
}

}  // namespace perdecomp::detail
