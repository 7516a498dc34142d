#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ssrno/error.hpp"

namespace ssrno {

using DenseMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Cholesky factorization of a symmetric positive-definite matrix.
// Pivots at or below 1e-12 * max diagonal entry reject the matrix.
class SpdFactor {
 public:
  explicit SpdFactor(const Eigen::Ref<const Eigen::MatrixXd>& a);

  Eigen::MatrixXd solve(const Eigen::Ref<const Eigen::MatrixXd>& b) const;
  Eigen::Index dim() const { return lower_.rows(); }

 private:
  Eigen::MatrixXd lower_;
};

// Solves A X = B for symmetric positive-definite A via Cholesky; no explicit
// inverse is ever formed.
DenseMatrix solve_spd(const DenseMatrix& a, const DenseMatrix& b);

struct TensorDims {
  std::size_t batch = 1;
  std::size_t channels = 1;
  std::size_t height = 1;
  std::size_t width = 1;
  std::size_t bands = 1;

  std::size_t volume() const { return batch * channels * height * width * bands; }
  bool operator==(const TensorDims&) const = default;
};

// Dense real tensor [batch, channels, height, width, bands], bands fastest.
struct SpectralTensor {
  TensorDims dims;
  std::vector<double> data;

  static SpectralTensor zeros(const TensorDims& d) {
    return SpectralTensor{d, std::vector<double>(d.volume(), 0.0)};
  }

  std::size_t index(std::size_t b, std::size_t ch, std::size_t h, std::size_t w,
                    std::size_t c) const {
    return (((b * dims.channels + ch) * dims.height + h) * dims.width + w) *
               dims.bands + c;
  }
  double& at(std::size_t b, std::size_t ch, std::size_t h, std::size_t w,
             std::size_t c) {
    return data[index(b, ch, h, w, c)];
  }
  double at(std::size_t b, std::size_t ch, std::size_t h, std::size_t w,
            std::size_t c) const {
    return data[index(b, ch, h, w, c)];
  }
};

// Half-spectrum along the bands axis; dims.bands holds the mode count.
struct HalfSpectrum {
  TensorDims dims;
  std::vector<std::complex<double>> data;

  std::size_t modes() const { return dims.bands; }
};

inline std::size_t half_spectrum_modes(std::size_t bands) { return bands / 2 + 1; }

// Unnormalized forward and 1/C-normalized inverse DFT tables restricted to the
// first `modes` half-spectrum modes. Forward: x_hat = x_row * (fwd_re + i fwd_im).
// Inverse: x_row = re(x_hat) * inv_re + im(x_hat) * inv_im, where inv_* carry the
// Hermitian pair weights (2 on interior modes, 1 on DC and on the Nyquist mode
// for even lengths).
struct DftTables {
  std::size_t bands = 0;
  std::size_t modes = 0;
  Eigen::MatrixXd fwd_re, fwd_im;  // bands x modes
  Eigen::MatrixXd inv_re, inv_im;  // modes x bands
};

DftTables make_dft_tables(std::size_t bands, std::size_t modes);

// Forward real-input DFT along the bands axis; half-spectrum output.
HalfSpectrum rfft_bands(const SpectralTensor& x);

// Inverse of rfft_bands. `bands` disambiguates odd/even lengths.
SpectralTensor irfft_bands(const HalfSpectrum& xf, std::size_t bands);

// Nadaraya-Watson estimate with a Gaussian kernel.
std::vector<double> kernel_regress(std::span<const double> sample_wavelengths,
                                   std::span<const double> sample_values,
                                   std::span<const double> query,
                                   double bandwidth);

// Median spacing of a strictly increasing grid; default bandwidth choice.
double median_spacing(std::span<const double> grid);

// Central finite differences (f(x+h e_i) - f(x-h e_i)) / (2h).
std::vector<double> finite_diff_grad(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& theta, double step);

}  // namespace ssrno
