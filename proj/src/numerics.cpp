#include "ssrno/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ssrno {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::not_positive_definite: return "NotPositiveDefinite";
    case ErrorCode::shape_mismatch: return "ShapeMismatch";
    case ErrorCode::empty_samples: return "EmptySamples";
    case ErrorCode::non_finite_value: return "NonFiniteValue";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::negative_sensitivity: return "NegativeSensitivity";
    case ErrorCode::degenerate_band: return "DegenerateBand";
    case ErrorCode::rank_deficient: return "RankDeficient";
    case ErrorCode::grid_mismatch: return "GridMismatch";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::invalid_transmittance: return "InvalidTransmittance";
    case ErrorCode::empty_spectrum: return "EmptySpectrum";
    case ErrorCode::feasibility_violation: return "FeasibilityViolation";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::io_error: return "IoError";
    case ErrorCode::format_error: return "FormatError";
    case ErrorCode::truncated_payload: return "TruncatedPayload";
    case ErrorCode::patch_too_large: return "PatchTooLarge";
    case ErrorCode::non_finite_loss: return "NonFiniteLoss";
  }
  return "Error";
}

SpdFactor::SpdFactor(const Eigen::Ref<const Eigen::MatrixXd>& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) raise(ErrorCode::shape_mismatch, "solve_spd: A must be square");
  const double sym_scale = a.cwiseAbs().maxCoeff();
  if (!std::isfinite(sym_scale))
    raise(ErrorCode::non_finite_value, "solve_spd: A has non-finite entries");
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, sym_scale))
    raise(ErrorCode::invalid_argument, "solve_spd: A is not symmetric");

  const double pivot_tol = 1e-12 * a.diagonal().maxCoeff();
  lower_ = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double d = a(j, j) - lower_.row(j).head(j).squaredNorm();
    if (!(d > pivot_tol))
      raise(ErrorCode::not_positive_definite,
            "solve_spd: pivot " + std::to_string(j) + " at rank tolerance");
    d = std::sqrt(d);
    lower_(j, j) = d;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      lower_(i, j) =
          (a(i, j) - lower_.row(i).head(j).dot(lower_.row(j).head(j))) / d;
    }
  }
}

Eigen::MatrixXd SpdFactor::solve(const Eigen::Ref<const Eigen::MatrixXd>& b) const {
  if (b.rows() != lower_.rows())
    raise(ErrorCode::shape_mismatch, "solve_spd: A.rows must equal B.rows");
  Eigen::MatrixXd y =
      lower_.triangularView<Eigen::Lower>().solve(b);
  return lower_.transpose().triangularView<Eigen::Upper>().solve(y);
}

DenseMatrix solve_spd(const DenseMatrix& a, const DenseMatrix& b) {
  SpdFactor factor(a);
  return factor.solve(b);
}

DftTables make_dft_tables(std::size_t bands, std::size_t modes) {
  if (bands < 1) raise(ErrorCode::invalid_argument, "dft: bands must be >= 1");
  const std::size_t max_modes = half_spectrum_modes(bands);
  if (modes < 1 || modes > max_modes)
    raise(ErrorCode::invalid_argument, "dft: invalid mode count");

  DftTables t;
  t.bands = bands;
  t.modes = modes;
  t.fwd_re.resize(bands, modes);
  t.fwd_im.resize(bands, modes);
  t.inv_re.resize(modes, bands);
  t.inv_im.resize(modes, bands);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(bands);
  for (std::size_t k = 0; k < modes; ++k) {
    // Hermitian pair weight: DC once, Nyquist once (even lengths), else twice.
    double w = 2.0;
    if (k == 0 || (bands % 2 == 0 && k == bands / 2)) w = 1.0;
    for (std::size_t c = 0; c < bands; ++c) {
      const double angle = step * static_cast<double>(k) * static_cast<double>(c);
      t.fwd_re(c, k) = std::cos(angle);
      t.fwd_im(c, k) = -std::sin(angle);
      t.inv_re(k, c) = w * std::cos(angle) / static_cast<double>(bands);
      t.inv_im(k, c) = -w * std::sin(angle) / static_cast<double>(bands);
    }
  }
  return t;
}

HalfSpectrum rfft_bands(const SpectralTensor& x) {
  if (x.dims.bands < 1) raise(ErrorCode::invalid_argument, "rfft_bands: bands >= 1");
  if (x.data.size() != x.dims.volume())
    raise(ErrorCode::shape_mismatch, "rfft_bands: data length mismatch");
  const std::size_t bands = x.dims.bands;
  const std::size_t modes = half_spectrum_modes(bands);
  const std::size_t rows = x.dims.volume() / bands;

  const DftTables t = make_dft_tables(bands, modes);
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      in(x.data.data(), rows, bands);
  Eigen::MatrixXd re = in * t.fwd_re;
  Eigen::MatrixXd im = in * t.fwd_im;

  HalfSpectrum out;
  out.dims = x.dims;
  out.dims.bands = modes;
  out.data.resize(rows * modes);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t k = 0; k < modes; ++k)
      out.data[r * modes + k] = {re(r, k), im(r, k)};
  return out;
}

SpectralTensor irfft_bands(const HalfSpectrum& xf, std::size_t bands) {
  if (xf.modes() != half_spectrum_modes(bands))
    raise(ErrorCode::shape_mismatch,
          "irfft_bands: modes must equal floor(bands/2)+1");
  if (xf.data.size() != xf.dims.volume())
    raise(ErrorCode::shape_mismatch, "irfft_bands: data length mismatch");
  const std::size_t modes = xf.modes();
  const std::size_t rows = xf.dims.volume() / modes;

  const DftTables t = make_dft_tables(bands, modes);
  Eigen::MatrixXd re(rows, modes), im(rows, modes);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t k = 0; k < modes; ++k) {
      re(r, k) = xf.data[r * modes + k].real();
      im(r, k) = xf.data[r * modes + k].imag();
    }

  SpectralTensor out;
  out.dims = xf.dims;
  out.dims.bands = bands;
  out.data.resize(rows * bands);
  Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                           Eigen::RowMajor>>
      dst(out.data.data(), rows, bands);
  dst = re * t.inv_re + im * t.inv_im;
  return out;
}

std::vector<double> kernel_regress(std::span<const double> sample_wavelengths,
                                   std::span<const double> sample_values,
                                   std::span<const double> query,
                                   double bandwidth) {
  if (sample_wavelengths.empty())
    raise(ErrorCode::empty_samples, "kernel_regress: no samples");
  if (sample_wavelengths.size() != sample_values.size())
    raise(ErrorCode::shape_mismatch, "kernel_regress: sample arrays differ");
  if (!(bandwidth > 0.0))
    raise(ErrorCode::invalid_argument, "kernel_regress: bandwidth must be > 0");

  const std::size_t n = sample_wavelengths.size();
  std::vector<double> out(query.size());
  const double inv_two_h2 = 1.0 / (2.0 * bandwidth * bandwidth);
  std::vector<double> d2(n);
  for (std::size_t q = 0; q < query.size(); ++q) {
    double d2_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const double d = query[q] - sample_wavelengths[i];
      d2[i] = d * d;
      d2_min = std::min(d2_min, d2[i]);
    }
    // Shift by the minimum squared distance so the largest weight is exactly 1;
    // the h -> 0 limit then degrades to nearest-sample lookup instead of 0/0.
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double w = std::exp(-(d2[i] - d2_min) * inv_two_h2);
      num += w * sample_values[i];
      den += w;
    }
    out[q] = num / den;
  }
  return out;
}

double median_spacing(std::span<const double> grid) {
  if (grid.size() < 2)
    raise(ErrorCode::invalid_argument, "median_spacing: need >= 2 points");
  std::vector<double> gaps(grid.size() - 1);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) gaps[i] = grid[i + 1] - grid[i];
  std::sort(gaps.begin(), gaps.end());
  const std::size_t m = gaps.size() / 2;
  return gaps.size() % 2 == 1 ? gaps[m] : 0.5 * (gaps[m - 1] + gaps[m]);
}

std::vector<double> finite_diff_grad(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& theta, double step) {
  if (!(step > 0.0))
    raise(ErrorCode::invalid_argument, "finite_diff_grad: step must be > 0");
  std::vector<double> grad(theta.size());
  std::vector<double> point = theta;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    point[i] = theta[i] + step;
    const double fp = f(point);
    point[i] = theta[i] - step;
    const double fm = f(point);
    point[i] = theta[i];
    if (!std::isfinite(fp) || !std::isfinite(fm))
      raise(ErrorCode::non_finite_value, "finite_diff_grad: f returned non-finite");
    grad[i] = (fp - fm) / (2.0 * step);
  }
  return grad;
}

}  // namespace ssrno
