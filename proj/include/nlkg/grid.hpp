// Uniform periodic grids, unitary-convention spectra, Fourier multipliers,
// trigonometric point evaluation, and weighted Sobolev norms.
#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "nlkg/fft.hpp"

namespace nlkg {

/// Uniform periodic grid covering [-L/2, L/2) with n points (n a power of two,
/// n >= 16). Fourier wavenumbers are xi_j = 2*pi*j/L, j in [-n/2, n/2).
struct SpatialGrid {
  std::size_t n = 0;
  double length = 0.0;

  SpatialGrid() = default;
  SpatialGrid(std::size_t n_, double length_);

  double spacing() const { return length / static_cast<double>(n); }
  double origin() const { return -0.5 * length; }
  double x(std::size_t i) const { return origin() + spacing() * static_cast<double>(i); }

  /// Signed wavenumber index for FFT storage slot k.
  long mode_index(std::size_t k) const {
    const long half = static_cast<long>(n) / 2;
    const long kl = static_cast<long>(k);
    return kl < half ? kl : kl - static_cast<long>(n);
  }
  double xi(std::size_t k) const {
    return 2.0 * M_PI * static_cast<double>(mode_index(k)) / length;
  }

  bool operator==(const SpatialGrid& o) const { return n == o.n && length == o.length; }
};

/// Discrete spectrum in the unitary 1/sqrt(2pi) convention:
/// coeffs[k] ~ (1/sqrt(2pi)) \int e^{-i xi_k x} f(x) dx, stored in FFT order.
struct Spectrum {
  SpatialGrid grid;
  std::vector<cdouble> coeffs;
};

Spectrum forward_transform(const SpatialGrid& grid, const std::vector<double>& f);
std::vector<double> inverse_transform(const Spectrum& s);

/// Multiply coefficient k by m(xi_k). Throws on non-finite multiplier values.
Spectrum apply_multiplier(const Spectrum& s, const std::function<cdouble(double)>& m);

/// Convenience: real samples -> multiplier in frequency -> real samples.
/// The Nyquist slot uses Re(m) so that conjugate symmetry is preserved.
std::vector<double> apply_multiplier_real(const SpatialGrid& grid,
                                          const std::vector<double>& f,
                                          const std::function<cdouble(double)>& m);

/// Spectral d^p/dx^p of real samples (p >= 0).
std::vector<double> spectral_derivative(const SpatialGrid& grid,
                                        const std::vector<double>& f, int p);

/// Rectangle-rule integral of samples over the periodic box (= trapezoid).
double integrate(const SpatialGrid& grid, const std::vector<double>& f);
/// L2 norm via rectangle-rule quadrature.
double l2_norm(const SpatialGrid& grid, const std::vector<double>& f);
/// Parseval sum |coeffs|^2 * (2pi/L).
double parseval_sum(const Spectrum& s);

/// Sobolev H^s norm: (sum <xi>^{2s} |coeffs|^2 * 2pi/L)^{1/2}.
double sobolev_norm(const SpatialGrid& grid, const std::vector<double>& f, double s);

inline double jap(double x) { return std::sqrt(1.0 + x * x); }  // <x>

/// Trigonometric interpolation workhorse. Holds the raw DFT of real samples
/// and evaluates the interpolant and its spatial derivatives at arbitrary
/// points in O(n) with a single phasor sweep shared across derivative orders.
class PointEvaluator {
 public:
  PointEvaluator(const SpatialGrid& grid, const std::vector<double>& samples);

  /// Value of d^p/dx^p at xstar for each requested order p (p <= 3).
  void eval(double xstar, const int* orders, double* out, int count) const;
  double value(double xstar) const;
  double derivative(double xstar, int p) const;

  const SpatialGrid& grid() const { return grid_; }

 private:
  SpatialGrid grid_;
  std::vector<cdouble> raw_;  // unnormalized DFT of the samples
};

/// Evaluate several sample arrays (sharing one grid) at one point; the phasor
/// sweep is shared. fields[i] is a raw DFT as stored by PointEvaluator.
class MultiPointEvaluator {
 public:
  explicit MultiPointEvaluator(const SpatialGrid& grid) : grid_(grid) {}
  void add_field(const std::vector<double>& samples);
  std::size_t field_count() const { return raws_.size(); }
  /// out[f * norders + q] = d^{orders[q]}/dx^{orders[q]} of field f at xstar.
  void eval_all(double xstar, const int* orders, int norders, double* out) const;

 private:
  SpatialGrid grid_;
  std::vector<std::vector<cdouble>> raws_;
};

}  // namespace nlkg
