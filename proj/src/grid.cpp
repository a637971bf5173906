#include "nlkg/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace nlkg {

SpatialGrid::SpatialGrid(std::size_t n_, double length_) : n(n_), length(length_) {
  if (!is_power_of_two(n) || n < 16)
    throw std::invalid_argument("SpatialGrid: n must be a power of two with n >= 16");
  if (!(length > 0.0) || !std::isfinite(length))
    throw std::invalid_argument("SpatialGrid: length must be positive and finite");
}

namespace {
constexpr double kInvSqrt2Pi = 0.3989422804014326779399461;  // 1/sqrt(2pi)
constexpr double kSqrt2Pi = 2.5066282746310005024157653;     // sqrt(2pi)
}  // namespace

Spectrum forward_transform(const SpatialGrid& grid, const std::vector<double>& f) {
  if (f.size() != grid.n)
    throw std::invalid_argument("forward_transform: sample length does not match grid");
  Spectrum s;
  s.grid = grid;
  s.coeffs = fft_forward_real(f);
  const double scale = grid.spacing() * kInvSqrt2Pi;
  for (std::size_t k = 0; k < grid.n; ++k) {
    // e^{-i xi_j x0} with x0 = -L/2 is exactly (-1)^j.
    const long j = grid.mode_index(k);
    const double sign = (j & 1L) ? -1.0 : 1.0;
    s.coeffs[k] *= scale * sign;
  }
  return s;
}

std::vector<double> inverse_transform(const Spectrum& s) {
  const SpatialGrid& grid = s.grid;
  if (s.coeffs.size() != grid.n)
    throw std::invalid_argument("inverse_transform: coefficient length does not match grid");
  std::vector<cdouble> raw(grid.n);
  const double inv_scale = kSqrt2Pi / grid.spacing();
  for (std::size_t k = 0; k < grid.n; ++k) {
    const long j = grid.mode_index(k);
    const double sign = (j & 1L) ? -1.0 : 1.0;
    raw[k] = s.coeffs[k] * (inv_scale * sign);
  }
  fft(raw, +1);
  std::vector<double> out(grid.n);
  const double inv_n = 1.0 / static_cast<double>(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) out[i] = raw[i].real() * inv_n;
  return out;
}

Spectrum apply_multiplier(const Spectrum& s, const std::function<cdouble(double)>& m) {
  Spectrum out = s;
  for (std::size_t k = 0; k < s.grid.n; ++k) {
    const cdouble mv = m(s.grid.xi(k));
    if (!std::isfinite(mv.real()) || !std::isfinite(mv.imag()))
      throw std::domain_error("apply_multiplier: non-finite multiplier value");
    out.coeffs[k] *= mv;
  }
  return out;
}

std::vector<double> apply_multiplier_real(const SpatialGrid& grid,
                                          const std::vector<double>& f,
                                          const std::function<cdouble(double)>& m) {
  if (f.size() != grid.n)
    throw std::invalid_argument("apply_multiplier_real: sample length does not match grid");
  std::vector<cdouble> raw = fft_forward_real(f);
  for (std::size_t k = 0; k < grid.n; ++k) {
    cdouble mv = m(grid.xi(k));
    if (!std::isfinite(mv.real()) || !std::isfinite(mv.imag()))
      throw std::domain_error("apply_multiplier_real: non-finite multiplier value");
    if (2 * k == grid.n) mv = cdouble(mv.real(), 0.0);  // keep Nyquist conjugate-symmetric
    raw[k] *= mv;
  }
  std::vector<cdouble> tmp = raw;
  fft(tmp, +1);
  std::vector<double> out(grid.n);
  const double inv_n = 1.0 / static_cast<double>(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) out[i] = tmp[i].real() * inv_n;
  return out;
}

std::vector<double> spectral_derivative(const SpatialGrid& grid,
                                        const std::vector<double>& f, int p) {
  if (p == 0) return f;
  return apply_multiplier_real(grid, f, [p](double xi) {
    return std::pow(cdouble(0.0, xi), p);
  });
}

double integrate(const SpatialGrid& grid, const std::vector<double>& f) {
  double s = 0.0;
  for (double v : f) s += v;
  return s * grid.spacing();
}

double l2_norm(const SpatialGrid& grid, const std::vector<double>& f) {
  double s = 0.0;
  for (double v : f) s += v * v;
  return std::sqrt(s * grid.spacing());
}

double parseval_sum(const Spectrum& s) {
  double acc = 0.0;
  for (const cdouble& c : s.coeffs) acc += std::norm(c);
  return acc * 2.0 * M_PI / s.grid.length;
}

double sobolev_norm(const SpatialGrid& grid, const std::vector<double>& f, double s) {
  Spectrum sp = forward_transform(grid, f);
  double acc = 0.0;
  for (std::size_t k = 0; k < grid.n; ++k) {
    const double w = std::pow(1.0 + grid.xi(k) * grid.xi(k), s);
    acc += w * std::norm(sp.coeffs[k]);
  }
  return std::sqrt(acc * 2.0 * M_PI / grid.length);
}

PointEvaluator::PointEvaluator(const SpatialGrid& grid, const std::vector<double>& samples)
    : grid_(grid), raw_(fft_forward_real(samples)) {
  if (samples.size() != grid.n)
    throw std::invalid_argument("PointEvaluator: sample length does not match grid");
}

namespace {

// Shared phasor sweep over the signed modes j = -n/2+1 .. n/2-1 plus the
// Nyquist term handled as a pure cosine. raws[f][k] are unnormalized DFTs.
void eval_sums(const SpatialGrid& grid, const std::vector<const std::vector<cdouble>*>& raws,
               double xstar, const int* orders, int norders, double* out) {
  const std::size_t n = grid.n;
  const long half = static_cast<long>(n) / 2;
  const double d = xstar - grid.origin();
  const double dxi = 2.0 * M_PI / grid.length;
  const int nf = static_cast<int>(raws.size());

  std::vector<cdouble> acc(static_cast<std::size_t>(nf) * norders, cdouble(0.0, 0.0));

  cdouble z = std::exp(cdouble(0.0, static_cast<double>(-half + 1) * dxi * d));
  const cdouble zstep = std::exp(cdouble(0.0, dxi * d));
  for (long j = -half + 1; j < half; ++j) {
    if (((j + half) & 511L) == 0L)  // refresh phasor to stop roundoff drift
      z = std::exp(cdouble(0.0, static_cast<double>(j) * dxi * d));
    const std::size_t k = static_cast<std::size_t>(j >= 0 ? j : j + static_cast<long>(n));
    const double xi = dxi * static_cast<double>(j);
    for (int f = 0; f < nf; ++f) {
      const cdouble c = (*raws[f])[k] * z;
      for (int q = 0; q < norders; ++q) {
        cdouble term;
        switch (orders[q]) {
          case 0: term = c; break;
          case 1: term = cdouble(0.0, xi) * c; break;
          case 2: term = -xi * xi * c; break;
          case 3: term = cdouble(0.0, -xi * xi * xi) * c; break;
          default: throw std::invalid_argument("PointEvaluator: derivative order > 3");
        }
        acc[static_cast<std::size_t>(f) * norders + q] += term;
      }
    }
    z *= zstep;
  }

  const double xiN = dxi * static_cast<double>(half);
  const double cN = std::cos(xiN * d), sN = std::sin(xiN * d);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (int f = 0; f < nf; ++f) {
    const double FN = (*raws[f])[static_cast<std::size_t>(half)].real();
    for (int q = 0; q < norders; ++q) {
      double nyq = 0.0;
      switch (orders[q]) {
        case 0: nyq = FN * cN; break;
        case 1: nyq = -FN * xiN * sN; break;
        case 2: nyq = -FN * xiN * xiN * cN; break;
        case 3: nyq = FN * xiN * xiN * xiN * sN; break;
      }
      out[static_cast<std::size_t>(f) * norders + q] =
          (acc[static_cast<std::size_t>(f) * norders + q].real() + nyq) * inv_n;
    }
  }
}

}  // namespace

void PointEvaluator::eval(double xstar, const int* orders, double* out, int count) const {
  std::vector<const std::vector<cdouble>*> raws{&raw_};
  eval_sums(grid_, raws, xstar, orders, count, out);
}

double PointEvaluator::value(double xstar) const {
  int p = 0;
  double v;
  eval(xstar, &p, &v, 1);
  return v;
}

double PointEvaluator::derivative(double xstar, int p) const {
  double v;
  eval(xstar, &p, &v, 1);
  return v;
}

void MultiPointEvaluator::add_field(const std::vector<double>& samples) {
  if (samples.size() != grid_.n)
    throw std::invalid_argument("MultiPointEvaluator: sample length does not match grid");
  raws_.push_back(fft_forward_real(samples));
}

void MultiPointEvaluator::eval_all(double xstar, const int* orders, int norders,
                                   double* out) const {
  std::vector<const std::vector<cdouble>*> ptrs;
  ptrs.reserve(raws_.size());
  for (const auto& r : raws_) ptrs.push_back(&r);
  eval_sums(grid_, ptrs, xstar, orders, norders, out);
}

}  // namespace nlkg
