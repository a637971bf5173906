#include "nlkg/lp.hpp"

#include <cmath>
#include <stdexcept>

namespace nlkg {

namespace {
inline double g(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }
}

double lp_bump(double eta) {
  const double a = std::fabs(eta);
  if (a <= 1.0) return 1.0;
  if (a >= 2.0) return 0.0;
  const double up = g(2.0 - a);
  return up / (up + g(a - 1.0));
}

double lp_band_bump(double eta) { return lp_bump(eta) - lp_bump(2.0 * eta); }

std::vector<double> lp_project_low(const SpatialGrid& grid, const std::vector<double>& f,
                                   double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lp_project_low: cutoff must be positive");
  return apply_multiplier_real(grid, f,
                               [lambda](double xi) { return cdouble(lp_bump(xi / lambda), 0.0); });
}

std::vector<double> lp_project_band(const SpatialGrid& grid, const std::vector<double>& f,
                                    int k) {
  const double scale = std::ldexp(1.0, k);  // 2^k exactly
  const double nyquist = M_PI / grid.spacing();
  if (2.0 * scale > nyquist)
    throw std::invalid_argument("lp_project_band: band reaches above the grid Nyquist");
  return apply_multiplier_real(grid, f, [scale](double xi) {
    return cdouble(lp_bump(xi / scale) - lp_bump(xi / (0.5 * scale)), 0.0);
  });
}

std::vector<double> lp_project_high(const SpatialGrid& grid, const std::vector<double>& f,
                                    double lambda) {
  std::vector<double> low = lp_project_low(grid, f, lambda);
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] - low[i];
  return out;
}

CoefficientB coefficient_B(double rho, const SpatialGrid& ygrid, const CoefficientProfile& c) {
  if (!(rho >= 1.0)) throw std::invalid_argument("coefficient_B: rho must be >= 1");
  CoefficientB out;
  out.value.resize(ygrid.n);
  out.drho.resize(ygrid.n);
  for (std::size_t i = 0; i < ygrid.n; ++i) {
    const double y = ygrid.x(i);
    const double ch = std::cosh(y), sh = std::sinh(y);
    out.value[i] = (c.beta0 + c.beta(rho * sh)) / ch;
    out.drho[i] = c.beta_prime(rho * sh) * sh / ch;
  }
  return out;
}

}  // namespace nlkg
