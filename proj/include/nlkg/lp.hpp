// Littlewood-Paley projections with a concrete C^infinity bump, plus the
// hyperbolic-coordinates nonlinearity coefficient B(rho, y).
#pragma once

#include <vector>

#include "nlkg/grid.hpp"
#include "nlkg/profiles.hpp"

namespace nlkg {

/// Smooth even bump: 1 on |eta| <= 1, 0 on |eta| >= 2, monotone in between,
/// built from g(s) = exp(-1/s).
double lp_bump(double eta);
/// psi(eta) = phi(eta) - phi(2 eta), supported on 1/2 <= |eta| <= 2.
double lp_band_bump(double eta);

/// P_{<=lambda} f on the grid (smooth low-pass at the exact real cutoff).
std::vector<double> lp_project_low(const SpatialGrid& grid, const std::vector<double>& f,
                                   double lambda);

/// Dyadic band projection P_k f. The band multiplier is evaluated as
/// phi(xi/2^k) - phi(xi/2^{k-1}) so that telescoping sums cancel termwise.
/// Throws if the band reaches above the grid Nyquist frequency.
std::vector<double> lp_project_band(const SpatialGrid& grid, const std::vector<double>& f,
                                    int k);

/// High-pass complement P_{>lambda} f = f - P_{<=lambda} f.
std::vector<double> lp_project_high(const SpatialGrid& grid, const std::vector<double>& f,
                                    double lambda);

/// Samples of B(rho, y) = beta0/cosh(y) + beta(rho*sinh(y))/cosh(y) on a
/// y-grid, together with the analytic d/drho samples.
struct CoefficientB {
  std::vector<double> value;
  std::vector<double> drho;
};
CoefficientB coefficient_B(double rho, const SpatialGrid& ygrid, const CoefficientProfile& c);

}  // namespace nlkg
