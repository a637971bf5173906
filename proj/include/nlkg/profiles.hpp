// Nonlinearity coefficient profiles and initial-data shape families.
#pragma once

#include <string>
#include <vector>

#include "nlkg/grid.hpp"

namespace nlkg {

enum class BetaFamily { zero, gaussian, sech2 };

/// Coefficients of the cubic nonlinearity beta0*u^3 + beta(x)*u^3, with beta
/// an even, rapidly decaying profile known in closed form.
struct CoefficientProfile {
  double beta0 = 0.0;
  BetaFamily family = BetaFamily::zero;
  double amp = 0.0;
  double width = 1.0;

  double beta(double x) const;
  double beta_prime(double x) const;
  double beta_second(double x) const;
  bool is_linear() const { return beta0 == 0.0 && (family == BetaFamily::zero || amp == 0.0); }
  bool has_variable_part() const { return family != BetaFamily::zero && amp != 0.0; }

  /// beta0 + beta(x) sampled on the grid.
  std::vector<double> total_on_grid(const SpatialGrid& grid) const;
  std::vector<double> beta_on_grid(const SpatialGrid& grid) const;
};

CoefficientProfile make_profile(double beta0, BetaFamily family, double amp, double width);

BetaFamily beta_family_from_string(const std::string& s);
std::string to_string(BetaFamily f);

enum class DataFamily { zero, gaussian, sech };

/// One component (f or g) of the initial data: amp * shape((x-center)/width).
struct DataShape {
  DataFamily family = DataFamily::zero;
  double amp = 0.0;
  double width = 1.0;
  double center = 0.0;

  double operator()(double x) const;
  std::vector<double> on_grid(const SpatialGrid& grid) const;
};

DataFamily data_family_from_string(const std::string& s);
std::string to_string(DataFamily f);

}  // namespace nlkg
