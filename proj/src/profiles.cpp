#include "nlkg/profiles.hpp"

#include <cmath>
#include <stdexcept>

namespace nlkg {

double CoefficientProfile::beta(double x) const {
  switch (family) {
    case BetaFamily::zero: return 0.0;
    case BetaFamily::gaussian: return amp * std::exp(-x * x / (width * width));
    case BetaFamily::sech2: {
      const double c = std::cosh(x / width);
      return amp / (c * c);
    }
  }
  return 0.0;
}

double CoefficientProfile::beta_prime(double x) const {
  switch (family) {
    case BetaFamily::zero: return 0.0;
    case BetaFamily::gaussian:
      return beta(x) * (-2.0 * x / (width * width));
    case BetaFamily::sech2:
      return beta(x) * (-2.0 / width) * std::tanh(x / width);
  }
  return 0.0;
}

double CoefficientProfile::beta_second(double x) const {
  switch (family) {
    case BetaFamily::zero: return 0.0;
    case BetaFamily::gaussian: {
      const double w2 = width * width;
      return beta(x) * (4.0 * x * x / (w2 * w2) - 2.0 / w2);
    }
    case BetaFamily::sech2: {
      const double th = std::tanh(x / width);
      const double sech2 = 1.0 - th * th;
      return beta(x) * (2.0 / (width * width)) * (2.0 * th * th - sech2);
    }
  }
  return 0.0;
}

std::vector<double> CoefficientProfile::total_on_grid(const SpatialGrid& grid) const {
  std::vector<double> out(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) out[i] = beta0 + beta(grid.x(i));
  return out;
}

std::vector<double> CoefficientProfile::beta_on_grid(const SpatialGrid& grid) const {
  std::vector<double> out(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) out[i] = beta(grid.x(i));
  return out;
}

CoefficientProfile make_profile(double beta0, BetaFamily family, double amp, double width) {
  if (!(width > 0.0)) throw std::invalid_argument("CoefficientProfile: width must be positive");
  CoefficientProfile c;
  c.beta0 = beta0;
  c.family = family;
  c.amp = amp;
  c.width = width;
  return c;
}

BetaFamily beta_family_from_string(const std::string& s) {
  if (s == "zero") return BetaFamily::zero;
  if (s == "gaussian") return BetaFamily::gaussian;
  if (s == "sech2") return BetaFamily::sech2;
  throw std::invalid_argument("unknown beta family: " + s);
}

std::string to_string(BetaFamily f) {
  switch (f) {
    case BetaFamily::zero: return "zero";
    case BetaFamily::gaussian: return "gaussian";
    case BetaFamily::sech2: return "sech2";
  }
  return "zero";
}

double DataShape::operator()(double x) const {
  const double z = (x - center) / width;
  switch (family) {
    case DataFamily::zero: return 0.0;
    case DataFamily::gaussian: return amp * std::exp(-z * z);
    case DataFamily::sech: return amp / std::cosh(z);
  }
  return 0.0;
}

std::vector<double> DataShape::on_grid(const SpatialGrid& grid) const {
  std::vector<double> out(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) out[i] = (*this)(grid.x(i));
  return out;
}

DataFamily data_family_from_string(const std::string& s) {
  if (s == "zero") return DataFamily::zero;
  if (s == "gaussian") return DataFamily::gaussian;
  if (s == "sech") return DataFamily::sech;
  throw std::invalid_argument("unknown data family: " + s);
}

std::string to_string(DataFamily f) {
  switch (f) {
    case DataFamily::zero: return "zero";
    case DataFamily::gaussian: return "gaussian";
    case DataFamily::sech: return "sech";
  }
  return "zero";
}

}  // namespace nlkg
