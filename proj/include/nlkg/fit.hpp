// Least-squares fitting helpers for decay/growth exponent measurements.
#pragma once

#include <vector>

namespace nlkg {

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Plain linear least squares of ys against xs.
FitResult linear_fit(const std::vector<double>& xs, const std::vector<double>& ys);

/// Least squares on (log x, log y). Requires >= 4 strictly positive points
/// and non-degenerate xs.
FitResult loglog_fit(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace nlkg
