#include "nlkg/fit.hpp"

#include <cmath>
#include <stdexcept>

namespace nlkg {

FitResult linear_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  if (n != ys.size()) throw std::invalid_argument("linear_fit: length mismatch");
  if (n < 2) throw std::invalid_argument("linear_fit: need at least 2 points");
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mx, dy = ys[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw std::invalid_argument("linear_fit: degenerate xs");
  FitResult r;
  r.slope = sxy / sxx;
  r.intercept = my - r.slope * mx;
  r.r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return r;
}

FitResult loglog_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() < 4) throw std::invalid_argument("loglog_fit: need at least 4 points");
  std::vector<double> lx(xs.size()), ly(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0))
      throw std::invalid_argument("loglog_fit: inputs must be strictly positive");
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
  }
  return linear_fit(lx, ly);
}

}  // namespace nlkg
