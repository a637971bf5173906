#include "nlkg/propagator.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nlkg {

namespace {

inline cdouble flow_multiplier(double xi, double t, LinearFlowKind kind) {
  const double om = jap(xi);
  switch (kind) {
    case LinearFlowKind::half_plus: return std::exp(cdouble(0.0, t * om));
    case LinearFlowKind::half_minus: return std::exp(cdouble(0.0, -t * om));
    case LinearFlowKind::cos_flow: return cdouble(std::cos(t * om), 0.0);
    case LinearFlowKind::sinc_flow: return cdouble(std::sin(t * om) / om, 0.0);
  }
  return cdouble(0.0, 0.0);
}

}  // namespace

std::vector<cdouble> linear_flow(const SpatialGrid& grid, const std::vector<cdouble>& f,
                                 double t, LinearFlowKind kind) {
  if (!std::isfinite(t)) throw std::invalid_argument("linear_flow: t must be finite");
  if (f.size() != grid.n) throw std::invalid_argument("linear_flow: length mismatch");
  std::vector<cdouble> data = f;
  fft(data, -1);
  for (std::size_t k = 0; k < grid.n; ++k) data[k] *= flow_multiplier(grid.xi(k), t, kind);
  fft(data, +1);
  const double inv_n = 1.0 / static_cast<double>(grid.n);
  for (auto& c : data) c *= inv_n;
  return data;
}

std::vector<double> linear_flow_real(const SpatialGrid& grid, const std::vector<double>& f,
                                     double t, LinearFlowKind kind) {
  if (kind != LinearFlowKind::cos_flow && kind != LinearFlowKind::sinc_flow)
    throw std::invalid_argument("linear_flow_real: flow must be cos_flow or sinc_flow");
  if (!std::isfinite(t)) throw std::invalid_argument("linear_flow_real: t must be finite");
  return apply_multiplier_real(grid, f,
                               [&](double xi) { return flow_multiplier(xi, t, kind); });
}

void linear_kg_evolve(const SpatialGrid& grid, std::vector<double>& u, std::vector<double>& v,
                      double t) {
  std::vector<cdouble> uh = fft_forward_real(u);
  std::vector<cdouble> vh = fft_forward_real(v);
  for (std::size_t k = 0; k < grid.n; ++k) {
    const double om = jap(grid.xi(k));
    const double c = std::cos(t * om), s = std::sin(t * om);
    const cdouble u0 = uh[k], v0 = vh[k];
    uh[k] = c * u0 + (s / om) * v0;
    vh[k] = -om * s * u0 + c * v0;
  }
  fft(uh, +1);
  fft(vh, +1);
  const double inv_n = 1.0 / static_cast<double>(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) {
    u[i] = uh[i].real() * inv_n;
    v[i] = vh[i].real() * inv_n;
  }
}

std::string WeightedOperatorSpec::label() const {
  std::ostringstream os;
  switch (derivative) {
    case DerivativeKind::none: os << "plain"; break;
    case DerivativeKind::dx_over_jap: os << "dx_over_jap"; break;
    case DerivativeKind::dx: os << "dx"; break;
  }
  os << "_a" << a << "_b" << b << (input_norm == InputNorm::h1 ? "_H1" : "_L2");
  return os.str();
}

namespace {

struct OperatorChain {
  const SpatialGrid& grid;
  const WeightedOperatorSpec& spec;
  std::vector<double> weight;       // <x>^{-a}
  std::vector<cdouble> multiplier;  // frequency factor of the middle stage

  OperatorChain(const SpatialGrid& g, const WeightedOperatorSpec& s) : grid(g), spec(s) {
    weight.resize(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i)
      weight[i] = std::pow(jap(grid.x(i)), -spec.a);
    multiplier.resize(grid.n);
    for (std::size_t k = 0; k < grid.n; ++k) {
      const double xi = grid.xi(k);
      const double om = jap(xi);
      cdouble m = std::exp(cdouble(0.0, spec.sign >= 0 ? spec.t * om : -spec.t * om));
      m *= std::pow(om, -spec.b);
      switch (spec.derivative) {
        case DerivativeKind::none: break;
        case DerivativeKind::dx_over_jap: m *= cdouble(0.0, xi / om); break;
        case DerivativeKind::dx: m *= cdouble(0.0, xi); break;
      }
      if (spec.input_norm == InputNorm::h1) m /= om;
      multiplier[k] = m;
    }
  }

  void mult_weight(std::vector<cdouble>& z) const {
    for (std::size_t i = 0; i < grid.n; ++i) z[i] *= weight[i];
  }

  void mult_freq(std::vector<cdouble>& z, bool conj) const {
    fft(z, -1);
    if (conj)
      for (std::size_t k = 0; k < grid.n; ++k) z[k] *= std::conj(multiplier[k]);
    else
      for (std::size_t k = 0; k < grid.n; ++k) z[k] *= multiplier[k];
    fft(z, +1);
    const double inv_n = 1.0 / static_cast<double>(grid.n);
    for (auto& c : z) c *= inv_n;
  }

  void apply(std::vector<cdouble>& z) const {  // K
    mult_weight(z);
    mult_freq(z, false);
    mult_weight(z);
  }
  void apply_adjoint(std::vector<cdouble>& z) const {  // K*
    mult_weight(z);
    mult_freq(z, true);
    mult_weight(z);
  }
};

double norm2(const std::vector<cdouble>& z) {
  double s = 0.0;
  for (const auto& c : z) s += std::norm(c);
  return std::sqrt(s);
}

}  // namespace

std::vector<cdouble> apply_weighted_operator(const WeightedOperatorSpec& spec,
                                             const SpatialGrid& grid,
                                             const std::vector<cdouble>& f) {
  OperatorChain chain(grid, spec);
  std::vector<cdouble> z = f;
  chain.apply(z);
  return z;
}

double weighted_operator_norm(const WeightedOperatorSpec& spec, const SpatialGrid& grid,
                              const PowerIterationOptions& opts) {
  if (spec.derivative == DerivativeKind::none && spec.a < 1.0)
    throw std::invalid_argument("weighted_operator_norm: a >= 1 required for the plain kernel");
  OperatorChain chain(grid, spec);

  // Fixed deterministic start: normalized all-ones vector.
  std::vector<cdouble> z(grid.n, cdouble(1.0, 0.0));
  const double z0n = norm2(z);
  for (auto& c : z) c /= z0n;

  double lambda_prev = -1.0;
  int stable = 0;
  for (int it = 0; it < opts.max_iters; ++it) {
    std::vector<cdouble> w = z;
    chain.apply(w);
    chain.apply_adjoint(w);  // w = K*K z
    const double lambda = norm2(w);
    if (lambda == 0.0) return 0.0;  // K annihilates the iterate; zero operator in practice
    for (std::size_t i = 0; i < grid.n; ++i) z[i] = w[i] / lambda;
    if (it + 1 >= opts.min_iters && lambda_prev > 0.0 &&
        std::fabs(lambda - lambda_prev) <= opts.tol * lambda) {
      if (++stable >= 3) return std::sqrt(lambda);
    } else {
      stable = 0;
    }
    lambda_prev = lambda;
  }
  throw std::runtime_error("weighted_operator_norm: power iteration did not converge (" +
                           spec.label() + ", t=" + std::to_string(spec.t) + ")");
}

SpatialGrid decay_sweep_grid(double t_max, std::size_t n_cap) {
  const double L = 32.0 * std::sqrt(t_max) + 64.0;
  std::size_t n = 16;
  while (static_cast<double>(n) < 16.0 * L && n < n_cap) n *= 2;
  return SpatialGrid(n, L);
}

DecayTable decay_table(const WeightedOperatorSpec& spec, const std::vector<double>& times,
                       const SpatialGrid& grid) {
  if (times.size() < 4) throw std::invalid_argument("decay_table: need at least 4 times");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (times[i] == times[i - 1]) throw std::invalid_argument("decay_table: duplicate times");
    if (times[i] < times[i - 1]) throw std::invalid_argument("decay_table: times must increase");
  }
  DecayTable table;
  table.spec = spec;
  table.grid = grid;
  table.times = times;
  table.norms.reserve(times.size());
  for (double t : times) {
    WeightedOperatorSpec s = spec;
    s.t = t;
    table.norms.push_back(weighted_operator_norm(s, grid));
  }
  table.fit = loglog_fit(table.times, table.norms);
  return table;
}

}  // namespace nlkg
