// Exact discrete linear Klein-Gordon flows and weighted-operator-norm
// measurements of the propagator local decay estimates.
#pragma once

#include <string>
#include <vector>

#include "nlkg/fit.hpp"
#include "nlkg/grid.hpp"

namespace nlkg {

enum class LinearFlowKind { half_plus, half_minus, cos_flow, sinc_flow };

/// Apply e^{+it<D>}, e^{-it<D>}, cos(t<D>) or sin(t<D>)/<D> to complex samples.
std::vector<cdouble> linear_flow(const SpatialGrid& grid, const std::vector<cdouble>& f,
                                 double t, LinearFlowKind kind);
/// Real-valued variant for the self-conjugate flows (cos_flow, sinc_flow).
std::vector<double> linear_flow_real(const SpatialGrid& grid, const std::vector<double>& f,
                                     double t, LinearFlowKind kind);

/// Exact one-shot free Klein-Gordon evolution of the pair (u, v = du/dt).
void linear_kg_evolve(const SpatialGrid& grid, std::vector<double>& u, std::vector<double>& v,
                      double t);

enum class DerivativeKind { none, dx_over_jap, dx };  // 1, dx/<D>, dx
enum class InputNorm { l2, h1 };

/// K = <x>^{-a} <D>^{-b} D e^{s*i*t<D>} <x>^{-a}, measured L2->L2; the H1
/// input norm is realized by right-composition with <D>^{-1}.
struct WeightedOperatorSpec {
  double a = 1.0;
  double b = 0.0;
  DerivativeKind derivative = DerivativeKind::none;
  InputNorm input_norm = InputNorm::l2;
  double t = 0.0;
  int sign = +1;  // e^{+it<D>} or e^{-it<D>}

  std::string label() const;
};

struct PowerIterationOptions {
  double tol = 1e-8;
  int max_iters = 10000;
  int min_iters = 30;
};

/// Largest singular value of the discretized kernel, matrix-free power
/// iteration on K*K from a fixed deterministic start vector.
/// Throws on non-convergence within max_iters.
double weighted_operator_norm(const WeightedOperatorSpec& spec, const SpatialGrid& grid,
                              const PowerIterationOptions& opts = {});

/// Apply K to a complex vector (exposed for the dense-oracle cross-check).
std::vector<cdouble> apply_weighted_operator(const WeightedOperatorSpec& spec,
                                             const SpatialGrid& grid,
                                             const std::vector<cdouble>& f);

/// Grid used for the norm sweeps: L = 32*sqrt(t_max) + 64 and n the smallest
/// power of two with spacing <= 1/16, capped at n_cap.
SpatialGrid decay_sweep_grid(double t_max, std::size_t n_cap = 4096);

struct DecayTable {
  std::vector<double> times;
  std::vector<double> norms;
  FitResult fit;
  WeightedOperatorSpec spec;
  SpatialGrid grid;
};

/// Norm sweep over the given times (increasing, >= 4 entries, no duplicates)
/// plus the log-log fit of the decay exponent.
DecayTable decay_table(const WeightedOperatorSpec& spec, const std::vector<double>& times,
                       const SpatialGrid& grid);

}  // namespace nlkg
