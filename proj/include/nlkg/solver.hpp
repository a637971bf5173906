// Strang-split time integration of (d_tt - d_xx + 1) u = (beta0 + beta(x)) u^3
// from data at t = 1, the u0/u1 source decomposition, the conserved
// Hamiltonian, and the weighted bulk norms of Lemma-4.3 type.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlkg/grid.hpp"
#include "nlkg/profiles.hpp"

namespace nlkg {

struct FieldState {
  double t = 1.0;
  std::vector<double> u, v;  // u and du/dt samples
  SpatialGrid grid;
};

struct InitialDataSpec {
  DataShape f, g;
  double epsilon_target = 0.0;  // 0 keeps the raw amplitudes
  int regularity = 2;           // N
};

struct InitialData {
  FieldState state;       // at t = 1
  double epsilon = 0.0;   // ||<x>^{1+N/2} f||_{H^{N+2}} + ||<x>^{1+N/2} g||_{H^{N+1}}
  InitialDataSpec spec;   // with amplitudes rescaled to match epsilon
};

/// Weighted Sobolev size of a data pair (the smallness parameter).
double data_epsilon_norm(const SpatialGrid& grid, const std::vector<double>& f,
                         const std::vector<double>& g, int regularity);

/// Sample (f, g) on the grid at t = 1; if epsilon_target > 0, rescale the
/// amplitudes so the weighted norm equals it. Throws when a shape width is
/// resolved by fewer than 8 grid points.
InitialData make_initial_data(const InitialDataSpec& spec, const SpatialGrid& grid);

/// One Strang step N(dt/2) L(dt) N(dt/2); both sub-flows are exact.
void step_strang(FieldState& state, double dt, const std::vector<double>& coeff_total);

double hamiltonian(const FieldState& state, const CoefficientProfile& c);

struct Trajectory {
  SpatialGrid grid;
  CoefficientProfile coeffs;
  double dt = 0.0;
  double snap_dt = 0.0;
  double epsilon = 0.0;
  std::string role = "u";  // "u", "u0" or "u1"
  std::vector<double> times;
  std::vector<std::vector<double>> us, vs;
  std::vector<double> hamiltonians;  // of the total field; empty for parts

  std::size_t snapshot_index(double t) const;  // exact cadence lookup
  FieldState state_at(std::size_t idx) const;
  double t_end() const { return times.empty() ? 0.0 : times.back(); }
};

/// Evolve from data.t (= 1) to T_end recording snapshots every snap_dt.
/// Preconditions: snap_dt an integer multiple of dt and L large enough that
/// no signal wraps (L >= 2(T_end - 1) + support + 8).
Trajectory evolve(const FieldState& data, const CoefficientProfile& c, double t_end,
                  double dt, double snap_dt);

struct DecomposedTrajectories {
  Trajectory u0, u1;
  std::vector<double> total_u(std::size_t idx) const;
  std::vector<double> total_v(std::size_t idx) const;
};

/// Co-evolve u0 (source beta0 u^3, data (f,g)) and u1 (source beta(x) u^3,
/// data (0,0)) with u = u0 + u1 in both cubic sources.
DecomposedTrajectories evolve_decomposed(const FieldState& data, const CoefficientProfile& c,
                                         double t_end, double dt, double snap_dt);

/// Fixed-time weighted norms of Lemma-4.3 type over the sharp region
/// {x : t^2 - x^2 <= R^2}: ||<x>^{-2} chi d^k u1(t)|| for
/// k in {id, dx, dxx, dx dt}.
struct WeightedU1Norms {
  double u1 = 0.0, dx_u1 = 0.0, dx2_u1 = 0.0, dxdt_u1 = 0.0;
};
WeightedU1Norms weighted_u1_norms(const Trajectory& traj_u1, double R, double t);

/// ||chi d_t u(t)||_2 and ||chi Zu(t)||_2 over the same sharp region.
struct BulkGrowthNorms {
  double dt_u = 0.0, Zu = 0.0;
};
BulkGrowthNorms bulk_growth_norms(const Trajectory& traj, double R, double t);

/// Largest |x| where |u| or |v| exceeds 1e-10 of its max (0 for zero data).
double support_radius(const FieldState& state);

/// Snapshot CSV files plus a manifest.json with the run metadata.
void save_trajectory(const Trajectory& traj, const std::string& dir);
Trajectory load_trajectory(const std::string& dir);

}  // namespace nlkg
