#include "nlkg/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "nlkg/propagator.hpp"

namespace nlkg {

double data_epsilon_norm(const SpatialGrid& grid, const std::vector<double>& f,
                         const std::vector<double>& g, int regularity) {
  const double wexp = 1.0 + 0.5 * regularity;
  std::vector<double> wf(grid.n), wg(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) {
    const double w = std::pow(jap(grid.x(i)), wexp);
    wf[i] = w * f[i];
    wg[i] = w * g[i];
  }
  return sobolev_norm(grid, wf, regularity + 2.0) + sobolev_norm(grid, wg, regularity + 1.0);
}

InitialData make_initial_data(const InitialDataSpec& spec, const SpatialGrid& grid) {
  for (const DataShape* s : {&spec.f, &spec.g}) {
    if (s->family != DataFamily::zero && s->width < 8.0 * grid.spacing())
      throw std::invalid_argument("make_initial_data: shape width resolved by fewer than 8 points");
  }
  InitialData out;
  out.spec = spec;
  out.state.t = 1.0;
  out.state.grid = grid;
  out.state.u = spec.f.on_grid(grid);
  out.state.v = spec.g.on_grid(grid);
  out.epsilon = data_epsilon_norm(grid, out.state.u, out.state.v, spec.regularity);
  if (spec.epsilon_target > 0.0) {
    if (out.epsilon == 0.0)
      throw std::invalid_argument("make_initial_data: cannot scale zero data to a nonzero norm");
    const double scale = spec.epsilon_target / out.epsilon;
    for (auto& x : out.state.u) x *= scale;
    for (auto& x : out.state.v) x *= scale;
    out.spec.f.amp *= scale;
    out.spec.g.amp *= scale;
    out.epsilon = spec.epsilon_target;
  }
  return out;
}

namespace {

inline void cubic_kick(std::vector<double>& v, const std::vector<double>& u,
                       const std::vector<double>& coeff, double tau) {
  for (std::size_t i = 0; i < u.size(); ++i) v[i] += tau * coeff[i] * u[i] * u[i] * u[i];
}

void check_finite(const std::vector<double>& u, const char* what) {
  for (double x : u)
    if (!std::isfinite(x)) throw std::runtime_error(std::string("NaN/Inf detected in ") + what);
}

}  // namespace

void step_strang(FieldState& state, double dt, const std::vector<double>& coeff_total) {
  cubic_kick(state.v, state.u, coeff_total, 0.5 * dt);
  linear_kg_evolve(state.grid, state.u, state.v, dt);
  cubic_kick(state.v, state.u, coeff_total, 0.5 * dt);
  state.t += dt;
}

double hamiltonian(const FieldState& state, const CoefficientProfile& c) {
  const SpatialGrid& grid = state.grid;
  std::vector<double> ux = spectral_derivative(grid, state.u, 1);
  double acc = 0.0;
  for (std::size_t i = 0; i < grid.n; ++i) {
    const double b = c.beta0 + c.beta(grid.x(i));
    const double u = state.u[i];
    acc += 0.5 * state.v[i] * state.v[i] + 0.5 * ux[i] * ux[i] + 0.5 * u * u -
           0.25 * b * u * u * u * u;
  }
  return acc * grid.spacing();
}

std::size_t Trajectory::snapshot_index(double t) const {
  if (times.empty()) throw std::runtime_error("Trajectory: empty");
  const double rel = (t - times.front()) / snap_dt;
  const long idx = std::lround(rel);
  if (idx < 0 || idx >= static_cast<long>(times.size()) ||
      std::fabs(rel - static_cast<double>(idx)) > 1e-6)
    throw std::invalid_argument("Trajectory: time not on the snapshot cadence");
  return static_cast<std::size_t>(idx);
}

FieldState Trajectory::state_at(std::size_t idx) const {
  FieldState s;
  s.t = times.at(idx);
  s.u = us.at(idx);
  s.v = vs.at(idx);
  s.grid = grid;
  return s;
}

double support_radius(const FieldState& state) {
  double umax = 0.0, vmax = 0.0;
  for (double x : state.u) umax = std::max(umax, std::fabs(x));
  for (double x : state.v) vmax = std::max(vmax, std::fabs(x));
  double r = 0.0;
  for (std::size_t i = 0; i < state.grid.n; ++i) {
    const bool live = (umax > 0.0 && std::fabs(state.u[i]) > 1e-10 * umax) ||
                      (vmax > 0.0 && std::fabs(state.v[i]) > 1e-10 * vmax);
    if (live) r = std::max(r, std::fabs(state.grid.x(i)));
  }
  return r;
}

namespace {

long steps_per_snapshot(double dt, double snap_dt) {
  const double ratio = snap_dt / dt;
  const long m = std::lround(ratio);
  if (m < 1 || std::fabs(ratio - static_cast<double>(m)) > 1e-9)
    throw std::invalid_argument("evolve: snap_dt must be an integer multiple of dt");
  return m;
}

void check_wrap_safety(const FieldState& data, double t_end) {
  const double need = 2.0 * (t_end - data.t) + support_radius(data) + 8.0;
  if (data.grid.length < need)
    throw std::invalid_argument("evolve: box too small for t_end (L=" +
                                std::to_string(data.grid.length) + " < required " +
                                std::to_string(need) + "); signal would wrap");
}

}  // namespace

Trajectory evolve(const FieldState& data, const CoefficientProfile& c, double t_end,
                  double dt, double snap_dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("evolve: dt must be positive");
  check_wrap_safety(data, t_end);
  const long m = steps_per_snapshot(dt, snap_dt);
  const long nsnap = std::lround((t_end - data.t) / snap_dt);
  if (nsnap < 1 || std::fabs((t_end - data.t) / snap_dt - static_cast<double>(nsnap)) > 1e-9)
    throw std::invalid_argument("evolve: t_end - t0 must be an integer multiple of snap_dt");

  Trajectory traj;
  traj.grid = data.grid;
  traj.coeffs = c;
  traj.dt = dt;
  traj.snap_dt = snap_dt;
  const std::vector<double> coeff = c.total_on_grid(data.grid);

  FieldState state = data;
  traj.times.push_back(state.t);
  traj.us.push_back(state.u);
  traj.vs.push_back(state.v);
  traj.hamiltonians.push_back(hamiltonian(state, c));
  for (long s = 0; s < nsnap; ++s) {
    for (long k = 0; k < m; ++k) step_strang(state, dt, coeff);
    state.t = data.t + (s + 1) * snap_dt;  // keep snapshot times exact
    check_finite(state.u, "u");
    traj.times.push_back(state.t);
    traj.us.push_back(state.u);
    traj.vs.push_back(state.v);
    traj.hamiltonians.push_back(hamiltonian(state, c));
  }
  return traj;
}

std::vector<double> DecomposedTrajectories::total_u(std::size_t idx) const {
  std::vector<double> out = u0.us.at(idx);
  const auto& add = u1.us.at(idx);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += add[i];
  return out;
}

std::vector<double> DecomposedTrajectories::total_v(std::size_t idx) const {
  std::vector<double> out = u0.vs.at(idx);
  const auto& add = u1.vs.at(idx);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += add[i];
  return out;
}

DecomposedTrajectories evolve_decomposed(const FieldState& data, const CoefficientProfile& c,
                                         double t_end, double dt, double snap_dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("evolve_decomposed: dt must be positive");
  check_wrap_safety(data, t_end);
  const long m = steps_per_snapshot(dt, snap_dt);
  const long nsnap = std::lround((t_end - data.t) / snap_dt);

  const SpatialGrid& grid = data.grid;
  std::vector<double> beta_smp = c.beta_on_grid(grid);

  DecomposedTrajectories out;
  for (Trajectory* t : {&out.u0, &out.u1}) {
    t->grid = grid;
    t->coeffs = c;
    t->dt = dt;
    t->snap_dt = snap_dt;
  }
  out.u0.role = "u0";
  out.u1.role = "u1";

  FieldState s0 = data;
  FieldState s1;
  s1.t = data.t;
  s1.grid = grid;
  s1.u.assign(grid.n, 0.0);
  s1.v.assign(grid.n, 0.0);

  auto push = [&]() {
    out.u0.times.push_back(s0.t);
    out.u0.us.push_back(s0.u);
    out.u0.vs.push_back(s0.v);
    out.u1.times.push_back(s1.t);
    out.u1.us.push_back(s1.u);
    out.u1.vs.push_back(s1.v);
  };
  push();

  auto kick = [&](double tau) {
    for (std::size_t i = 0; i < grid.n; ++i) {
      const double u = s0.u[i] + s1.u[i];
      const double u3 = u * u * u;
      s0.v[i] += tau * c.beta0 * u3;
      s1.v[i] += tau * beta_smp[i] * u3;
    }
  };

  for (long s = 0; s < nsnap; ++s) {
    for (long k = 0; k < m; ++k) {
      kick(0.5 * dt);
      linear_kg_evolve(grid, s0.u, s0.v, dt);
      linear_kg_evolve(grid, s1.u, s1.v, dt);
      kick(0.5 * dt);
    }
    s0.t = s1.t = data.t + (s + 1) * snap_dt;
    check_finite(s0.u, "u0");
    check_finite(s1.u, "u1");
    push();
  }
  return out;
}

namespace {

// chi_{S_t^R}: 1 where t^2 - x^2 <= R^2 (all of space when t <= R).
inline bool in_sharp_region(double t, double x, double R) { return t * t - x * x <= R * R; }

double masked_weighted_l2(const SpatialGrid& grid, const std::vector<double>& f, double t,
                          double R, bool weight) {
  double acc = 0.0;
  for (std::size_t i = 0; i < grid.n; ++i) {
    const double x = grid.x(i);
    if (!in_sharp_region(t, x, R)) continue;
    double val = f[i];
    if (weight) val /= (1.0 + x * x);  // <x>^{-2}
    acc += val * val;
  }
  return std::sqrt(acc * grid.spacing());
}

}  // namespace

WeightedU1Norms weighted_u1_norms(const Trajectory& traj_u1, double R, double t) {
  if (!(R >= 1.0)) throw std::invalid_argument("weighted_u1_norms: R must be >= 1");
  const std::size_t idx = traj_u1.snapshot_index(t);
  const SpatialGrid& grid = traj_u1.grid;
  const std::vector<double>& u1 = traj_u1.us[idx];
  const std::vector<double>& v1 = traj_u1.vs[idx];
  WeightedU1Norms out;
  out.u1 = masked_weighted_l2(grid, u1, t, R, true);
  out.dx_u1 = masked_weighted_l2(grid, spectral_derivative(grid, u1, 1), t, R, true);
  out.dx2_u1 = masked_weighted_l2(grid, spectral_derivative(grid, u1, 2), t, R, true);
  out.dxdt_u1 = masked_weighted_l2(grid, spectral_derivative(grid, v1, 1), t, R, true);
  return out;
}

BulkGrowthNorms bulk_growth_norms(const Trajectory& traj, double R, double t) {
  if (!(R >= 1.0)) throw std::invalid_argument("bulk_growth_norms: R must be >= 1");
  const std::size_t idx = traj.snapshot_index(t);
  const SpatialGrid& grid = traj.grid;
  const std::vector<double>& u = traj.us[idx];
  const std::vector<double>& v = traj.vs[idx];
  std::vector<double> ux = spectral_derivative(grid, u, 1);
  std::vector<double> Zu(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) Zu[i] = t * ux[i] + grid.x(i) * v[i];
  BulkGrowthNorms out;
  out.dt_u = masked_weighted_l2(grid, v, t, R, false);
  out.Zu = masked_weighted_l2(grid, Zu, t, R, false);
  return out;
}

void save_trajectory(const Trajectory& traj, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  nlohmann::json manifest;
  manifest["n"] = traj.grid.n;
  manifest["L"] = traj.grid.length;
  manifest["dt"] = traj.dt;
  manifest["snap_dt"] = traj.snap_dt;
  manifest["epsilon"] = traj.epsilon;
  manifest["beta0"] = traj.coeffs.beta0;
  manifest["beta_family"] = to_string(traj.coeffs.family);
  manifest["beta_amp"] = traj.coeffs.amp;
  manifest["beta_width"] = traj.coeffs.width;
  manifest["role"] = traj.role;
  std::vector<std::string> files;
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    char name[64];
    std::snprintf(name, sizeof(name), "snapshot_%05zu.csv", s);
    files.emplace_back(name);
    std::ofstream os(fs::path(dir) / name);
    os.precision(17);
    os << "# t=" << traj.times[s] << " n=" << traj.grid.n << " L=" << traj.grid.length
       << " dt=" << traj.dt << " beta0=" << traj.coeffs.beta0
       << " beta_family=" << to_string(traj.coeffs.family) << " epsilon=" << traj.epsilon
       << "\n";
    os << "x,u,v\n";
    for (std::size_t i = 0; i < traj.grid.n; ++i)
      os << traj.grid.x(i) << "," << traj.us[s][i] << "," << traj.vs[s][i] << "\n";
  }
  manifest["snapshots"] = files;
  manifest["times"] = traj.times;
  std::ofstream ms(fs::path(dir) / "manifest.json");
  ms << manifest.dump(2) << "\n";
}

Trajectory load_trajectory(const std::string& dir) {
  namespace fs = std::filesystem;
  std::ifstream ms(fs::path(dir) / "manifest.json");
  if (!ms) throw std::runtime_error("load_trajectory: missing manifest.json in " + dir);
  nlohmann::json manifest = nlohmann::json::parse(ms);
  Trajectory traj;
  traj.grid = SpatialGrid(manifest["n"].get<std::size_t>(), manifest["L"].get<double>());
  traj.dt = manifest["dt"].get<double>();
  traj.snap_dt = manifest["snap_dt"].get<double>();
  traj.epsilon = manifest["epsilon"].get<double>();
  traj.coeffs = make_profile(manifest["beta0"].get<double>(),
                             beta_family_from_string(manifest["beta_family"].get<std::string>()),
                             manifest["beta_amp"].get<double>(),
                             manifest["beta_width"].get<double>());
  traj.role = manifest["role"].get<std::string>();
  traj.times = manifest["times"].get<std::vector<double>>();
  for (const auto& name : manifest["snapshots"]) {
    std::ifstream is(fs::path(dir) / name.get<std::string>());
    std::string line;
    std::getline(is, line);  // header comment
    std::getline(is, line);  // column names
    std::vector<double> u(traj.grid.n), v(traj.grid.n);
    for (std::size_t i = 0; i < traj.grid.n; ++i) {
      double x, uu, vv;
      char c1, c2;
      is >> x >> c1 >> uu >> c2 >> vv;
      u[i] = uu;
      v[i] = vv;
    }
    traj.us.push_back(std::move(u));
    traj.vs.push_back(std::move(v));
  }
  return traj;
}

}  // namespace nlkg
