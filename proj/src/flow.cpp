#include "linfeig/flow.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "linfeig/error.hpp"

namespace linfeig {

double default_flow_step(const WeightedGraph& g, const VertexFunction& f) {
  VertexFunction h = f;
  for (auto b : g.boundary()) h[b] = 0.0;
  double jw = j_w(g, h);
  double n2 = norm_p(h, 2.0);
  if (jw == 0.0) return 0.0;
  return 0.01 * n2 * n2 / jw;
}

FlowTrajectory gradient_flow(const WeightedGraph& g, const VertexFunction& f,
                             const FlowOptions& options) {
  if (f.size() != g.num_vertices()) {
    throw Error(Errc::DomainMismatch, "function size does not match the graph");
  }
  VertexFunction u = f;
  for (auto b : g.boundary()) u[b] = 0.0;

  FlowTrajectory traj;
  auto record = [&](double t, const VertexFunction& v) {
    traj.times.push_back(t);
    traj.states.push_back(v);
    traj.norms.push_back(norm_p(v, 2.0));
    traj.j_values.push_back(j_w(g, v));
  };
  record(0.0, u);
  if (traj.norms.back() <= options.tol) return traj;

  double step = options.step > 0.0 ? options.step : default_flow_step(g, u);
  if (!(step > 0.0)) throw Error(Errc::OutOfRange, "flow step must be positive");

  std::vector<double> dual;
  for (std::size_t k = 1;; ++k) {
    if (k > options.max_steps) {
      throw Error(Errc::NonconvergedAfterMaxIters,
                  "no extinction after " + std::to_string(options.max_steps) + " steps");
    }
    ProxOptions prox;
    double n2 = traj.norms.back();
    prox.tol = options.prox_rel_tol * std::max(n2 * n2, options.tol * options.tol);
    auto r = prox_jw_solve(g, u, step, prox, dual.empty() ? nullptr : &dual);
    dual = std::move(r.dual);
    u = std::move(r.u);
    record(static_cast<double>(k) * step, u);
    if (traj.norms.back() <= options.tol) break;
  }
  traj.extinction_time_estimate = traj.times.back();

  const std::size_t last = traj.states.size() - 2;  // last pre-extinction sample
  traj.profile = traj.states[last];
  for (auto& v : traj.profile.values()) v /= traj.norms[last];
  traj.profile_eigenvalue = j_w(g, traj.profile);
  return traj;
}

ProfileEstimate asymptotic_profile(const FlowTrajectory& traj, const WeightedGraph& g) {
  if (traj.states.size() < 2 || traj.norms[traj.states.size() - 2] <= 0.0) {
    throw Error(Errc::EmptyTrajectory, "no pre-extinction sample");
  }
  const std::size_t last = traj.states.size() - 2;
  ProfileEstimate est;
  est.profile = traj.states[last];
  for (auto& v : est.profile.values()) v /= traj.norms[last];
  est.lambda_est = j_w(g, traj.states[last]) / traj.norms[last];
  est.lambda_unit_lipschitz = est.lambda_est * est.lambda_est;
  return est;
}

void write_trajectory_csv(std::ostream& out, const FlowTrajectory& traj) {
  out << std::setprecision(17) << "t,norm2,J_w\n";
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    out << traj.times[k] << ',' << traj.norms[k] << ',' << traj.j_values[k] << '\n';
  }
}

void write_snapshots_csv(std::ostream& out, const FlowTrajectory& traj,
                         const std::vector<double>& at_times) {
  out << std::setprecision(17) << "t,vertex,u\n";
  if (traj.times.empty()) return;
  for (double t : at_times) {
    auto it = std::lower_bound(traj.times.begin(), traj.times.end(), t);
    std::size_t k = static_cast<std::size_t>(it - traj.times.begin());
    if (k == traj.times.size()) --k;
    if (k > 0 && t - traj.times[k - 1] < traj.times[k] - t) --k;
    const auto& state = traj.states[k];
    for (std::size_t x = 0; x < state.size(); ++x) {
      out << traj.times[k] << ',' << x << ',' << state[x] << '\n';
    }
  }
}

nlohmann::json certificate_to_json(const WeightedGraph& g, const EigenCertificate& cert) {
  nlohmann::json q = nlohmann::json::array();
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    double v = cert.q[2 * e];
    if (v != 0.0) q.push_back({g.edge(e).i, g.edge(e).j, v});
  }
  return {{"lambda", cert.lambda},
          {"q", q},
          {"residuals",
           {{"residual_inf", cert.residual_inf},
            {"support_violation", cert.support_violation},
            {"parallel_violation", cert.parallel_violation},
            {"norm_gap", cert.norm_gap}}}};
}

}  // namespace linfeig
