#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "linfeig/graph.hpp"
#include "linfeig/prox.hpp"
#include "linfeig/spectral.hpp"

namespace linfeig {

struct FlowTrajectory {
  std::vector<double> times;
  std::vector<VertexFunction> states;
  std::vector<double> norms;  // ||u(t_k)||_2
  std::vector<double> j_values;
  double extinction_time_estimate = 0.0;
  /// Last pre-extinction state normalised to unit 2-norm; empty if f = 0.
  VertexFunction profile;
  /// J_w(profile), the eigenvalue of the profile.
  double profile_eigenvalue = 0.0;
};

struct FlowOptions {
  /// 0 selects the default 0.01 ||f||_2^2 / J_w(f).
  double step = 0.0;
  /// Extinction threshold on ||u_k||_2.
  double tol = 1e-9;
  /// Prox gap tolerance relative to ||u_k||_2^2.
  double prox_rel_tol = 1e-12;
  std::size_t max_steps = 100'000;
};

double default_flow_step(const WeightedGraph& g, const VertexFunction& f);

/// Implicit Euler u_{k+1} = prox(u_k, step) until ||u_k||_2 <= tol, with
/// t_k = k step. f is zeroed on the boundary.
FlowTrajectory gradient_flow(const WeightedGraph& g, const VertexFunction& f,
                             const FlowOptions& options = {});

struct ProfileEstimate {
  VertexFunction profile;  // unit 2-norm
  /// J_w(u) / ||u||_2 at the last pre-extinction sample.
  double lambda_est = 0.0;
  /// Eigenvalue of the rescaling profile / J_w(profile), which has J_w = 1;
  /// equals J_w(profile)^2, so 1 / ||d||_2^2 when the profile is d / ||d||_2.
  double lambda_unit_lipschitz = 0.0;
};

/// Throws EmptyTrajectory when there is no nonzero pre-extinction sample.
ProfileEstimate asymptotic_profile(const FlowTrajectory& traj, const WeightedGraph& g);

/// CSV "t,norm2,J_w", one row per time step.
void write_trajectory_csv(std::ostream& out, const FlowTrajectory& traj);
/// CSV "t,vertex,u" for the stored states nearest to each requested time.
void write_snapshots_csv(std::ostream& out, const FlowTrajectory& traj,
                         const std::vector<double>& at_times);

/// {"lambda", "q": [[i, j, q(i->j)], ...], "residuals": {...}}; one entry
/// per undirected edge with nonzero q.
nlohmann::json certificate_to_json(const WeightedGraph& g, const EigenCertificate& cert);

}  // namespace linfeig
