#include "linfeig/prox.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "linfeig/error.hpp"
#include "linfeig/l1_ball.hpp"

namespace linfeig {

namespace {

// K u on undirected edges: sqrt(w) (u_j - u_i).
void apply_k(const WeightedGraph& g, const std::vector<double>& u, std::vector<double>& out) {
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    out[e] = std::sqrt(edges[e].w) * (u[edges[e].j] - u[edges[e].i]);
  }
}

// K^T y restricted to interior vertices (zero on the boundary).
void apply_kt(const WeightedGraph& g, const std::vector<double>& y, std::vector<double>& out) {
  std::fill(out.begin(), out.end(), 0.0);
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    double s = std::sqrt(edges[e].w) * y[e];
    out[edges[e].j] += s;
    out[edges[e].i] -= s;
  }
  for (auto b : g.boundary()) out[b] = 0.0;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

ProxResult prox_jw_solve(const WeightedGraph& g, const VertexFunction& f_in, double tau,
                         const ProxOptions& options, const std::vector<double>* warm_dual) {
  if (f_in.size() != g.num_vertices()) {
    throw Error(Errc::DomainMismatch, "function size does not match the graph");
  }
  if (!(tau >= 0.0)) throw Error(Errc::OutOfRange, "tau must be non-negative");

  const std::size_t n = g.num_vertices(), m = g.num_edges();
  std::vector<double> f(f_in.values().begin(), f_in.values().end());
  for (auto b : g.boundary()) f[b] = 0.0;

  ProxResult result;
  result.dual.assign(m, 0.0);
  if (tau == 0.0) {
    result.u = VertexFunction(std::move(f));
    return result;
  }
  if (warm_dual && warm_dual->size() == m) {
    result.dual = *warm_dual;
    project_l1_ball(result.dual, tau);
  }

  std::vector<double>& y = result.dual;
  std::vector<double> u(n), u_prev(n), u_bar(n), ky(m), kty(n), candidate(n);

  auto primal = [&](const std::vector<double>& v) {
    double fit = 0.0;
    for (std::size_t x = 0; x < n; ++x) fit += (v[x] - f[x]) * (v[x] - f[x]);
    apply_k(g, v, ky);
    return 0.5 * fit + tau * max_abs(ky);
  };

  // start from the primal point induced by the dual
  apply_kt(g, y, kty);
  for (std::size_t x = 0; x < n; ++x) u[x] = f[x] - kty[x];
  for (auto b : g.boundary()) u[b] = 0.0;
  u_bar = u;

  const double op_norm = std::sqrt(2.0 * g.max_weighted_degree());
  double step_p = 1.0 / op_norm, step_d = 1.0 / op_norm;

  double gap = std::numeric_limits<double>::infinity();
  std::size_t it = 0;
  for (;;) {
    if (it % options.check_every == 0) {
      apply_kt(g, y, kty);
      double dual = 0.0;
      for (std::size_t x = 0; x < n; ++x) {
        dual += kty[x] * f[x] - 0.5 * kty[x] * kty[x];
        candidate[x] = f[x] - kty[x];
      }
      double p_iter = primal(u);
      double p_dual = primal(candidate);
      gap = std::min(p_iter, p_dual) - dual;
      if (gap <= options.tol) {
        result.u = VertexFunction(p_dual <= p_iter ? candidate : u);
        result.gap = std::max(gap, 0.0);
        result.iterations = it;
        return result;
      }
      if (it >= options.max_iters) break;
    }

    apply_k(g, u_bar, ky);
    for (std::size_t e = 0; e < m; ++e) y[e] += step_d * ky[e];
    project_l1_ball(y, tau);

    apply_kt(g, y, kty);
    u_prev = u;
    for (std::size_t x = 0; x < n; ++x) {
      u[x] = (u[x] - step_p * kty[x] + step_p * f[x]) / (1.0 + step_p);
    }
    for (auto b : g.boundary()) u[b] = 0.0;

    double theta = 1.0 / std::sqrt(1.0 + 2.0 * step_p);
    step_p *= theta;
    step_d /= theta;
    for (std::size_t x = 0; x < n; ++x) u_bar[x] = u[x] + theta * (u[x] - u_prev[x]);
    ++it;
  }
  throw Error(Errc::NonconvergedAfterMaxIters,
              "prox gap " + std::to_string(gap) + " after " + std::to_string(it) + " iterations");
}

}  // namespace linfeig
