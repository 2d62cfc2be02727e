#include "linfeig/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "linfeig/error.hpp"
#include "linfeig/lp.hpp"

namespace linfeig {

namespace {

void require_nonzero_dirichlet(const WeightedGraph& g, const VertexFunction& u) {
  if (u.size() != g.num_vertices()) {
    throw Error(Errc::DomainMismatch, "function size does not match the graph");
  }
  if (!vanishes_on_boundary(g, u)) {
    throw Error(Errc::DomainMismatch, "u must vanish on the boundary");
  }
  if (std::all_of(u.values().begin(), u.values().end(), [](double v) { return v == 0.0; })) {
    throw Error(Errc::ZeroFunction, "u is identically zero");
  }
}

double edge_gradient(const WeightedGraph& g, const VertexFunction& u, std::size_t e) {
  const auto& ed = g.edge(e);
  return std::sqrt(ed.w) * (u[ed.j] - u[ed.i]);
}

}  // namespace

std::vector<std::size_t> maximal_edges(const WeightedGraph& g, const VertexFunction& u) {
  double jw = 0.0;
  for (std::size_t e = 0; e < g.num_edges(); ++e) jw = std::max(jw, std::abs(edge_gradient(g, u, e)));
  std::vector<std::size_t> emax;
  if (jw == 0.0) return emax;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (std::abs(edge_gradient(g, u, e)) >= (1.0 - kEmaxRelTol) * jw) emax.push_back(e);
  }
  return emax;
}

MembershipDiagnostics subgradient_membership(const WeightedGraph& g, const VertexFunction& u,
                                             const EdgeFunction& q, double /*tol*/) {
  require_nonzero_dirichlet(g, u);
  if (q.size() != g.num_arcs()) throw Error(Errc::DomainMismatch, "q size does not match the graph");

  std::vector<char> in_emax(g.num_edges(), 0);
  for (auto e : maximal_edges(g, u)) in_emax[e] = 1;

  MembershipDiagnostics diag;
  diag.norm_gap = std::abs(norm_p(q, 1.0) - 1.0);
  for (std::size_t a = 0; a < g.num_arcs(); ++a) {
    std::size_t e = a / 2;
    double grad = edge_gradient(g, u, e) * (a % 2 == 0 ? 1.0 : -1.0);
    if (!in_emax[e]) {
      diag.support_violation = std::max(diag.support_violation, std::abs(q[a]));
    } else {
      double gap = std::abs(q[a]) * std::abs(grad) - q[a] * grad;
      diag.parallel_violation = std::max(diag.parallel_violation, gap);
    }
  }
  return diag;
}

double eigen_residual(const WeightedGraph& g, const VertexFunction& u, const EdgeFunction& q,
                      double lambda) {
  auto div = weighted_divergence(g, q);
  double worst = 0.0;
  for (auto x : g.interior()) worst = std::max(worst, std::abs(lambda * u[x] + div[x]));
  return worst;
}

CertificateOutcome eigen_certificate(const WeightedGraph& g, const VertexFunction& u, double tol) {
  require_nonzero_dirichlet(g, u);
  CertificateOutcome outcome;
  const double jw = j_w(g, u);
  const double norm2 = norm_p(u, 2.0);
  outcome.lambda = jw / (norm2 * norm2);

  const auto emax = maximal_edges(g, u);
  const auto interior = g.interior();
  std::vector<std::size_t> row_of(g.num_vertices(), interior.size());
  for (std::size_t r = 0; r < interior.size(); ++r) row_of[interior[r]] = r;

  // magnitudes m_e >= 0, q(i->j) = m_e sign(grad u)(i->j)
  DenseMatrix a(interior.size() + 1, emax.size());
  std::vector<double> b(interior.size() + 1, 0.0);
  std::vector<double> sign(emax.size());
  for (std::size_t k = 0; k < emax.size(); ++k) {
    const auto& ed = g.edge(emax[k]);
    sign[k] = edge_gradient(g, u, emax[k]) > 0.0 ? 1.0 : -1.0;
    double coeff = 2.0 * std::sqrt(ed.w) * sign[k];
    // -div q(x) = -2 sum_{y ~ x} w^{1/2} q(x, y)
    if (row_of[ed.i] < interior.size()) a(row_of[ed.i], k) -= coeff;
    if (row_of[ed.j] < interior.size()) a(row_of[ed.j], k) += coeff;
    a(interior.size(), k) = 2.0;
  }
  for (std::size_t r = 0; r < interior.size(); ++r) b[r] = outcome.lambda * u[interior[r]];
  b[interior.size()] = 1.0;

  auto lp = solve_feasibility(a, b, tol);
  outcome.infeasibility = lp.infeasibility;
  if (!lp.feasible) {
    outcome.farkas = std::move(lp.farkas);
    return outcome;
  }

  EigenCertificate cert;
  cert.lambda = outcome.lambda;
  cert.q = EdgeFunction(g.num_arcs(), true);
  for (std::size_t k = 0; k < emax.size(); ++k) cert.q.set(2 * emax[k], lp.x[k] * sign[k]);
  auto diag = subgradient_membership(g, u, cert.q, tol);
  cert.residual_inf = eigen_residual(g, u, cert.q, cert.lambda);
  cert.support_violation = diag.support_violation;
  cert.parallel_violation = diag.parallel_violation;
  cert.norm_gap = diag.norm_gap;
  outcome.certificate = std::move(cert);
  return outcome;
}

ExtremeResult extreme_point_check(const WeightedGraph& g, const VertexFunction& u, double tol) {
  if (u.size() != g.num_vertices()) {
    throw Error(Errc::DomainMismatch, "function size does not match the graph");
  }
  if (!vanishes_on_boundary(g, u)) {
    throw Error(Errc::DomainMismatch, "u must vanish on the boundary");
  }
  double jw = j_w(g, u);
  if (jw > 1.0 + tol) throw Error(Errc::NotInUnitBall, "J_w(u) = " + std::to_string(jw));

  std::vector<char> reached(g.num_vertices(), 0);
  std::deque<std::size_t> queue;
  for (auto b : g.boundary()) {
    reached[b] = 1;
    queue.push_back(b);
  }
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (auto a : g.out_arcs(x)) {
      auto y = g.arc(a).to;
      if (reached[y]) continue;
      if (std::abs(std::abs(edge_gradient(g, u, a / 2)) - 1.0) <= tol) {
        reached[y] = 1;
        queue.push_back(y);
      }
    }
  }
  ExtremeResult result;
  for (std::size_t x = 0; x < g.num_vertices(); ++x) {
    if (!reached[x]) result.failing.push_back(x);
  }
  result.extreme = result.failing.empty();
  return result;
}

}  // namespace linfeig
