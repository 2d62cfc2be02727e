#pragma once

// Subdifferential of J_w, eigenfunction certificates and extreme points of
// the unit ball {J_w <= 1}.

#include <cstddef>
#include <optional>
#include <vector>

#include "linfeig/graph.hpp"

namespace linfeig {

/// Relative tolerance for membership in E_max = {|grad_w u| = J_w(u)}.
inline constexpr double kEmaxRelTol = 1e-9;

/// Undirected edges e with |grad_w u| >= (1 - kEmaxRelTol) J_w(u).
std::vector<std::size_t> maximal_edges(const WeightedGraph& g, const VertexFunction& u);

struct MembershipDiagnostics {
  double norm_gap = 0.0;            // | ||q||_1 - 1 |
  double support_violation = 0.0;   // max |q| off E_max
  double parallel_violation = 0.0;  // max |q||grad u| - q grad u on E_max
  bool passes(double tol) const {
    return norm_gap <= tol && support_violation <= tol && parallel_violation <= tol;
  }
};

/// Checks q in the subdifferential of J_w at u: ||q||_1 = 1, q = 0 off
/// E_max and q parallel to grad_w u on E_max. Throws ZeroFunction for u = 0
/// and DomainMismatch when u does not vanish on the boundary.
MembershipDiagnostics subgradient_membership(const WeightedGraph& g, const VertexFunction& u,
                                             const EdgeFunction& q, double tol);

struct EigenCertificate {
  double lambda = 0.0;
  EdgeFunction q;
  double residual_inf = 0.0;  // max over interior x of |lambda u(x) + div_w q(x)|
  double support_violation = 0.0;
  double parallel_violation = 0.0;
  double norm_gap = 0.0;

  bool valid(double tol) const {
    return residual_inf <= tol && support_violation <= tol && parallel_violation <= tol &&
           norm_gap <= tol;
  }
};

struct CertificateOutcome {
  /// lambda = J_w(u) / ||u||_2^2, reported in both cases.
  double lambda = 0.0;
  std::optional<EigenCertificate> certificate;
  /// Phase-one optimum of the feasibility LP; positive when infeasible.
  double infeasibility = 0.0;
  /// Farkas multipliers, one per interior vertex followed by the norm row.
  std::vector<double> farkas;

  bool feasible() const { return certificate.has_value(); }
};

/// Searches q with lambda u = -div_w q on the interior and q in
/// dJ_w(u), as a sign-fixed LP over the magnitudes of q on E_max.
CertificateOutcome eigen_certificate(const WeightedGraph& g, const VertexFunction& u, double tol);

/// Residual max_{x interior} |lambda u(x) + div_w q(x)|.
double eigen_residual(const WeightedGraph& g, const VertexFunction& u, const EdgeFunction& q,
                      double lambda);

struct ExtremeResult {
  bool extreme = false;
  /// Vertices with no saturated path to the boundary, ascending.
  std::vector<std::size_t> failing;
};

/// u is extreme in {J_w <= 1} iff every vertex reaches the boundary along
/// edges with |grad_w u| = 1 (within tol). Throws NotInUnitBall when
/// J_w(u) > 1 + tol.
ExtremeResult extreme_point_check(const WeightedGraph& g, const VertexFunction& u, double tol);

}  // namespace linfeig
