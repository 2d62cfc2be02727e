#pragma once

// The profile function g(t) of the explicit gradient-flow solution,
//   g' = g^2 / I_2(g),  g(0) = 0,
// integrated up to the first time t* with g(t*) = 1, and the quantities
// built from it.

#include <functional>
#include <iosfwd>
#include <vector>

#include "linfeig/domain_profile.hpp"

namespace linfeig {

struct GSample {
  double t = 0.0;
  double g = 0.0;
  double dg = 0.0;
};

class GTrajectory {
 public:
  /// Samples from the end of the bootstrap interval to t*.
  const std::vector<GSample>& samples() const noexcept { return samples_; }
  double t_star() const noexcept { return t_star_; }
  /// I_2(g) / g^3 at g = 1e-4.
  double c3() const noexcept { return c3_; }
  /// End of the interval where g(t) = sqrt(2 t / c3) is used.
  double t_bootstrap() const noexcept { return t0_; }

  /// g(t) for t in [0, t*]: the square-root law on the bootstrap interval,
  /// cubic Hermite interpolation of the Runge-Kutta steps afterwards.
  /// Throws OutOfRange outside [0, t*].
  double g(double t) const;

 private:
  friend GTrajectory solve_g(const DomainProfile& profile, double tol);
  std::vector<GSample> samples_;
  double t_star_ = 0.0;
  double c3_ = 0.0;
  double t0_ = 0.0;
  std::function<double(double)> interpolant_;
};

/// Bootstrap g = sqrt(2 t / c3) on [0, t0] with t0 = 1e-6 c3 / 2, then
/// adaptive Dormand-Prince steps (abs/rel tolerance `tol`) until g = 1,
/// the crossing located on the dense output. Throws DegenerateProfile when
/// c3 <= 0.
GTrajectory solve_g(const DomainProfile& profile, double tol = 1e-12);

/// u(t, x) for the flow started at f = r, given d = dist(x, boundary):
/// min(d / g(t), r) before t*, (||d||^2 + t* - t)_+ / ||d||^2 d afterwards.
double explicit_flow_value(const DomainProfile& profile, const GTrajectory& traj, double t,
                           double dist_value);

/// Extinction time t* + ||d||_2^2.
double extinction_time(const DomainProfile& profile, const GTrajectory& traj);

/// r I_1(g) - I_2(g) / g, for g in (0, 1].
double variational_time(const DomainProfile& profile, double g);

struct LevelSetRadius {
  /// c g(t); for c = r the plateau {d >= r g(t)} starts at this value.
  double value = 0.0;
  bool plateau = false;
};

/// Distance value at which the level set {u(t) = c} sits, 0 <= c <= r,
/// 0 <= t <= t*.
LevelSetRadius level_set_radius(const GTrajectory& traj, double c, double t, double r);

/// CSV "t,g" of the stored samples, preceded by the bootstrap end point.
void write_g_csv(std::ostream& out, const GTrajectory& traj);

}  // namespace linfeig
