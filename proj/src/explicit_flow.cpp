#include "linfeig/explicit_flow.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <memory>
#include <ostream>
#include <string>

#include <boost/math/interpolators/cubic_hermite.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

#include "linfeig/error.hpp"

namespace linfeig {

namespace {

constexpr double kC3Probe = 1e-4;
constexpr std::size_t kMaxSteps = 1'000'000;
constexpr int kSubsamples = 4;

}  // namespace

double GTrajectory::g(double t) const {
  if (!(t >= 0.0 && t <= t_star_ * (1.0 + 1e-12))) {
    throw Error(Errc::OutOfRange, "t = " + std::to_string(t) + " outside [0, t*]");
  }
  t = std::min(t, t_star_);
  if (t <= t0_) return std::sqrt(2.0 * t / c3_);
  return interpolant_(t);
}

GTrajectory solve_g(const DomainProfile& profile, double tol) {
  namespace odeint = boost::numeric::odeint;
  using State = std::array<double, 1>;

  GTrajectory traj;
  traj.c3_ = profile.integral(2, kC3Probe) / std::pow(kC3Probe, 3);
  if (!(traj.c3_ > 0.0) || !std::isfinite(traj.c3_)) {
    throw Error(Errc::DegenerateProfile, "I_2(g)/g^3 near 0 is not positive");
  }
  traj.t0_ = 1e-6 * traj.c3_ / 2.0;

  auto slope = [&profile](double g) { return g * g / profile.integral_clamped(2, g); };
  auto rhs = [&slope](const State& x, State& dxdt, double) { dxdt[0] = slope(x[0]); };

  State x{std::sqrt(2.0 * traj.t0_ / traj.c3_)};
  traj.samples_.push_back({traj.t0_, x[0], slope(x[0])});

  auto stepper = odeint::make_dense_output(tol, tol, odeint::runge_kutta_dopri5<State>());
  stepper.initialize(x, traj.t0_, traj.t0_);
  for (std::size_t step = 0;; ++step) {
    if (step >= kMaxSteps) {
      throw Error(Errc::NonconvergedAfterMaxIters, "g did not reach 1");
    }
    auto [ta, tb] = stepper.do_step(rhs);
    if (stepper.current_state()[0] < 1.0) {
      for (int j = 1; j <= kSubsamples; ++j) {
        double t = ta + (tb - ta) * j / kSubsamples;
        State y;
        stepper.calc_state(t, y);
        traj.samples_.push_back({t, y[0], slope(y[0])});
      }
      continue;
    }
    auto excess = [&stepper](double t) {
      State y;
      stepper.calc_state(t, y);
      return y[0] - 1.0;
    };
    std::uintmax_t iters = 200;
    auto bracket = boost::math::tools::toms748_solve(excess, ta, tb,
                                                     boost::math::tools::eps_tolerance<double>(52), iters);
    double t_star = 0.5 * (bracket.first + bracket.second);
    for (int j = 1; j < kSubsamples; ++j) {
      double t = ta + (t_star - ta) * j / kSubsamples;
      State y;
      stepper.calc_state(t, y);
      traj.samples_.push_back({t, y[0], slope(y[0])});
    }
    traj.samples_.push_back({t_star, 1.0, slope(1.0)});
    traj.t_star_ = t_star;
    break;
  }

  std::vector<double> ts, gs, dgs;
  for (const auto& s : traj.samples_) {
    if (!ts.empty() && !(s.t > ts.back())) continue;
    ts.push_back(s.t);
    gs.push_back(s.g);
    dgs.push_back(s.dg);
  }
  auto spline = std::make_shared<boost::math::interpolators::cubic_hermite<std::vector<double>>>(
      std::move(ts), std::move(gs), std::move(dgs));
  traj.interpolant_ = [spline](double t) { return (*spline)(t); };
  return traj;
}

double explicit_flow_value(const DomainProfile& profile, const GTrajectory& traj, double t,
                           double dist_value) {
  const double r = profile.in_radius();
  if (!(dist_value >= 0.0 && dist_value <= r)) throw Error(Errc::OutOfRange, "distance outside [0, r]");
  if (!(t >= 0.0)) throw Error(Errc::OutOfRange, "t must be non-negative");
  if (t < traj.t_star()) {
    double g = traj.g(t);
    if (g == 0.0) return r;
    return std::min(dist_value / g, r);
  }
  const double dn = profile.d_norm2_sq();
  return std::max(dn + traj.t_star() - t, 0.0) / dn * dist_value;
}

double extinction_time(const DomainProfile& profile, const GTrajectory& traj) {
  return traj.t_star() + profile.d_norm2_sq();
}

double variational_time(const DomainProfile& profile, double g) {
  if (!(g > 0.0 && g <= 1.0)) throw Error(Errc::OutOfRange, "g must lie in (0, 1]");
  return profile.in_radius() * profile.integral(1, g) - profile.integral(2, g) / g;
}

LevelSetRadius level_set_radius(const GTrajectory& traj, double c, double t, double r) {
  if (!(c >= 0.0 && c <= r)) throw Error(Errc::OutOfRange, "level c outside [0, r]");
  if (!(t >= 0.0 && t <= traj.t_star() * (1.0 + 1e-12))) throw Error(Errc::OutOfRange, "t outside [0, t*]");
  return {c * traj.g(t), c == r};
}

void write_g_csv(std::ostream& out, const GTrajectory& traj) {
  out << std::setprecision(17) << "t,g\n";
  out << 0.0 << ',' << 0.0 << '\n';
  for (const auto& s : traj.samples()) out << s.t << ',' << s.g << '\n';
}

}  // namespace linfeig
