#include "linfeig/domain_profile.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>
#include <istream>
#include <limits>
#include <memory>
#include <sstream>

#include <boost/math/constants/constants.hpp>
#include <boost/math/interpolators/pchip.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "linfeig/error.hpp"

namespace linfeig {

namespace {

constexpr double pi = boost::math::constants::pi<double>();

double gk_integrate(const std::function<double(double)>& f, double a, double b) {
  if (b <= a) return 0.0;
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-13, &error);
}

double gauss_integrate(const std::function<double(double)>& f, double a, double b) {
  if (b <= a) return 0.0;
  return boost::math::quadrature::gauss<double, 30>::integrate(f, a, b);
}

double ts_integrate(const std::function<double(double)>& f, double a, double b) {
  if (b <= a) return 0.0;
  thread_local boost::math::quadrature::tanh_sinh<double> rule;
  return rule.integrate(f, a, b, 1e-13);
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(Errc::InvalidProfile, std::string(what) + " must be positive and finite");
  }
}

}  // namespace

DomainProfile DomainProfile::interval(double a, double b) {
  require_positive(b - a, "interval length");
  DomainProfile p;
  p.name_ = "interval";
  p.dimension_ = 1;
  p.r_ = (b - a) / 2.0;
  p.perimeter_ = [](double) { return 2.0; };
  p.linear_ = LinearPiece{p.r_, 2.0, 0.0};
  p.bound_ = PerimeterBoundParams{p.r_, p.r_};
  p.finish();
  return p;
}

DomainProfile DomainProfile::disk(double radius) {
  require_positive(radius, "radius");
  DomainProfile p;
  p.name_ = "disk";
  p.dimension_ = 2;
  p.r_ = radius;
  p.perimeter_ = [radius](double t) { return 2.0 * pi * (radius - t); };
  p.linear_ = LinearPiece{radius, 2.0 * pi * radius, -2.0 * pi};
  p.bound_ = PerimeterBoundParams{radius, radius};
  p.finish();
  return p;
}

DomainProfile DomainProfile::square(double side) {
  require_positive(side, "side");
  DomainProfile p;
  p.name_ = "square";
  p.dimension_ = 2;
  p.r_ = side / 2.0;
  p.perimeter_ = [side](double t) { return 4.0 * (side - 2.0 * t); };
  p.linear_ = LinearPiece{p.r_, 4.0 * side, -8.0};
  p.bound_ = PerimeterBoundParams{p.r_, p.r_};
  p.finish();
  return p;
}

DomainProfile DomainProfile::lshape(double side, double delta) {
  require_positive(side, "side");
  require_positive(delta, "thickness");
  if (!(delta < side) || delta / 2.0 > side - delta) {
    throw Error(Errc::InvalidProfile, "L-shape needs delta / 2 <= L - delta");
  }
  DomainProfile p;
  p.name_ = "lshape";
  p.dimension_ = 2;
  p.r_ = (2.0 - std::sqrt(2.0)) * delta;
  const double half = delta / 2.0;
  p.perimeter_ = [side, delta, half](double t) {
    if (t <= half) return 4.0 * side - t * (20.0 - pi) / 2.0;
    // only the corner piece survives: [0, s]^2 minus the disk of radius t
    // around the reentrant corner, s = delta - t
    double s = delta - t;
    double c = std::sqrt(std::max(t * t - s * s, 0.0));
    double ratio = std::min(s / t, 1.0);
    return std::max(2.0 * (s - c) + t * (2.0 * std::asin(ratio) - pi / 2.0), 0.0);
  };
  p.linear_ = LinearPiece{half, 4.0 * side, -(20.0 - pi) / 2.0};
  p.singular_tail_ = true;
  const double r_tilde = 8.0 * side / (20.0 - pi);
  p.bound_ = PerimeterBoundParams{r_tilde, std::min(side - delta, half)};
  p.finish();
  return p;
}

DomainProfile DomainProfile::tabulated(std::vector<double> tau, std::vector<double> perimeter,
                                       int dimension, std::optional<PerimeterBoundParams> bound) {
  if (tau.size() != perimeter.size() || tau.size() < 2) {
    throw Error(Errc::InvalidProfile, "profile needs at least two (tau, perimeter) rows");
  }
  if (tau.front() != 0.0) throw Error(Errc::InvalidProfile, "profile must start at tau = 0");
  for (std::size_t i = 1; i < tau.size(); ++i) {
    if (!(tau[i] > tau[i - 1])) throw Error(Errc::InvalidProfile, "tau must be strictly increasing");
  }
  for (double v : perimeter) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw Error(Errc::InvalidProfile, "perimeter values must be finite and non-negative");
    }
  }
  if (!(perimeter.front() > 0.0)) throw Error(Errc::InvalidProfile, "P(Omega) must be positive");
  if (dimension < 1) throw Error(Errc::InvalidProfile, "dimension must be >= 1");

  DomainProfile p;
  p.name_ = "tabulated";
  p.dimension_ = dimension;
  p.r_ = tau.back();
  p.kinks_.assign(tau.begin() + 1, tau.end() - 1);
  if (tau.size() == 2) {
    double slope = (perimeter[1] - perimeter[0]) / tau[1];
    p.linear_ = LinearPiece{tau[1], perimeter[0], slope};
    double p0 = perimeter[0];
    p.perimeter_ = [p0, slope](double t) { return p0 + slope * t; };
  } else {
    auto spline = std::make_shared<boost::math::interpolators::pchip<std::vector<double>>>(
        std::move(tau), std::move(perimeter));
    p.perimeter_ = [spline](double t) { return std::max((*spline)(t), 0.0); };
    p.piecewise_cubic_ = true;
  }
  p.bound_ = bound;
  p.finish();
  return p;
}

DomainProfile DomainProfile::from_csv(std::istream& in, int dimension) {
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::MalformedInput, "empty profile CSV");
  line.erase(std::remove_if(line.begin(), line.end(), ::isspace), line.end());
  if (line != "tau,perimeter") throw Error(Errc::MalformedInput, "profile CSV header must be tau,perimeter");
  std::vector<double> tau, perimeter;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double t = 0.0, v = 0.0;
    if (!(fields >> t >> v)) {
      throw Error(Errc::MalformedInput, "profile CSV line " + std::to_string(line_no));
    }
    tau.push_back(t);
    perimeter.push_back(v);
  }
  return tabulated(std::move(tau), std::move(perimeter), dimension);
}

void DomainProfile::finish() {
  require_positive(r_, "in-radius");
  if (!(perimeter_(0.0) > 0.0)) throw Error(Errc::InvalidProfile, "P(Omega) must be positive");
  d_norm2_sq_ = integrate_upto(2, r_);
}

double DomainProfile::perimeter(double tau) const {
  if (!(tau >= 0.0 && tau <= r_)) {
    throw Error(Errc::OutOfRange, "tau = " + std::to_string(tau) + " outside [0, r]");
  }
  return perimeter_(tau);
}

double DomainProfile::integrate_upto(int k, double upper) const {
  double total = 0.0, lo = 0.0;
  if (linear_) {
    lo = std::min(upper, linear_->end);
    total = linear_->p0 * std::pow(lo, k + 1) / (k + 1) + linear_->p1 * std::pow(lo, k + 2) / (k + 2);
    if (lo >= upper) return total;
  }
  auto integrand = [this, k](double t) { return perimeter_(t) * std::pow(t, k); };
  if (singular_tail_) return total + ts_integrate(integrand, lo, upper);
  // the 30-point rule integrates polynomials up to degree 59
  auto rule = piecewise_cubic_ && k <= 56 ? gauss_integrate : gk_integrate;
  for (double kink : kinks_) {
    if (kink <= lo) continue;
    if (kink >= upper) break;
    total += rule(integrand, lo, kink);
    lo = kink;
  }
  return total + rule(integrand, lo, upper);
}

double DomainProfile::integral(int k, double g) const {
  if (k < 0) throw Error(Errc::OutOfRange, "k must be non-negative");
  if (!(g >= 0.0 && g <= 1.0)) throw Error(Errc::OutOfRange, "g = " + std::to_string(g) + " outside [0, 1]");
  return integrate_upto(k, r_ * g);
}

double DomainProfile::integral_clamped(int k, double g) const {
  return integrate_upto(k, r_ * std::clamp(g, 0.0, 1.0));
}

double DomainProfile::integral_derivative(int k, double g) const {
  if (!(g >= 0.0 && g <= 1.0)) throw Error(Errc::OutOfRange, "g = " + std::to_string(g) + " outside [0, 1]");
  return perimeter_(r_ * g) * std::pow(r_, k + 1) * std::pow(g, k);
}

double lower_bound_i2(const DomainProfile& profile, double g) {
  const auto& bound = profile.bound_params();
  if (!bound) throw Error(Errc::MissingBoundParams, "profile " + profile.name() + " has no perimeter bound");
  const double r = profile.in_radius();
  if (!(g >= 0.0 && g <= bound->tau_tilde / r * (1.0 + 1e-12))) {
    throw Error(Errc::OutOfRange, "g outside [0, tau~/r]");
  }
  const double n = profile.dimension();
  const double rt = bound->r_tilde;
  const double s = r * g / rt;
  const double a = 1.0 - s;
  double bracket = 2.0 / ((n + 1) * (n + 2)) * (1.0 - std::pow(a, n + 2)) -
                   2.0 / (n + 1) * std::pow(a, n + 1) * s - s * s * std::pow(a, n);
  return rt * rt * rt * profile.perimeter(0.0) / n * bracket;
}

PerimeterBoundReport perimeter_bound_check(const DomainProfile& profile, double r_tilde,
                                           double tau_tilde, int samples) {
  if (!(tau_tilde > 0.0 && tau_tilde <= r_tilde)) {
    throw Error(Errc::OutOfRange, "need 0 < tau~ <= r~");
  }
  if (tau_tilde > profile.in_radius()) throw Error(Errc::OutOfRange, "tau~ exceeds the in-radius");
  if (samples < 2) throw Error(Errc::OutOfRange, "need at least two samples");
  const double p0 = profile.perimeter(0.0);
  const int n = profile.dimension();
  PerimeterBoundReport report;
  report.worst_margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    double tau = tau_tilde * i / (samples - 1);
    double margin = profile.perimeter(tau) - p0 * std::pow(1.0 - tau / r_tilde, n - 1);
    report.worst_margin = std::min(report.worst_margin, margin);
  }
  report.holds = report.worst_margin >= -1e-12 * p0;
  return report;
}

}  // namespace linfeig
