#include "linfeig/sphere.hpp"

#include <cmath>
#include <cstdint>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include "linfeig/error.hpp"

namespace linfeig {

namespace {

template <class F>
double radial_integral(F f) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, 1.0, 15, 1e-14);
}

}  // namespace

SphereCalibration sphere_calibration(int n) {
  if (n < 1) throw Error(Errc::OutOfRange, "dimension must be >= 1");
  const double pi = boost::math::constants::pi<double>();
  SphereCalibration cal;
  cal.n = n;
  cal.sphere_area = 2.0 * std::pow(pi, n / 2.0) / std::tgamma(n / 2.0);
  cal.d_norm2_sq = cal.sphere_area * radial_integral([n](double rho) {
    return (1.0 - rho) * (1.0 - rho) * std::pow(rho, n - 1);
  });
  cal.lambda = 1.0 / cal.d_norm2_sq;

  auto flux = [&cal, n](double rho) { return std::pow(rho, n - 1) * cal.f(rho); };
  for (int i = 1; i < 1000; ++i) {
    double rho = i / 1000.0;
    double h = 1e-3 * rho;
    double deriv = (-flux(rho + 2 * h) + 8 * flux(rho + h) - 8 * flux(rho - h) + flux(rho - 2 * h)) / (12 * h);
    double lhs = deriv / std::pow(rho, n - 1);
    cal.residual = std::max(cal.residual, std::abs(lhs - cal.lambda * (1.0 - rho)));
  }

  double mass = cal.sphere_area * radial_integral(flux);
  cal.norm_gap = std::abs(mass - 1.0);

  auto slope = [&cal, n](double rho) { return cal.lambda * (1.0 / n - 2.0 * rho / (n + 1)); };
  std::uintmax_t iters = 200;
  auto bracket = boost::math::tools::toms748_solve(slope, 0.0, (n + 1.0) / n,
                                                   boost::math::tools::eps_tolerance<double>(52), iters);
  cal.argmax = 0.5 * (bracket.first + bracket.second);
  return cal;
}

}  // namespace linfeig
