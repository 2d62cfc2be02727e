#pragma once

// Continuum domains described only through their inner parallel bodies
// Omega_tau = {x : dist(x, boundary) >= tau}: in-radius r, perimeter profile
// tau -> P(Omega_tau) on [0, r] and the integrals
//   I_k(g) = int_0^{r g} P(Omega_t) t^k dt.

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace linfeig {

struct PerimeterBoundParams {
  double r_tilde = 0.0;
  double tau_tilde = 0.0;
};

class DomainProfile {
 public:
  /// (a, b) in one dimension: r = (b - a) / 2, P = 2.
  static DomainProfile interval(double a, double b);
  /// Disk of radius R: P(Omega_tau) = 2 pi (R - tau).
  static DomainProfile disk(double radius);
  /// Square of side L: P(Omega_tau) = 4 (L - 2 tau), r = L / 2.
  static DomainProfile square(double side);
  /// [0, L]^2 minus [0, L - delta]^2. Needs delta / 2 <= L - delta.
  static DomainProfile lshape(double side, double delta);
  /// Tabulated profile, tau strictly increasing from 0 to r, interpolated by
  /// monotone cubic (PCHIP) splines.
  static DomainProfile tabulated(std::vector<double> tau, std::vector<double> perimeter,
                                 int dimension,
                                 std::optional<PerimeterBoundParams> bound = std::nullopt);
  /// CSV with header "tau,perimeter".
  static DomainProfile from_csv(std::istream& in, int dimension);

  const std::string& name() const noexcept { return name_; }
  int dimension() const noexcept { return dimension_; }
  double in_radius() const noexcept { return r_; }
  const std::optional<PerimeterBoundParams>& bound_params() const noexcept { return bound_; }

  /// P(Omega_tau) for tau in [0, r]; throws OutOfRange otherwise.
  double perimeter(double tau) const;

  /// I_k(g) for g in [0, 1]; throws OutOfRange otherwise.
  double integral(int k, double g) const;
  /// I_k'(g) = P(Omega_{r g}) r^{k+1} g^k.
  double integral_derivative(int k, double g) const;
  /// ||d||_2^2 = I_2(1) by the coarea formula.
  double d_norm2_sq() const noexcept { return d_norm2_sq_; }

  /// I_k evaluated at min(g, 1) with g >= 0; the ODE stepper may probe g > 1.
  double integral_clamped(int k, double g) const;

 private:
  DomainProfile() = default;
  void finish();
  double integrate_upto(int k, double upper) const;

  std::string name_;
  int dimension_ = 2;
  double r_ = 0.0;
  std::function<double(double)> perimeter_;
  /// Interior points where P may be non-smooth; quadrature splits there.
  std::vector<double> kinks_;
  /// P(Omega_t) = p0 + p1 t on [0, end]; integrated in closed form there.
  struct LinearPiece {
    double end = 0.0;
    double p0 = 0.0;
    double p1 = 0.0;
  };
  std::optional<LinearPiece> linear_;
  /// Remainder has endpoint singularities in P' (tanh-sinh instead of
  /// Gauss-Kronrod).
  bool singular_tail_ = false;
  // cubic between kinks, so a fixed Gauss rule is exact
  bool piecewise_cubic_ = false;
  std::optional<PerimeterBoundParams> bound_;
  double d_norm2_sq_ = 0.0;
};

/// Lower bound for I_2(g) from a perimeter bound (r~, tau~):
///   r~^3 P / n { 2/((n+1)(n+2)) [1 - (1-s)^{n+2}] - 2/(n+1) (1-s)^{n+1} s - s^2 (1-s)^n }
/// with s = r g / r~. Needs 0 <= g <= tau~ / r. Throws MissingBoundParams
/// or OutOfRange.
double lower_bound_i2(const DomainProfile& profile, double g);

struct PerimeterBoundReport {
  bool holds = false;
  /// min over samples of P(Omega_tau) - P(Omega)(1 - tau/r~)^{n-1}.
  double worst_margin = 0.0;
};

/// Checks P(Omega_tau) >= P(Omega)(1 - tau/r~)^{n-1} at `samples` equally
/// spaced tau in [0, tau~], up to a relative rounding slack of 1e-12.
PerimeterBoundReport perimeter_bound_check(const DomainProfile& profile, double r_tilde,
                                           double tau_tilde, int samples);

}  // namespace linfeig
