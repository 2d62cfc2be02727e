#pragma once

// One-dimensional eigenfunctions and extreme points of the unit Lipschitz
// ball {J <= 1}, J(u) = Lip(u), computed exactly on piecewise-linear data.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linfeig/piecewise_linear.hpp"

namespace linfeig {

enum class BasisKind { Odd, Even };

/// On [-1, 1]: u_n (odd) has 2n equal cells, v_n (even) has 2n - 1; cell k
/// carries (-1)^{k+1} times its own distance function. Throws InvalidIndex
/// for n < 1.
PiecewiseLinearFn basis_function(BasisKind kind, int n);

/// Lip(f)^2 / ||f||_2^2, exact. Throws ZeroFunction.
Rational rayleigh_quotient_sq(const PiecewiseLinearFn& f);
/// Lip(f) / ||f||_2.
double rayleigh_quotient(const PiecewiseLinearFn& f);

struct ClosedSetApprox {
  int level = 0;
  /// Disjoint closed intervals in [0, 1], ascending.
  std::vector<std::pair<Rational, Rational>> intervals;
  Rational measure() const;
};

/// Fat Smith-Volterra-Cantor set after N steps: step k removes the open
/// middle of length 4^{-k} from each of the 2^{k-1} surviving intervals.
ClosedSetApprox svc_set(int level);

/// dist(x, F) on [0, 1] for F given by closed intervals (points allowed as
/// degenerate intervals). Throws DomainMismatch if F is empty.
PiecewiseLinearFn distance_to_set(const ClosedSetApprox& set);

struct ExtremeDecomposition {
  Rational epsilon;
  /// Split point of the slack set: half of its measure lies left of alpha.
  Rational alpha;
  PiecewiseLinearFn v_plus;
  PiecewiseLinearFn v_minus;
  bool average_matches = false;  // f == (v_plus + v_minus) / 2
  bool unit_lipschitz = false;   // Lip(v_plus), Lip(v_minus) <= 1
  bool distinct = false;         // v_plus != v_minus
  bool boundary_zero = false;
  bool verified() const { return average_matches && unit_lipschitz && distinct && boundary_zero; }
};

struct Extreme1dResult {
  bool extreme = false;
  /// Total length of segments with |slope| < 1 - tol.
  Rational slack_measure;
  std::optional<ExtremeDecomposition> decomposition;
};

/// Extreme iff no segment has |slope| < 1 - tol; otherwise builds
/// v_pm = int g_pm with g_pm = f' +- eps left of alpha and f' -+ eps right
/// of it on the slack set. Throws NotInUnitBall when Lip(f) > 1 + tol and
/// DomainMismatch when f does not vanish at the ends.
Extreme1dResult extreme_check_1d(const PiecewiseLinearFn& f, const Rational& tol = 0);

struct Eigen1dResult {
  bool feasible = false;
  Rational lambda;  // J(f) / ||f||_2^2
  /// Calibration q(x) = c - lambda int_a^x f; [c_low, c_high] is the set of
  /// admissible constants (empty when c_low > c_high).
  Rational c;
  Rational c_low;
  Rational c_high;
  /// int |q| computed segmentwise; equals 1 whenever feasible.
  Rational q_norm1;
  std::string reason;
};

/// Searches a calibration with -q' = lambda f, q = 0 where |f'| < J(f) and
/// q f' >= 0 elsewhere. Throws ZeroFunction and DomainMismatch.
Eigen1dResult eigen_check_1d(const PiecewiseLinearFn& f, const Rational& tol = 0);

}  // namespace linfeig
