#pragma once

// Continuous piecewise-linear functions on an interval with exact rational
// breakpoints and values.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace linfeig {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", integers and decimals ("-0.375", "1e-3") exactly.
/// Throws MalformedInput.
Rational parse_rational(const std::string& text);
/// Terminating decimal when the reduced denominator is 2^a 5^b, "p/q"
/// otherwise; parse_rational(format_rational(x)) == x.
std::string format_rational(const Rational& x);
double to_double(const Rational& x);

class PiecewiseLinearFn {
 public:
  /// Breakpoints strictly increasing, at least two. Throws MalformedInput.
  PiecewiseLinearFn(std::vector<Rational> breakpoints, std::vector<Rational> values);

  const std::vector<Rational>& breakpoints() const noexcept { return x_; }
  const std::vector<Rational>& values() const noexcept { return y_; }
  std::size_t segments() const noexcept { return x_.size() - 1; }
  const Rational& left() const { return x_.front(); }
  const Rational& right() const { return x_.back(); }

  Rational slope(std::size_t segment) const;
  Rational length(std::size_t segment) const { return x_[segment + 1] - x_[segment]; }
  /// Lipschitz constant max |slope|, i.e. J(f).
  Rational lipschitz() const;
  /// Throws OutOfRange outside [left, right].
  Rational operator()(const Rational& x) const;
  bool vanishes_at_ends() const { return y_.front() == 0 && y_.back() == 0; }
  bool is_zero() const;

  /// Same function with collinear interior breakpoints removed.
  PiecewiseLinearFn simplified() const;

 private:
  std::vector<Rational> x_;
  std::vector<Rational> y_;
};

/// Sorted union of both breakpoint sets; the functions must share the
/// interval (DomainMismatch).
std::vector<Rational> merged_breakpoints(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g);

PiecewiseLinearFn operator+(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g);
PiecewiseLinearFn operator-(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g);
PiecewiseLinearFn operator*(const Rational& c, const PiecewiseLinearFn& f);
bool same_function(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g);

/// Exact L2 inner product, integrating the quadratic product per segment of
/// the merged partition.
Rational inner_product(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g);

/// CSV "breakpoint,value".
PiecewiseLinearFn read_pwl_csv(std::istream& in);
void write_pwl_csv(std::ostream& out, const PiecewiseLinearFn& f);

}  // namespace linfeig
