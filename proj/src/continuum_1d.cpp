#include "linfeig/continuum_1d.hpp"

#include <algorithm>
#include <cmath>

#include "linfeig/error.hpp"

namespace linfeig {

namespace {

void require_boundary_zeros(const PiecewiseLinearFn& f) {
  if (!f.vanishes_at_ends()) throw Error(Errc::DomainMismatch, "f must vanish at both ends");
}

// Appends (x, y) unless x repeats the last breakpoint.
void push_point(std::vector<Rational>& xs, std::vector<Rational>& ys, const Rational& x, const Rational& y) {
  if (!xs.empty() && xs.back() == x) return;
  xs.push_back(x);
  ys.push_back(y);
}

}  // namespace

PiecewiseLinearFn basis_function(BasisKind kind, int n) {
  if (n < 1) throw Error(Errc::InvalidIndex, "basis index must be >= 1");
  const int cells = kind == BasisKind::Odd ? 2 * n : 2 * n - 1;
  const Rational h = Rational(2, cells);
  std::vector<Rational> xs{Rational(-1)}, ys{Rational(0)};
  for (int k = 1; k <= cells; ++k) {
    Rational left = Rational(-1) + h * (k - 1);
    Rational sign = (k % 2 == 1) ? 1 : -1;
    xs.push_back(left + h / 2);
    ys.push_back(sign * h / 2);
    xs.push_back(left + h);
    ys.push_back(0);
  }
  return {std::move(xs), std::move(ys)};
}

Rational rayleigh_quotient_sq(const PiecewiseLinearFn& f) {
  if (f.is_zero()) throw Error(Errc::ZeroFunction, "f is identically zero");
  Rational lip = f.lipschitz();
  return lip * lip / inner_product(f, f);
}

double rayleigh_quotient(const PiecewiseLinearFn& f) { return std::sqrt(to_double(rayleigh_quotient_sq(f))); }

Rational ClosedSetApprox::measure() const {
  Rational total = 0;
  for (const auto& [l, r] : intervals) total += r - l;
  return total;
}

ClosedSetApprox svc_set(int level) {
  if (level < 0) throw Error(Errc::InvalidIndex, "level must be >= 0");
  ClosedSetApprox set;
  set.level = level;
  set.intervals = {{Rational(0), Rational(1)}};
  Rational gap = 1;
  for (int k = 1; k <= level; ++k) {
    gap /= 4;
    std::vector<std::pair<Rational, Rational>> next;
    next.reserve(2 * set.intervals.size());
    for (const auto& [l, r] : set.intervals) {
      Rational mid = (l + r) / 2;
      next.emplace_back(l, mid - gap / 2);
      next.emplace_back(mid + gap / 2, r);
    }
    set.intervals = std::move(next);
  }
  return set;
}

PiecewiseLinearFn distance_to_set(const ClosedSetApprox& set) {
  if (set.intervals.empty()) throw Error(Errc::DomainMismatch, "the set is empty");
  auto blocks = set.intervals;
  std::sort(blocks.begin(), blocks.end());
  std::vector<Rational> xs, ys;
  if (blocks.front().first > 0) push_point(xs, ys, Rational(0), blocks.front().first);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& [l, r] = blocks[i];
    if (l < 0 || r > 1 || r < l) throw Error(Errc::DomainMismatch, "set must consist of intervals in [0, 1]");
    if (i > 0 && l <= blocks[i - 1].second) throw Error(Errc::DomainMismatch, "intervals must be disjoint");
    if (i > 0) {
      Rational prev = blocks[i - 1].second;
      push_point(xs, ys, (prev + l) / 2, (l - prev) / 2);
    }
    push_point(xs, ys, l, Rational(0));
    push_point(xs, ys, r, Rational(0));
  }
  if (blocks.back().second < 1) push_point(xs, ys, Rational(1), 1 - blocks.back().second);
  return {std::move(xs), std::move(ys)};
}

Extreme1dResult extreme_check_1d(const PiecewiseLinearFn& f, const Rational& tol) {
  require_boundary_zeros(f);
  if (f.lipschitz() > 1 + tol) throw Error(Errc::NotInUnitBall, "Lip(f) exceeds 1");

  const Rational threshold = 1 - tol;
  Extreme1dResult result;
  Rational max_slack_slope = 0;
  for (std::size_t s = 0; s < f.segments(); ++s) {
    Rational m = abs(f.slope(s));
    if (m < threshold) {
      result.slack_measure += f.length(s);
      max_slack_slope = std::max(max_slack_slope, m);
    }
  }
  result.extreme = result.slack_measure == 0;
  if (result.extreme) return result;

  ExtremeDecomposition dec{1 - max_slack_slope, Rational(0), f, f};
  // alpha splits the slack set into halves of equal measure
  const Rational half = result.slack_measure / 2;
  Rational seen = 0;
  for (std::size_t s = 0; s < f.segments(); ++s) {
    if (!(abs(f.slope(s)) < threshold)) continue;
    if (seen + f.length(s) >= half) {
      dec.alpha = f.breakpoints()[s] + (half - seen);
      break;
    }
    seen += f.length(s);
  }

  std::vector<Rational> xs = f.breakpoints();
  if (!std::binary_search(xs.begin(), xs.end(), dec.alpha)) {
    xs.insert(std::upper_bound(xs.begin(), xs.end(), dec.alpha), dec.alpha);
  }
  std::vector<Rational> plus{0}, minus{0};
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    Rational h = xs[i + 1] - xs[i];
    Rational m = (f(xs[i + 1]) - f(xs[i])) / h;
    Rational shift = 0;
    if (abs(m) < threshold) shift = xs[i + 1] <= dec.alpha ? dec.epsilon : Rational(-dec.epsilon);
    plus.push_back(plus.back() + (m + shift) * h);
    minus.push_back(minus.back() + (m - shift) * h);
  }
  dec.v_plus = PiecewiseLinearFn(xs, std::move(plus));
  dec.v_minus = PiecewiseLinearFn(xs, std::move(minus));

  dec.average_matches = same_function(Rational(1, 2) * (dec.v_plus + dec.v_minus), f);
  dec.unit_lipschitz = dec.v_plus.lipschitz() <= 1 && dec.v_minus.lipschitz() <= 1;
  dec.distinct = !same_function(dec.v_plus, dec.v_minus);
  dec.boundary_zero = dec.v_plus.vanishes_at_ends() && dec.v_minus.vanishes_at_ends();
  result.decomposition = std::move(dec);
  return result;
}

Eigen1dResult eigen_check_1d(const PiecewiseLinearFn& f, const Rational& tol) {
  require_boundary_zeros(f);
  if (f.is_zero()) throw Error(Errc::ZeroFunction, "f is identically zero");

  const auto& y = f.values();
  const Rational jf = f.lipschitz();
  Eigen1dResult result;
  result.lambda = jf / inner_product(f, f);
  const Rational& lambda = result.lambda;

  // antiderivative F at the breakpoints, F(a) = 0
  std::vector<Rational> big_f{0};
  for (std::size_t s = 0; s < f.segments(); ++s) {
    big_f.push_back(big_f.back() + f.length(s) * (y[s] + y[s + 1]) / 2);
  }
  auto f_at = [&](std::size_t s, const Rational& t) {  // F(x_s + t) on segment s
    return big_f[s] + y[s] * t + f.slope(s) * t * t / 2;
  };

  std::optional<Rational> low, high, forced;
  for (std::size_t s = 0; s < f.segments(); ++s) {
    const Rational m = f.slope(s), h = f.length(s);
    if (abs(m) < jf - tol) {
      if (y[s] != 0 || y[s + 1] != 0) {
        result.reason = "f is nonzero on a segment where |f'| < J(f)";
        return result;
      }
      Rational c = lambda * big_f[s];
      if (forced && *forced != c) {
        result.reason = "slack segments force different constants";
        return result;
      }
      forced = c;
      continue;
    }
    Rational lo = std::min(big_f[s], big_f[s + 1]), hi = std::max(big_f[s], big_f[s + 1]);
    Rational t_root = -y[s] / m;  // where f changes sign
    if (t_root > 0 && t_root < h) {
      Rational v = f_at(s, t_root);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (m > 0) {
      Rational bound = lambda * hi;  // q = c - lambda F >= 0
      low = low ? std::max(*low, bound) : bound;
    } else {
      Rational bound = lambda * lo;  // q <= 0
      high = high ? std::min(*high, bound) : bound;
    }
  }

  if (forced) {
    result.c_low = result.c_high = *forced;
    if ((low && *low > *forced) || (high && *high < *forced)) {
      result.reason = "forced constant violates the sign conditions";
      return result;
    }
  } else {
    result.c_low = low ? *low : (high ? *high : Rational(0));
    result.c_high = high ? *high : result.c_low;
    if (result.c_low > result.c_high) {
      result.reason = "sign conditions admit no constant";
      return result;
    }
  }
  result.c = (result.c_low + result.c_high) / 2;
  result.feasible = true;

  for (std::size_t s = 0; s < f.segments(); ++s) {
    const Rational h = f.length(s);
    Rational integral_f = h / 6 * (big_f[s] + 4 * f_at(s, h / 2) + big_f[s + 1]);
    result.q_norm1 += abs(result.c * h - lambda * integral_f);
  }
  return result;
}

}  // namespace linfeig
