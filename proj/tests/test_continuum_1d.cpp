#include <doctest.h>

#include <fstream>
#include <sstream>

#include "linfeig/continuum_1d.hpp"
#include "linfeig/error.hpp"

using namespace linfeig;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

PiecewiseLinearFn pwl(std::vector<Rational> xs, std::vector<Rational> ys) { return {std::move(xs), std::move(ys)}; }

PiecewiseLinearFn hat() { return pwl({q(-1), q(0), q(1)}, {q(0), q(1), q(0)}); }

PiecewiseLinearFn read_fixture(const char* name) {
  std::ifstream in(std::string(LINFEIG_FIXTURES "/") + name);
  return read_pwl_csv(in);
}

}  // namespace

TEST_CASE("exact decimal parsing and formatting") {
  CHECK(parse_rational("0.375") == q(3, 8));
  CHECK(parse_rational("-0.75") == q(-3, 4));
  CHECK(parse_rational("075") == q(75));
  CHECK(parse_rational("1e-3") == q(1, 1000));
  CHECK(parse_rational("2.5E2") == q(250));
  CHECK(parse_rational(" 1/3 ") == q(1, 3));
  CHECK(parse_rational("0.1") == q(1, 10));
  for (const char* bad : {"", "abc", "1.2.3", "1/0", "1e", "--1"}) CHECK_THROWS_AS(parse_rational(bad), Error);
  CHECK(format_rational(q(65, 128)) == "0.5078125");
  CHECK(format_rational(q(-3, 8)) == "-0.375");
  CHECK(format_rational(q(1, 3)) == "1/3");
  CHECK(format_rational(q(7)) == "7");
  CHECK(format_rational(q(-1, 20)) == "-0.05");
  for (auto x : {q(1, 3), q(-7, 40), q(123456789, 1024), q(0), q(-5, 6)}) CHECK(parse_rational(format_rational(x)) == x);
}

TEST_CASE("piecewise-linear arithmetic") {
  auto f = hat();
  CHECK(f(q(1, 2)) == q(1, 2));
  CHECK(f.lipschitz() == 1);
  CHECK(f.vanishes_at_ends());
  auto g = pwl({q(-1), q(-1, 2), q(1)}, {q(0), q(1, 2), q(0)});
  auto sum = f + g;
  CHECK(sum.breakpoints().size() == 4);
  CHECK(sum(q(0)) == 1 + g(q(0)));
  CHECK(same_function(sum - g, f));
  CHECK(same_function(q(2) * f, f + f));
  auto extra = pwl({q(-1), q(-1, 2), q(0), q(1)}, {q(0), q(1, 2), q(1), q(0)});
  CHECK(same_function(extra, f));
  CHECK(extra.simplified().breakpoints() == f.breakpoints());
  CHECK_THROWS_AS(f(q(2)), Error);
  CHECK_THROWS_AS(pwl({q(0), q(0)}, {q(0), q(0)}), Error);
  CHECK_THROWS_AS(f + pwl({q(0), q(1)}, {q(0), q(0)}), Error);
}

namespace {

int two_adic(int n) {
  int k = 0;
  for (; n % 2 == 0; n /= 2) ++k;
  return k;
}

// Simpson's rule on a uniform grid fine enough that every cell sees quadratic integrands only
Rational simpson_inner(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g, int cells) {
  Rational total = 0, h = Rational(2, cells);
  for (int i = 0; i < cells; ++i) {
    Rational a = Rational(-1) + h * i, b = a + h, c = (a + b) / 2;
    total += h / 6 * (f(a) * g(a) + 4 * f(c) * g(c) + f(b) * g(b));
  }
  return total;
}

}  // namespace

TEST_CASE("inner products") {
  CHECK(inner_product(hat(), hat()) == q(2, 3));
  CHECK(inner_product(basis_function(BasisKind::Odd, 1), basis_function(BasisKind::Odd, 2)) == 0);
  for (int n = 1; n <= 8; ++n)
    for (int m = 1; m <= 8; ++m) {
      CHECK(inner_product(basis_function(BasisKind::Odd, n), basis_function(BasisKind::Even, m)) == 0);
      if (n == m) continue;
      auto un = basis_function(BasisKind::Odd, n), um = basis_function(BasisKind::Odd, m);
      CHECK(inner_product(un, um) == simpson_inner(un, um, 4 * n * m));
      // zero exactly when n and m carry different powers of two
      CHECK((inner_product(un, um) == 0) == (two_adic(n) != two_adic(m)));
    }
  CHECK(inner_product(basis_function(BasisKind::Odd, 1), basis_function(BasisKind::Odd, 3)) == q(-1, 162));
  CHECK(inner_product(basis_function(BasisKind::Odd, 2), basis_function(BasisKind::Odd, 6)) == q(-1, 648));
}

TEST_CASE("basis shapes") {
  auto v1 = basis_function(BasisKind::Even, 1);
  CHECK(same_function(v1, hat()));
  auto u1 = basis_function(BasisKind::Odd, 1);
  CHECK(u1(q(0)) == 0);
  CHECK(u1(q(-1, 2)) == q(1, 2));
  CHECK(u1(q(1, 2)) == q(-1, 2));
  auto v2 = basis_function(BasisKind::Even, 2);
  CHECK(v2(q(-2, 3)) == q(1, 3));
  CHECK(v2(q(0)) == q(-1, 3));
  CHECK(v2(q(2, 3)) == q(1, 3));
  for (int n = 1; n <= 8; ++n) {
    auto u = basis_function(BasisKind::Odd, n), v = basis_function(BasisKind::Even, n);
    CHECK(u.lipschitz() == 1);
    CHECK(v.lipschitz() == 1);
    for (const auto& x : u.breakpoints()) {
      CHECK(u(-x) == -u(x));
      CHECK(v(-x) == v(x));
    }
    // nodal sets are finite: zeros only at breakpoints, never on a segment
    for (const auto* f : {&u, &v}) {
      for (std::size_t s = 0; s < f->segments(); ++s) CHECK(f->slope(s) != 0);
    }
  }
  CHECK_THROWS_AS(basis_function(BasisKind::Odd, 0), Error);
}

TEST_CASE("Rayleigh quotients are exact") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(rayleigh_quotient_sq(basis_function(BasisKind::Odd, n)) == q(3, 2) * 4 * n * n);
    CHECK(rayleigh_quotient_sq(basis_function(BasisKind::Even, n)) == q(3, 2) * (2 * n - 1) * (2 * n - 1));
  }
  CHECK(rayleigh_quotient(basis_function(BasisKind::Odd, 1)) == doctest::Approx(std::sqrt(1.5) * 2));
  for (auto c : {q(-3), q(1, 7), q(5, 2)}) CHECK(rayleigh_quotient_sq(c * hat()) == rayleigh_quotient_sq(hat()));
  CHECK_THROWS_AS(rayleigh_quotient_sq(pwl({q(0), q(1)}, {q(0), q(0)})), Error);
}

TEST_CASE("1D eigenfunction checks") {
  auto v1 = eigen_check_1d(basis_function(BasisKind::Even, 1));
  REQUIRE(v1.feasible);
  CHECK(v1.lambda == q(3, 2));
  CHECK(v1.q_norm1 == 1);
  auto u1 = eigen_check_1d(basis_function(BasisKind::Odd, 1));
  REQUIRE(u1.feasible);
  CHECK(u1.lambda == 6);

  int nonnegative = 0;
  for (int n = 1; n <= 8; ++n) {
    for (auto kind : {BasisKind::Odd, BasisKind::Even}) {
      auto f = basis_function(kind, n);
      auto r = eigen_check_1d(f);
      REQUIRE(r.feasible);
      CHECK(r.q_norm1 == 1);
      // lambda ||f||^2 = J(f), i.e. lambda = R(f)^2 since J(f) = 1
      CHECK(r.lambda * inner_product(f, f) == f.lipschitz());
      CHECK(r.lambda == rayleigh_quotient_sq(f));
      bool nonneg = std::all_of(f.values().begin(), f.values().end(), [](const Rational& v) { return v >= 0; });
      if (nonneg) {
        ++nonnegative;
        CHECK(same_function(f, hat()));
      }
    }
  }
  CHECK(nonnegative == 1);

  // a bump with a flat top: the calibration would have to vanish there
  auto bump = pwl({q(0), q(1, 4), q(1, 2), q(1)}, {q(0), q(1, 4), q(1, 4), q(0)});
  auto r = eigen_check_1d(bump);
  CHECK_FALSE(r.feasible);
  CHECK_FALSE(r.reason.empty());
  // asymmetric tent: its antiderivative cannot balance
  auto skew = pwl({q(0), q(1, 4), q(1, 2), q(1)}, {q(0), q(1, 4), q(1, 8), q(0)});
  CHECK_FALSE(eigen_check_1d(skew).feasible);

  CHECK_THROWS_AS(eigen_check_1d(pwl({q(0), q(1)}, {q(0), q(0)})), Error);
  CHECK_THROWS_AS(eigen_check_1d(pwl({q(0), q(1)}, {q(1), q(0)})), Error);
}

TEST_CASE("Smith-Volterra-Cantor sets") {
  auto zero = svc_set(0);
  CHECK(zero.intervals.size() == 1);
  CHECK(zero.measure() == 1);
  auto one = svc_set(1);
  REQUIRE(one.intervals.size() == 2);
  CHECK(one.intervals[0] == std::pair{q(0), q(3, 8)});
  CHECK(one.intervals[1] == std::pair{q(5, 8), q(1)});
  CHECK(one.measure() == q(3, 4));
  for (int n = 1; n <= 10; ++n) {
    auto set = svc_set(n);
    CHECK(set.intervals.size() == (std::size_t{1} << n));
    Rational removed = 0, pow2 = 1, pow4 = 1;
    for (int k = 1; k <= n; ++k) {
      pow4 /= 4;
      removed += pow2 * pow4;
      pow2 *= 2;
    }
    CHECK(set.measure() == 1 - removed);
    CHECK(set.measure() - q(1, 2) == Rational(1) / (pow2 * 2));
  }
  CHECK_THROWS_AS(svc_set(-1), Error);
}

TEST_CASE("distance to closed sets") {
  ClosedSetApprox ends;
  ends.intervals = {{q(0), q(0)}, {q(1), q(1)}};
  CHECK(same_function(distance_to_set(ends), pwl({q(0), q(1, 2), q(1)}, {q(0), q(1, 2), q(0)})));

  auto d1 = distance_to_set(svc_set(1));
  CHECK(d1(q(1, 2)) == q(1, 8));
  CHECK(d1(q(3, 8)) == 0);
  CHECK(d1(q(1, 4)) == 0);
  for (int n = 1; n <= 6; ++n) {
    auto d = distance_to_set(svc_set(n));
    Rational saturated = 0;
    for (std::size_t s = 0; s < d.segments(); ++s) {
      auto m = abs(d.slope(s));
      CHECK((m == 0 || m == 1));
      if (m == 1) saturated += d.length(s);
    }
    CHECK(saturated == 1 - svc_set(n).measure());
  }
  CHECK_THROWS_AS(distance_to_set(ClosedSetApprox{}), Error);
}

TEST_CASE("1D extreme points") {
  CHECK(extreme_check_1d(hat()).extreme);
  for (int n = 1; n <= 5; ++n) {
    CHECK(extreme_check_1d(basis_function(BasisKind::Odd, n)).extreme);
    CHECK(extreme_check_1d(basis_function(BasisKind::Even, n)).extreme);
  }

  auto svc = extreme_check_1d(distance_to_set(svc_set(6)));
  CHECK_FALSE(svc.extreme);
  CHECK(svc.slack_measure == q(65, 128));
  REQUIRE(svc.decomposition);
  const auto& dec = *svc.decomposition;
  CHECK(dec.verified());
  CHECK(dec.epsilon == 1);
  CHECK(dec.v_plus.lipschitz() == 1);
  CHECK(dec.v_minus.lipschitz() == 1);
  auto f = distance_to_set(svc_set(6));
  CHECK(same_function(q(1, 2) * (dec.v_plus + dec.v_minus), f));

  auto trap = read_fixture("trapezoid.csv");
  auto r = extreme_check_1d(trap);
  CHECK_FALSE(r.extreme);
  CHECK(r.slack_measure == q(1, 2));
  REQUIRE(r.decomposition);
  CHECK(r.decomposition->verified());
  CHECK(r.decomposition->epsilon == 1);

  // partially saturated slopes still give a valid split
  auto gentle = pwl({q(0), q(1, 2), q(1)}, {q(0), q(1, 4), q(0)});
  auto g = extreme_check_1d(gentle);
  REQUIRE(g.decomposition);
  CHECK(g.decomposition->epsilon == q(1, 2));
  CHECK(g.decomposition->verified());

  CHECK_THROWS_AS(extreme_check_1d(q(2) * hat()), Error);
  CHECK_THROWS_AS(extreme_check_1d(pwl({q(0), q(1)}, {q(1, 2), q(0)})), Error);
}

TEST_CASE("sandwich property on random slope patterns") {
  // slopes +-1 only: extreme; any slack segment: not extreme
  std::uint32_t state = 12345;
  auto next = [&] { return state = state * 1664525u + 1013904223u; };
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> xs{q(0)}, ys{q(0)};
    int segments = 2 + static_cast<int>(next() % 6) * 2;
    bool slack = trial % 2 == 1;
    for (int s = 0; s < segments; ++s) {
      Rational h = q(1 + static_cast<long>(next() % 4), 8);
      Rational slope = s < segments / 2 ? 1 : -1;
      if (slack && s == 0) slope = q(1, 2);
      if (slack && s == segments - 1) slope = q(-1, 2);
      xs.push_back(xs.back() + h);
      ys.push_back(ys.back() + slope * h);
    }
    // close the function at zero with a final saturated segment
    Rational end = ys.back();
    if (end != 0) {
      xs.push_back(xs.back() + abs(end));
      ys.push_back(q(0));
    }
    PiecewiseLinearFn f(xs, ys);
    auto r = extreme_check_1d(f);
    CHECK(r.extreme == !slack);
    if (!r.extreme) {
      REQUIRE(r.decomposition);
      CHECK(r.decomposition->verified());
    }
  }
}

TEST_CASE("function CSV round trip") {
  auto f = basis_function(BasisKind::Even, 3);
  std::stringstream io;
  write_pwl_csv(io, f);
  CHECK(io.str().rfind("breakpoint,value\n", 0) == 0);
  CHECK(same_function(read_pwl_csv(io), f));
  auto hat_file = read_fixture("hat.csv");
  CHECK(same_function(hat_file, hat()));
  std::istringstream bad("x,y\n0,0\n");
  CHECK_THROWS_AS(read_pwl_csv(bad), Error);
}
