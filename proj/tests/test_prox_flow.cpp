#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <random>
#include <span>
#include <sstream>

#include "linfeig/error.hpp"
#include "linfeig/flow.hpp"
#include "linfeig/graph_distance.hpp"
#include "linfeig/graph_io.hpp"
#include "linfeig/prox.hpp"
#include "linfeig/spectral.hpp"
#include "oracles.hpp"

using namespace linfeig;

namespace {

VertexFunction random_interior(const WeightedGraph& g, std::mt19937_64& rng, double spread = 2.0) {
  std::uniform_real_distribution<double> dist(-spread, spread);
  VertexFunction f(g.num_vertices());
  for (std::size_t x = 0; x < f.size(); ++x) f[x] = g.is_boundary(x) ? 0.0 : dist(rng);
  return f;
}

double max_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace

TEST_CASE("prox closed forms on the 3-path") {
  auto g = path_graph(3);
  VertexFunction f{0, 1, 0};
  auto u = prox_jw(g, f, 0.3, 1e-12);
  CHECK(u[0] == 0.0);
  CHECK(u[1] == doctest::Approx(0.7).epsilon(1e-9));
  CHECK(u[2] == 0.0);
  for (double tau : {1.0, 1.5, 10.0}) CHECK(norm_p(prox_jw(g, f, tau, 1e-12), 2.0) <= 1e-6);
  CHECK(prox_jw(g, f, 0.0, 1e-12) == f);
  // boundary values are projected away first
  CHECK(prox_jw(g, VertexFunction{5, 1, -2}, 0.0, 1e-12) == f);
  CHECK_THROWS_AS(prox_jw(g, f, -0.1, 1e-12), Error);
}

TEST_CASE("prox agrees with the enumerated QP") {
  std::mt19937_64 rng(12);
  int zero_cases = 0;
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    std::size_t n = 3 + trial % 4;
    std::size_t m = std::min<std::size_t>(n - 1 + trial % 3, n * (n - 1) / 2);
    auto g = random_connected_graph(n, m, 5000 + trial);
    auto f = random_interior(g, rng);
    for (double tau : {0.05, 0.3, 1.0}) {
      std::vector<double> fv(f.values().begin(), f.values().end());
      auto ref = oracle::prox_qp(g, fv, tau);
      std::vector<double> expected = ref ? *ref : std::vector<double>(n, 0.0);
      if (!ref) ++zero_cases;
      auto got = prox_jw(g, f, tau, 1e-12);
      CHECK(max_diff(got.values(), expected) <= 1e-6);
      std::vector<double> gv(got.values().begin(), got.values().end());
      CHECK(oracle::prox_objective(g, fv, expected, tau) <= oracle::prox_objective(g, fv, gv, tau) + 1e-9);
    }
  }
  MESSAGE("instances with zero prox: " << zero_cases);
}

TEST_CASE("prox gap and dual") {
  auto g = random_connected_graph(12, 25, 8);
  std::mt19937_64 rng(3);
  auto f = random_interior(g, rng);
  ProxOptions opt;
  opt.tol = 1e-11;
  auto res = prox_jw_solve(g, f, 0.4, opt);
  CHECK(res.gap <= 1e-11);
  CHECK(res.iterations > 0);
  double l1 = 0.0;
  for (double y : res.dual) l1 += std::abs(y);
  CHECK(l1 <= 0.4 * (1 + 1e-9));
  // warm start from the converged dual finishes almost at once
  auto warm = prox_jw_solve(g, f, 0.4, opt, &res.dual);
  CHECK(warm.iterations <= res.iterations);
  CHECK(max_diff(warm.u.values(), res.u.values()) <= 1e-5);

  ProxOptions tight;
  tight.tol = 1e-14;
  tight.max_iters = 5;
  try {
    prox_jw_solve(g, f, 0.4, tight);
    FAIL("expected non-convergence");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonconvergedAfterMaxIters);
    CHECK(is_numerical(e.code()));
  }
}

TEST_CASE("prox properties") {
  std::mt19937_64 rng(77);
  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    auto g = random_connected_graph(8, 12, 800 + trial);
    auto f = random_interior(g, rng), h = random_interior(g, rng);
    double tau = 0.1 + 0.1 * static_cast<double>(trial % 5);
    auto pf = prox_jw(g, f, tau, 1e-13), ph = prox_jw(g, h, tau, 1e-13);
    CHECK(norm_p(pf, 2.0) <= norm_p(f, 2.0) + 1e-9);
    VertexFunction df(f.size()), dp(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
      df[x] = f[x] - h[x];
      dp[x] = pf[x] - ph[x];
    }
    CHECK(norm_p(dp, 2.0) <= norm_p(df, 2.0) + 1e-6);
    // positive homogeneity: prox(c f, c tau) = c prox(f, tau)
    VertexFunction cf = f;
    for (auto& v : cf.values()) v *= 2.5;
    auto pcf = prox_jw(g, cf, 2.5 * tau, 1e-13);
    for (std::size_t x = 0; x < f.size(); ++x) CHECK(pcf[x] == doctest::Approx(2.5 * pf[x]).scale(1.0).epsilon(1e-6));
    CHECK(norm_p(prox_jw(g, VertexFunction(g.num_vertices()), tau, 1e-12), 2.0) == 0.0);
  }
}

TEST_CASE("flow on the 3-path decays linearly") {
  auto g = path_graph(3);
  FlowOptions opt;
  opt.step = 0.01;
  auto traj = gradient_flow(g, VertexFunction{0, 1, 0}, opt);
  REQUIRE(traj.states.size() > 2);
  CHECK(traj.times.front() == 0.0);
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    CHECK(traj.states[k][1] == doctest::Approx(std::max(1.0 - traj.times[k], 0.0)).scale(1.0).epsilon(1e-8));
  }
  CHECK(std::abs(traj.extinction_time_estimate - 1.0) <= 2 * opt.step);
  auto est = asymptotic_profile(traj, g);
  CHECK(est.profile == VertexFunction{0, 1, 0});
  CHECK(est.lambda_est == doctest::Approx(1.0));
}

TEST_CASE("flow started at a distance function keeps its shape") {
  for (auto g : {path_graph(6), grid_graph(6, 5, GridBoundary::Ring)}) {
    auto d = graph_distance(g).d;
    VertexFunction f = d;
    for (auto& v : f.values()) v *= 3.0;
    auto traj = gradient_flow(g, f);
    const double lambda = 1.0 / inner(d, d);
    for (std::size_t k = 0; k + 1 < traj.norms.size(); ++k) CHECK(traj.norms[k + 1] < traj.norms[k]);
    // u(t) = (3 - t / ||d||^2)_+ d
    for (std::size_t k = 1; k < traj.states.size(); ++k) {
      double c = std::max(3.0 - traj.times[k] / inner(d, d), 0.0);
      for (std::size_t x = 0; x < d.size(); ++x) CHECK(traj.states[k][x] == doctest::Approx(c * d[x]).scale(1.0).epsilon(1e-7));
    }
    auto est = asymptotic_profile(traj, g);
    double dn = norm_p(d, 2.0);
    for (std::size_t x = 0; x < d.size(); ++x) CHECK(est.profile[x] == doctest::Approx(d[x] / dn).epsilon(1e-8));
    CHECK(est.lambda_unit_lipschitz == doctest::Approx(lambda).epsilon(1e-8));
  }
}

TEST_CASE("zero datum and empty trajectories") {
  auto g = path_graph(4);
  auto traj = gradient_flow(g, VertexFunction(4));
  CHECK(traj.states.size() == 1);
  CHECK(traj.extinction_time_estimate == 0.0);
  CHECK(traj.profile.size() == 0);
  try {
    asymptotic_profile(traj, g);
    FAIL("expected EmptyTrajectory");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyTrajectory);
  }
}

TEST_CASE("flow norms never increase on random graphs") {
  std::mt19937_64 rng(31);
  for (std::uint64_t trial = 0; trial < 5; ++trial) {
    auto g = random_connected_graph(10, 18, 1200 + trial);
    VertexFunction f(g.num_vertices());
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (std::size_t x = 0; x < f.size(); ++x) f[x] = g.is_boundary(x) ? 0.0 : dist(rng);
    auto traj = gradient_flow(g, f);
    for (std::size_t k = 0; k + 1 < traj.norms.size(); ++k) CHECK(traj.norms[k + 1] <= traj.norms[k] + 1e-12);
    CHECK(traj.norms.back() <= 1e-9);
    auto est = asymptotic_profile(traj, g);
    CHECK(norm_p(est.profile, 2.0) == doctest::Approx(1.0));
  }
}

TEST_CASE("trajectory and certificate export") {
  auto g = path_graph(3);
  FlowOptions opt;
  opt.step = 0.25;
  auto traj = gradient_flow(g, VertexFunction{0, 1, 0}, opt);
  std::ostringstream csv;
  write_trajectory_csv(csv, traj);
  CHECK(csv.str().rfind("t,norm2,J_w\n", 0) == 0);
  std::ostringstream snaps;
  write_snapshots_csv(snaps, traj, {0.0, 0.5});
  CHECK(snaps.str().rfind("t,vertex,u\n", 0) == 0);
  CHECK(snaps.str().find("0.5,1,0.5") != std::string::npos);

  auto p4 = path_graph(4);
  auto out = eigen_certificate(p4, VertexFunction{0, 1, 0, 0}, 1e-9);
  auto doc = certificate_to_json(p4, *out.certificate);
  CHECK(doc["lambda"].get<double>() == doctest::Approx(1.0));
  REQUIRE(doc["q"].size() == 1);
  CHECK(doc["q"][0][0] == 0);
  CHECK(doc["q"][0][1] == 1);
  CHECK(doc["q"][0][2].get<double>() == doctest::Approx(0.5));
  CHECK(doc["residuals"].contains("norm_gap"));
}
