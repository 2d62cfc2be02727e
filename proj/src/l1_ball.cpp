#include "linfeig/l1_ball.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace linfeig {

void project_l1_ball(std::span<double> v, double radius) {
  if (radius <= 0.0) {
    std::fill(v.begin(), v.end(), 0.0);
    return;
  }
  double total = 0.0;
  for (double x : v) total += std::abs(x);
  if (total <= radius) return;

  std::vector<double> mag(v.size());
  std::transform(v.begin(), v.end(), mag.begin(), [](double x) { return std::abs(x); });
  std::sort(mag.begin(), mag.end(), std::greater<>());

  // largest k with mag[k] > (sum_{i<=k} mag[i] - radius) / (k + 1)
  double prefix = 0.0, theta = 0.0;
  for (std::size_t k = 0; k < mag.size(); ++k) {
    prefix += mag[k];
    double t = (prefix - radius) / static_cast<double>(k + 1);
    if (mag[k] > t) theta = t;
    else break;
  }
  for (double& x : v) {
    double shrunk = std::max(std::abs(x) - theta, 0.0);
    x = std::copysign(shrunk, x);
  }
}

}  // namespace linfeig
