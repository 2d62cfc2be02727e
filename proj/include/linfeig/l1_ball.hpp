#pragma once

#include <span>

namespace linfeig {

/// Euclidean projection of `v` onto {x : ||x||_1 <= radius}, in place.
/// Sort-based, O(m log m).
void project_l1_ball(std::span<double> v, double radius);

}  // namespace linfeig
