#pragma once

#include "condexp/net_map.hpp"

#include <vector>

namespace condexp {

struct ExtremePointEnumeration {
  long long count = 0;  // equals the product of fiber sizes
  std::vector<std::vector<int>> selections;  // per base id, the chosen point
  bool verified_dirac = true;  // brute force found only selection vertices
};

// Enumerates the vertices of the product polytope Π_x P(fiber(x)) by brute
// force over candidate bases of the LP {w >= 0, per-fiber mass = 1}: every
// vertex is checked to be a 0/1 selection (one Dirac per fiber), and the
// count is cross-checked against the product of fiber sizes. Intended for
// small discrete instances (a few fibers of size <= ~6). Throws when some
// fiber is empty.
ExtremePointEnumeration enumerate_extreme_points_discrete(
    const NetMap& j, double fiber_tol = 0.0);

}  // namespace condexp
