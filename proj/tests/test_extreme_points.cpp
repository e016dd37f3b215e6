#include <doctest.h>

#include "condexp/extreme_points.hpp"
#include "condexp/gallery.hpp"
#include "condexp/kernel.hpp"
#include "condexp/net_map.hpp"
#include "condexp/net_space.hpp"

#include <set>
#include <stdexcept>
#include <vector>

using namespace condexp;

namespace {

NetSpacePtr line_space(const std::vector<double>& xs, double covering,
                       const std::string& tag) {
  std::vector<NetPoint> pts;
  pts.reserve(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    Eigen::VectorXd c(1);
    c << xs[i];
    pts.push_back({static_cast<int>(i), c});
  }
  return std::make_shared<NetSpace>(std::move(pts), MetricKind::euclidean,
                                    covering, tag);
}

// Three base points carrying fibers of sizes 2, 3 and 2: total space points
// are laid out on a line, grouped by fiber, one unit between groups.
NetMap stacked_fibers_map() {
  std::vector<double> ycoords;
  std::vector<int> assignment;
  const int sizes[3] = {2, 3, 2};
  for (int x = 0; x < 3; ++x)
    for (int s = 0; s < sizes[x]; ++s) {
      ycoords.push_back(static_cast<double>(x) + 0.1 * s);
      assignment.push_back(x);
    }
  NetSpacePtr y = line_space(ycoords, 0.3, "line");
  NetSpacePtr x = line_space({0.0, 1.0, 2.0}, 0.5, "line");
  return make_net_map(y, x, assignment);
}

}  // namespace

TEST_CASE("extreme_points: vertex count is the product of fiber sizes and "
          "every vertex is a selection") {
  NetMap j = stacked_fibers_map();
  ExtremePointEnumeration e = enumerate_extreme_points_discrete(j);
  CHECK(e.count == 12);  // 2 * 3 * 2
  CHECK(e.verified_dirac);
  REQUIRE(e.selections.size() == 12);

  std::set<std::vector<int>> distinct;
  for (const std::vector<int>& sel : e.selections) {
    REQUIRE(sel.size() == 3);
    // Each chosen point must actually map to its base point.
    for (int x = 0; x < 3; ++x) CHECK(j.assignment[sel[x]] == x);
    distinct.insert(sel);
  }
  CHECK(distinct.size() == 12);
}

TEST_CASE("extreme_points: selections are exactly the extremal kernels") {
  NetMap j = stacked_fibers_map();
  ExtremePointEnumeration e = enumerate_extreme_points_discrete(j);
  for (const std::vector<int>& sel : e.selections) {
    NetMap alpha = make_net_map(j.codomain, j.domain, sel);
    Kernel k = kernel_from_section(alpha, j, 0.0);
    CHECK(is_extremal_candidate(k, 1e-12));
    CHECK(section_from_kernel(k, 1e-12).has_value());
  }
}

TEST_CASE("extreme_points: singleton fibers give a unique vertex") {
  NetMap id = identity_map(0.0, 1.0, 0.25);
  ExtremePointEnumeration e = enumerate_extreme_points_discrete(id);
  CHECK(e.count == 1);
  REQUIRE(e.selections.size() == 1);
  for (int x = 0; x < id.codomain->size(); ++x)
    CHECK(e.selections[0][x] == x);
}

TEST_CASE("extreme_points: an empty fiber is an error") {
  NetMap dy = dyadic_map(3);  // misses the base point at t = 1
  CHECK_THROWS_AS(enumerate_extreme_points_discrete(dy, 0.0),
                  std::runtime_error);
}
