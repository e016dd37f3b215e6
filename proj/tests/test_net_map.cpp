#include <doctest.h>

#include "condexp/gallery.hpp"
#include "condexp/net_map.hpp"

#include <algorithm>
#include <stdexcept>

using namespace condexp;

TEST_CASE("NetMap: assignment must be total and in range") {
  NetSpacePtr x = interval_space(0.0, 1.0, 0.5);
  CHECK_THROWS_AS(make_net_map(x, x, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_net_map(x, x, {0, 1, 5}), std::invalid_argument);
  CHECK_THROWS_AS(make_net_map(x, x, {0, -1, 2}), std::invalid_argument);
}

TEST_CASE("NetMap: Lipschitz estimate is the exact pairwise maximum") {
  // Fold [0,1] at 1/2: distances contract nowhere, and the pair (0, 1)
  // maps to (0, 0), so the worst ratio is realised inside, at ratio 1.
  NetSpacePtr x = interval_space(0.0, 1.0, 0.25);
  NetMap fold = make_net_map(x, x, {0, 1, 2, 1, 0});
  CHECK(fold.lipschitz_estimate == doctest::Approx(1.0));

  // Doubling k -> 2k mod grid has ratio exactly 2 on adjacent points.
  NetMap stretch = make_net_map(x, x, {0, 2, 4, 2, 0});
  CHECK(stretch.lipschitz_estimate == doctest::Approx(2.0));

  // The projection of the two-row space is 1-Lipschitz.
  CHECK(canonical_projection(0.25).lipschitz_estimate ==
        doctest::Approx(1.0));
}

TEST_CASE("NetMap: fibers collect points whose image lies within tol") {
  NetMap j = dyadic_map(3);
  // Base point 4 sits at 1/2; at tolerance 2^-3 the strings 011, 100, 101
  // (values 3, 4, 5) all map within one grid step of it.
  CHECK(fiber(j, 4, 0.0) == std::vector<int>{4});
  CHECK(fiber(j, 4, std::ldexp(1.0, -3)) == std::vector<int>{3, 4, 5});
  // x = 1 (id 8) is never hit exactly at this depth.
  CHECK(fiber(j, 8, 0.0).empty());
  CHECK(fiber(j, 8, std::ldexp(1.0, -3)) == std::vector<int>{7});
}

TEST_CASE("NetMap: surjectivity defect measures the worst covering gap") {
  NetMap j = canonical_projection(0.25);
  CHECK(surjectivity_defect(j) == 0.0);

  // The depth-n dyadic map misses x = 1 by exactly 2^-n.
  NetMap dy = dyadic_map(4);
  CHECK(surjectivity_defect(dy) == doctest::Approx(std::ldexp(1.0, -4)));

  // Restricted to the lower row, the two-row projection is still onto;
  // restricted to the upper row it misses (2, 0) by a full unit.
  std::vector<int> lower, upper;
  for (int p = 0; p < j.domain->size(); ++p) {
    const auto& c = std::get<Eigen::VectorXd>(j.domain->point(p).coords);
    (c[1] < 0.5 ? lower : upper).push_back(p);
  }
  CHECK(surjectivity_defect(j, lower) == 0.0);
  CHECK(surjectivity_defect(j, upper) == doctest::Approx(1.0));
  CHECK_THROWS_AS(surjectivity_defect(j, std::vector<int>{}),
                  std::invalid_argument);
}

TEST_CASE("NetMap: openness defect certifies ball-image density") {
  NetMap j = canonical_projection(0.25);
  std::vector<int> full(j.domain->size());
  for (size_t i = 0; i < full.size(); ++i) full[i] = static_cast<int>(i);

  // At ratio 1 the certificate demands exact ball inclusion. The upper row
  // ends at t = 1, so from a = (1, 1) the delta-ball image covers only
  // [1-delta, 1] while the target ball reaches 1 + delta: the gap is delta.
  CHECK(openness_defect(j, full, 0.5, 1.0) == doctest::Approx(0.5));
  CHECK(openness_defect(j, full, 1.0, 1.0) == doctest::Approx(1.0));

  // For c <= 1/2 the slack (1-c)*delta covers the whole target ball and the
  // certificate holds vacuously.
  CHECK(openness_defect(j, full, 0.5, 0.5) == 0.0);
  CHECK(openness_defect(j, full, 1.0, 0.25) == 0.0);
}

TEST_CASE("NetMap: openness defect is nondecreasing in the ratio") {
  NetMap j = canonical_projection(0.25);
  std::vector<int> full(j.domain->size());
  for (size_t i = 0; i < full.size(); ++i) full[i] = static_cast<int>(i);

  for (double delta : {0.25, 0.5, 1.0}) {
    double prev = -1.0;
    for (double c : {0.25, 0.5, 0.625, 0.75, 0.875, 1.0}) {
      const double defect = openness_defect(j, full, delta, c);
      CHECK(defect >= prev - 1e-12);
      prev = defect;
    }
  }
}

TEST_CASE("NetMap: openness defect can only grow when the set shrinks") {
  // On nested subsets of a single fiber structure (the identity instance),
  // removing points can only worsen the certified density. The general
  // monotonicity fails for unrelated sets, so the check stays on a chain.
  NetMap j = identity_map(0.0, 1.0, 0.25);
  std::vector<int> big = {0, 1, 2, 3, 4};
  std::vector<int> mid = {0, 1, 2, 4};
  std::vector<int> small = {0, 2, 4};
  for (double delta : {0.25, 0.5}) {
    const double db = openness_defect(j, big, delta, 1.0);
    const double dm = openness_defect(j, mid, delta, 1.0);
    const double ds = openness_defect(j, small, delta, 1.0);
    CHECK(db <= dm + 1e-12);
    CHECK(dm <= ds + 1e-12);
  }
}

TEST_CASE("NetMap: openness rejects empty subsets and bad scales") {
  NetMap j = identity_map(0.0, 1.0, 0.5);
  std::vector<int> all = {0, 1, 2};
  CHECK_THROWS_AS(openness_defect(j, std::vector<int>{}, 0.5, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(openness_defect(j, all, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(openness_defect(j, all, 0.5, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(openness_defect(j, all, 0.5, 0.0), std::invalid_argument);
}

TEST_CASE("NetMap: grid adjacency links points within 1.5 grid steps") {
  NetSpacePtr x = interval_space(0.0, 1.0, 0.25);
  auto pairs = grid_adjacency(*x);
  // On a line only consecutive points qualify: distance one step is in,
  // two steps (= 2 > 1.5 grid steps) is out.
  CHECK(pairs.size() == 4);
  for (const auto& [a, b] : pairs) CHECK(std::abs(a - b) == 1);
}
