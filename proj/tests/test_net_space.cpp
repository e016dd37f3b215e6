#include <doctest.h>

#include "condexp/gallery.hpp"
#include "condexp/net_space.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace condexp;

namespace {

Eigen::VectorXd v1(double x) {
  Eigen::VectorXd v(1);
  v[0] = x;
  return v;
}

}  // namespace

TEST_CASE("NetSpace: ids must be contiguous and start at zero") {
  std::vector<NetPoint> pts = {{0, v1(0.0)}, {2, v1(1.0)}};
  CHECK_THROWS_AS(NetSpace(pts, MetricKind::euclidean, 0.5, "interval"),
                  std::invalid_argument);
}

TEST_CASE("NetSpace: coordinate kind must match the metric") {
  std::vector<NetPoint> pts = {{0, std::string("01")}, {1, std::string("10")}};
  CHECK_THROWS_AS(NetSpace(pts, MetricKind::euclidean, 0.5, "interval"),
                  std::invalid_argument);
  std::vector<NetPoint> real_pts = {{0, v1(0.0)}, {1, v1(1.0)}};
  CHECK_THROWS_AS(
      NetSpace(real_pts, MetricKind::cantor_dyadic, 0.5, "binary-strings"),
      std::invalid_argument);
}

TEST_CASE("NetSpace: binary coordinates reject non-binary characters") {
  std::vector<NetPoint> pts = {{0, std::string("01")}, {1, std::string("2x")}};
  CHECK_THROWS_AS(
      NetSpace(pts, MetricKind::cantor_dyadic, 0.25, "binary-strings"),
      std::invalid_argument);
}

TEST_CASE("NetSpace: euclidean distance is the ambient norm") {
  NetSpacePtr s = interval_space(0.0, 2.0, 0.25);
  CHECK(s->size() == 9);
  CHECK(s->grid_step() == doctest::Approx(0.25));
  CHECK(s->distance(0, 8) == doctest::Approx(2.0));
  CHECK(s->distance(3, 5) == doctest::Approx(0.5));
  CHECK(s->distance(4, 4) == 0.0);
}

TEST_CASE("NetSpace: dyadic string metric weights digits by 2^-i") {
  NetSpacePtr s = cantor_space(3);
  CHECK(s->size() == 8);
  // id equals the numeric value of the string, so 000 is 0 and 111 is 7.
  CHECK(s->distance(0, 7) == doctest::Approx(0.5 + 0.25 + 0.125));
  // 011 vs 100: all three digits differ.
  CHECK(s->distance(3, 4) == doctest::Approx(0.875));
  // 010 vs 011: only the last digit.
  CHECK(s->distance(2, 3) == doctest::Approx(0.125));
}

TEST_CASE("NetSpace: circle distance wraps around the period") {
  const double period = 2.0 * std::numbers::pi;
  NetSpacePtr s = circle_space(8, period);
  const double step = period / 8.0;
  CHECK(s->distance(0, 1) == doctest::Approx(step));
  // Going the long way (7 steps) must be measured as one step back.
  CHECK(s->distance(0, 7) == doctest::Approx(step));
  CHECK(s->distance(0, 4) == doctest::Approx(period / 2.0));
}

TEST_CASE("NetSpace: coord_distance agrees with the stored points") {
  NetSpacePtr s = cantor_space(4);
  for (int a = 0; a < s->size(); a += 3)
    for (int b = 0; b < s->size(); b += 5)
      CHECK(coord_distance(MetricKind::cantor_dyadic, s->point(a).coords,
                           s->point(b).coords) ==
            doctest::Approx(s->distance(a, b)));
}

TEST_CASE("NetSpace: interval builder never exceeds the requested mesh") {
  for (double mesh : {0.3, 0.25, 0.1, 0.07}) {
    NetSpacePtr s = interval_space(0.0, 1.0, mesh);
    CHECK(s->grid_step() <= mesh + 1e-12);
    // Consecutive grid points realise exactly the grid step.
    CHECK(s->distance(0, 1) == doctest::Approx(s->grid_step()));
  }
}

TEST_CASE("NetSpace: two-row space keeps the covering radius honest") {
  // With mesh 0.3 the realised step is 2/7, which does not divide 1: the
  // upper row ends short of (1,1) and the covering radius must absorb that.
  NetSpacePtr s = canonical_y_space(0.3);
  const double step = 2.0 / 7.0;
  double upper_end = 0.0;
  for (const NetPoint& p : s->points()) {
    const auto& c = std::get<Eigen::VectorXd>(p.coords);
    if (c[1] > 0.5) upper_end = std::max(upper_end, c[0]);
  }
  CHECK(s->covering_radius() >= 1.0 - upper_end - 1e-12);
  CHECK(s->covering_radius() >= step / 2.0 - 1e-12);
}
