#pragma once

#include <Eigen/Dense>

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace condexp {

// How distances between net points are evaluated. Real-coordinate spaces use
// the ambient Euclidean metric; binary-string spaces use the dyadically
// weighted Hamming metric d(a,b) = sum_i |a_i - b_i| 2^-i (i starting at 1);
// circle spaces hold a single angle coordinate with arc-length distance
// modulo a fixed period.
enum class MetricKind { euclidean, cantor_dyadic, circle_arc };

// Coordinates are either a real vector or a binary string ('0'/'1' chars).
using Coords = std::variant<Eigen::VectorXd, std::string>;

struct NetPoint {
  int id = 0;
  Coords coords;
};

// A finite epsilon-net standing in for a compact metric space. Points carry
// contiguous ids 0..n-1 (id == index). covering_radius is the radius at
// which the net covers the ambient model it was sampled from; for imported
// point lists it is an estimate (half the max nearest-neighbour distance).
class NetSpace {
 public:
  NetSpace(std::vector<NetPoint> points, MetricKind metric,
           double covering_radius, std::string ambient_tag,
           double circle_period = 0.0);

  int size() const { return static_cast<int>(points_.size()); }
  const NetPoint& point(int id) const { return points_.at(id); }
  const std::vector<NetPoint>& points() const { return points_; }

  double distance(int a, int b) const;

  MetricKind metric() const { return metric_; }
  double covering_radius() const { return covering_radius_; }
  const std::string& ambient_tag() const { return ambient_tag_; }
  double circle_period() const { return circle_period_; }

  // Characteristic grid spacing; adjacency scans and default tolerances are
  // phrased in terms of this rather than the (finer) covering radius.
  double grid_step() const { return 2.0 * covering_radius_; }

 private:
  std::vector<NetPoint> points_;
  MetricKind metric_;
  double covering_radius_;
  std::string ambient_tag_;
  double circle_period_;
};

using NetSpacePtr = std::shared_ptr<const NetSpace>;

// Metric evaluation on raw coordinates (used by the space itself and by
// tests that compare ambient sample points against the net).
double coord_distance(MetricKind metric, const Coords& a, const Coords& b,
                      double circle_period = 0.0);

}  // namespace condexp
