#include "condexp/net_space.hpp"

#include <cmath>
#include <stdexcept>

namespace condexp {

namespace {

double euclidean_distance(const Coords& a, const Coords& b) {
  const auto& va = std::get<Eigen::VectorXd>(a);
  const auto& vb = std::get<Eigen::VectorXd>(b);
  if (va.size() != vb.size())
    throw std::invalid_argument("coordinate dimensions differ");
  return (va - vb).norm();
}

double cantor_distance(const Coords& a, const Coords& b) {
  const auto& sa = std::get<std::string>(a);
  const auto& sb = std::get<std::string>(b);
  if (sa.size() != sb.size())
    throw std::invalid_argument("binary string lengths differ");
  double d = 0.0;
  double w = 0.5;
  for (size_t i = 0; i < sa.size(); ++i, w *= 0.5)
    if (sa[i] != sb[i]) d += w;
  return d;
}

double circle_distance(const Coords& a, const Coords& b, double period) {
  const auto& va = std::get<Eigen::VectorXd>(a);
  const auto& vb = std::get<Eigen::VectorXd>(b);
  double diff = std::fabs(va[0] - vb[0]);
  diff = std::fmod(diff, period);
  return std::min(diff, period - diff);
}

}  // namespace

double coord_distance(MetricKind metric, const Coords& a, const Coords& b,
                      double circle_period) {
  switch (metric) {
    case MetricKind::euclidean:
      return euclidean_distance(a, b);
    case MetricKind::cantor_dyadic:
      return cantor_distance(a, b);
    case MetricKind::circle_arc:
      return circle_distance(a, b, circle_period);
  }
  throw std::logic_error("unknown metric kind");
}

NetSpace::NetSpace(std::vector<NetPoint> points, MetricKind metric,
                   double covering_radius, std::string ambient_tag,
                   double circle_period)
    : points_(std::move(points)),
      metric_(metric),
      covering_radius_(covering_radius),
      ambient_tag_(std::move(ambient_tag)),
      circle_period_(circle_period) {
  if (points_.empty()) throw std::invalid_argument("net space has no points");
  if (covering_radius_ < 0.0)
    throw std::invalid_argument("covering radius must be nonnegative");
  if (metric_ == MetricKind::circle_arc && circle_period_ <= 0.0)
    throw std::invalid_argument("circle metric needs a positive period");

  const bool want_string = (metric_ == MetricKind::cantor_dyadic);
  for (size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].id != static_cast<int>(i))
      throw std::invalid_argument("point ids must be contiguous 0..n-1");
    const bool is_string =
        std::holds_alternative<std::string>(points_[i].coords);
    if (is_string != want_string)
      throw std::invalid_argument("coordinate kind does not match metric");
    if (want_string) {
      for (char c : std::get<std::string>(points_[i].coords))
        if (c != '0' && c != '1')
          throw std::invalid_argument("binary string has non-0/1 character");
    }
  }

  // Reject coincident points: downstream fiber and support logic assumes
  // distinct ids are metrically distinguishable.
  const int n = size();
  const int stride = n <= 64 ? 1 : n / 64;
  for (int i = 0; i < n; i += stride)
    for (int j = i + 1; j < n; j += stride)
      if (distance(i, j) <= 0.0)
        throw std::invalid_argument("distinct net points at distance zero");
}

double NetSpace::distance(int a, int b) const {
  if (a == b) return 0.0;
  return coord_distance(metric_, points_.at(a).coords, points_.at(b).coords,
                        circle_period_);
}

}  // namespace condexp
