#include "condexp/net_map.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace condexp {

NetMap make_net_map(NetSpacePtr domain, NetSpacePtr codomain,
                    std::vector<int> assignment) {
  if (!domain || !codomain) throw std::invalid_argument("null space");
  if (static_cast<int>(assignment.size()) != domain->size())
    throw std::invalid_argument("assignment must cover every domain point");
  for (int t : assignment)
    if (t < 0 || t >= codomain->size())
      throw std::invalid_argument("assignment target out of range");

  NetMap m{std::move(domain), std::move(codomain), std::move(assignment), 0.0};
  const int n = m.domain->size();
  double worst = 0.0;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const double dd = m.domain->distance(p, q);
      if (dd <= 0.0) continue;
      const double dc = m.codomain->distance(m.assignment[p], m.assignment[q]);
      worst = std::max(worst, dc / dd);
    }
  }
  m.lipschitz_estimate = worst;
  return m;
}

std::vector<int> fiber(const NetMap& m, int x_id, double tol) {
  if (x_id < 0 || x_id >= m.codomain->size())
    throw std::invalid_argument("fiber base point out of range");
  if (tol < 0.0) throw std::invalid_argument("fiber tolerance must be >= 0");
  std::vector<int> out;
  for (int p = 0; p < m.domain->size(); ++p)
    if (m.codomain->distance(m.assignment[p], x_id) <= tol) out.push_back(p);
  return out;
}

namespace {

double covering_gap(const NetMap& m, const std::vector<int>& images) {
  double worst = 0.0;
  for (int x = 0; x < m.codomain->size(); ++x) {
    double nearest = std::numeric_limits<double>::infinity();
    for (int img : images) nearest = std::min(nearest, m.codomain->distance(x, img));
    worst = std::max(worst, nearest);
  }
  return worst;
}

}  // namespace

double surjectivity_defect(const NetMap& m) {
  std::vector<int> images(m.assignment.begin(), m.assignment.end());
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return covering_gap(m, images);
}

double surjectivity_defect(const NetMap& m, std::span<const int> subset) {
  std::vector<int> images;
  images.reserve(subset.size());
  for (int p : subset) {
    if (p < 0 || p >= m.domain->size())
      throw std::invalid_argument("subset point out of range");
    images.push_back(m.assignment[p]);
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  if (images.empty()) throw std::invalid_argument("subset is empty");
  return covering_gap(m, images);
}

double openness_defect(const NetMap& m, std::span<const int> subset,
                       double delta, double ratio) {
  if (subset.empty()) throw std::invalid_argument("subset is empty");
  if (delta <= 0.0) throw std::invalid_argument("delta must be positive");
  if (ratio <= 0.0 || ratio > 1.0)
    throw std::invalid_argument("openness ratio must lie in (0,1]");

  const double slack = (1.0 - ratio) * delta;
  double worst = 0.0;
  std::vector<int> image;  // codomain ids hit by the delta-ball around a
  for (int a : subset) {
    if (a < 0 || a >= m.domain->size())
      throw std::invalid_argument("subset point out of range");
    image.clear();
    for (int b : subset)
      if (m.domain->distance(a, b) <= delta) image.push_back(m.assignment[b]);

    const int xa = m.assignment[a];
    for (int x = 0; x < m.codomain->size(); ++x) {
      if (m.codomain->distance(x, xa) > ratio * delta) continue;
      double nearest = std::numeric_limits<double>::infinity();
      for (int img : image) nearest = std::min(nearest, m.codomain->distance(x, img));
      worst = std::max(worst, std::max(0.0, nearest - slack));
    }
  }
  return worst;
}

std::vector<std::pair<int, int>> grid_adjacency(const NetSpace& space) {
  const double radius = 1.5 * space.grid_step();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < space.size(); ++i)
    for (int j = i + 1; j < space.size(); ++j)
      if (space.distance(i, j) <= radius) pairs.emplace_back(i, j);
  return pairs;
}

}  // namespace condexp
