#include "condexp/grid_function.hpp"

#include <stdexcept>

namespace condexp {

std::vector<GridFunctionR> bump_family(const NetSpacePtr& space,
                                       double radius) {
  if (!space) throw std::invalid_argument("null space");
  if (radius <= 0.0 || radius > 1.0)
    throw std::invalid_argument("bump radius must lie in (0,1]");
  std::vector<GridFunctionR> out;
  out.reserve(space->size());
  for (int p = 0; p < space->size(); ++p) {
    Eigen::VectorXd values(space->size());
    for (int q = 0; q < space->size(); ++q)
      values[q] = std::max(0.0, radius - space->distance(p, q));
    out.push_back(make_grid_function<double>(space, std::move(values)));
  }
  return out;
}

}  // namespace condexp
