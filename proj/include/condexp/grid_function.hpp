#pragma once

#include "condexp/measure.hpp"
#include "condexp/net_map.hpp"
#include "condexp/net_space.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace condexp {

// Scalar-valued function sampled on a net, standing in for an element of the
// continuous-function algebra. Scalar is double or std::complex<double>.
template <class Scalar>
struct GridFunction {
  NetSpacePtr space;
  Eigen::Vector<Scalar, Eigen::Dynamic> values;
  double lipschitz_estimate = 0.0;
};

using GridFunctionR = GridFunction<double>;
using GridFunctionC = GridFunction<std::complex<double>>;

// Exact max of |f(p)-f(q)| / d(p,q) over distinct net pairs.
template <class Scalar>
double lipschitz_estimate(const NetSpace& space,
                          const Eigen::Vector<Scalar, Eigen::Dynamic>& values) {
  double worst = 0.0;
  for (int p = 0; p < space.size(); ++p)
    for (int q = p + 1; q < space.size(); ++q) {
      const double d = space.distance(p, q);
      if (d <= 0.0) continue;
      worst = std::max(worst, std::abs(values[p] - values[q]) / d);
    }
  return worst;
}

template <class Scalar>
GridFunction<Scalar> make_grid_function(
    NetSpacePtr space, Eigen::Vector<Scalar, Eigen::Dynamic> values) {
  if (!space) throw std::invalid_argument("null space");
  if (values.size() != space->size())
    throw std::invalid_argument("value vector size does not match the net");
  GridFunction<Scalar> g{std::move(space), std::move(values), 0.0};
  g.lipschitz_estimate = lipschitz_estimate(*g.space, g.values);
  return g;
}

template <class Scalar>
Scalar integrate(const DiscreteMeasure& mu, const GridFunction<Scalar>& g) {
  if (g.space.get() != mu.space().get())
    throw std::invalid_argument("grid function lives on a different net");
  Scalar acc{};
  for (const auto& [id, w] : mu.atoms()) acc += w * g.values[id];
  return acc;
}

// Pullback f∘m of a codomain function along a net map (for a map j : Y -> X
// and f on X this is the embedding of f into functions on Y).
template <class Scalar>
GridFunction<Scalar> compose_with_map(const GridFunction<Scalar>& f,
                                      const NetMap& m) {
  if (f.space.get() != m.codomain.get())
    throw std::invalid_argument("function does not live on the map codomain");
  Eigen::Vector<Scalar, Eigen::Dynamic> values(m.domain->size());
  for (int p = 0; p < m.domain->size(); ++p) values[p] = f.values[m.assignment[p]];
  return make_grid_function(m.domain, std::move(values));
}

// Mollified atom indicators: one tent b_p(y) = max(0, radius - d(p,y)) per
// net point. Each is 1-Lipschitz with sup <= radius, and the family
// separates atoms at net scale (the peak value is attained only at p).
std::vector<GridFunctionR> bump_family(const NetSpacePtr& space, double radius);

}  // namespace condexp
