#include "condexp/milutin.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace condexp {

Kernel milutin_kernel(const NetMap& j, const CandidateSet& A, double smoothing,
                      double fiber_tol) {
  if (smoothing <= 0.0)
    throw std::invalid_argument("smoothing width must be positive");
  if (A.point_ids.empty()) throw std::invalid_argument("empty candidate set");
  const NetSpace& X = *j.codomain;
  const int nx = X.size();

  // A ∩ fiber(x_k) for every base point, restricted to the candidate set.
  std::vector<std::vector<int>> a_fibers(nx);
  for (int k = 0; k < nx; ++k) {
    for (int p : fiber(j, k, fiber_tol))
      if (std::binary_search(A.point_ids.begin(), A.point_ids.end(), p))
        a_fibers[k].push_back(p);
    if (a_fibers[k].empty())
      throw std::runtime_error(
          "candidate set misses the fiber over base point " +
          std::to_string(k) + "; its surjectivity certificate does not hold "
          "at this fiber tolerance");
  }

  std::vector<DiscreteMeasure> measures;
  measures.reserve(nx);
  for (int x = 0; x < nx; ++x) {
    // Tent weights h_k(x) = max(0, 1 - d(x_k,x)/smoothing); h_x(x) = 1
    // keeps the normalizer positive. Grid coordinates carry relative noise
    // of a few ulps, so tents thinner than 1e-12 are quantization dust from
    // a distance that is meant to equal the smoothing width; they are
    // dropped rather than smeared onto a neighbouring fiber.
    std::vector<std::pair<int, double>> hats;
    double total = 0.0;
    for (int k = 0; k < nx; ++k) {
      const double h = 1.0 - X.distance(k, x) / smoothing;
      if (h > 1e-12) {
        hats.emplace_back(k, h);
        total += h;
      }
    }
    std::map<int, double> atoms;
    for (const auto& [k, h] : hats) {
      const double share = h / (total * static_cast<double>(a_fibers[k].size()));
      for (int p : a_fibers[k]) atoms[p] += share;
    }
    measures.emplace_back(
        j.domain, std::vector<std::pair<int, double>>(atoms.begin(), atoms.end()));
  }
  return make_kernel(j, std::move(measures), 2.0 / smoothing, true);
}

}  // namespace condexp
