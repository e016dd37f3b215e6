#include "condexp/extreme_points.hpp"

#include <Eigen/Dense>

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace condexp {

ExtremePointEnumeration enumerate_extreme_points_discrete(const NetMap& j,
                                                          double fiber_tol) {
  const int nx = j.codomain->size();
  std::vector<std::pair<int, int>> coords;  // (base id, total id)
  std::vector<std::vector<int>> fibers(nx);
  long long product = 1;
  for (int x = 0; x < nx; ++x) {
    fibers[x] = fiber(j, x, fiber_tol);
    if (fibers[x].empty())
      throw std::runtime_error("fiber over base point " + std::to_string(x) +
                               " is empty");
    product *= static_cast<long long>(fibers[x].size());
    for (int y : fibers[x]) coords.emplace_back(x, y);
  }
  const int n = static_cast<int>(coords.size());
  const int m = nx;
  double n_choose_m = 1.0;
  for (int i = 0; i < m; ++i) n_choose_m *= double(n - i) / double(i + 1);
  if (n > 28 || n_choose_m > 2e6)
    throw std::invalid_argument(
        "instance too large for brute-force vertex enumeration");

  // Candidate bases: all m-subsets of the coordinates. The constraint
  // matrix column of (x,y) is the unit vector e_x, so we solve honestly and
  // let singularity reject subsets that double up on a fiber.
  ExtremePointEnumeration out;
  std::set<std::vector<int>> vertices;
  std::vector<int> comb(m);
  for (int i = 0; i < m; ++i) comb[i] = i;
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(m);

  while (true) {
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) B(coords[comb[i]].first, i) = 1.0;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(B);
    if (lu.isInvertible()) {
      Eigen::VectorXd w = lu.solve(ones);
      if ((w.array() >= -1e-9).all()) {
        // Feasible basic solution: read it back as a per-fiber selection
        // and flag anything that is not an exact Dirac choice.
        std::vector<int> selection(m, -1);
        bool dirac = true;
        for (int i = 0; i < m; ++i) {
          if (std::fabs(w[i] - 1.0) > 1e-9) dirac = false;
          if (selection[coords[comb[i]].first] != -1) dirac = false;
          selection[coords[comb[i]].first] = coords[comb[i]].second;
        }
        if (!dirac) out.verified_dirac = false;
        vertices.insert(std::move(selection));
      }
    }

    // Next combination.
    int i = m - 1;
    while (i >= 0 && comb[i] == n - m + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int k = i + 1; k < m; ++k) comb[k] = comb[k - 1] + 1;
  }

  out.count = static_cast<long long>(vertices.size());
  out.selections.assign(vertices.begin(), vertices.end());
  if (out.count != product) out.verified_dirac = false;
  return out;
}

}  // namespace condexp
