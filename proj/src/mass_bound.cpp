#include "condexp/mass_bound.hpp"

#include "condexp/gallery.hpp"
#include "condexp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace condexp {

double fiber_mass_bound(const NetMap& j, double L, int target_id,
                        double fiber_tol, const std::vector<double>& radii,
                        double lp_tol) {
  if (L < 0.0) throw std::invalid_argument("L must be >= 0");
  if (target_id < 0 || target_id >= j.codomain->size())
    throw std::invalid_argument("target base point out of range");
  if (radii.empty()) throw std::invalid_argument("empty radius ladder");

  const NetSpace& X = *j.codomain;
  const NetSpace& Y = *j.domain;

  // Mass variables (k, s), s in fiber(x_k).
  std::map<std::pair<int, int>, int> vindex;
  std::vector<std::vector<int>> fibers(X.size());
  for (int k = 0; k < X.size(); ++k) {
    fibers[k] = fiber(j, k, fiber_tol);
    for (int s : fibers[k])
      vindex.emplace(std::make_pair(k, s), static_cast<int>(vindex.size()));
  }
  const int nv = static_cast<int>(vindex.size());

  // Primal rows: +/- (bump integral difference) <= L * d for each adjacent
  // base pair, bump center, and ladder radius.
  std::vector<Eigen::Triplet<double>> primal;  // (row, var, coef)
  std::vector<double> rhs;
  int row = 0;
  for (const auto& [p, q] : grid_adjacency(X)) {
    const double bound = L * X.distance(p, q);
    std::vector<int> centers = fibers[p];
    centers.insert(centers.end(), fibers[q].begin(), fibers[q].end());
    std::sort(centers.begin(), centers.end());
    centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
    for (int c : centers) {
      for (double rad : radii) {
        std::map<int, double> coefs;
        for (int s : fibers[p]) {
          const double b = std::max(0.0, rad - Y.distance(c, s));
          if (b > 0.0) coefs[vindex.at({p, s})] += b;
        }
        for (int s : fibers[q]) {
          const double b = std::max(0.0, rad - Y.distance(c, s));
          if (b > 0.0) coefs[vindex.at({q, s})] -= b;
        }
        if (coefs.empty()) continue;
        for (const auto& [var, coef] : coefs) {
          primal.emplace_back(row, var, coef);
          primal.emplace_back(row + 1, var, -coef);
        }
        rhs.push_back(bound);
        rhs.push_back(bound);
        row += 2;
      }
    }
  }

  // Objective: maximize the total mass on the target fiber.
  Eigen::VectorXd f = Eigen::VectorXd::Zero(nv);
  for (int s : fibers[target_id]) f[vindex.at({target_id, s})] = 1.0;

  // Dual of  max f'w : Aw <= h, w >= 0  is  min h'y : A'y >= f, y >= 0.
  // In standard form: A'y - slack = f. Rows = nv keeps the basis small.
  std::vector<Eigen::Triplet<double>> dual;
  dual.reserve(primal.size() + nv);
  for (const auto& t : primal) dual.emplace_back(t.col(), t.row(), t.value());
  for (int v = 0; v < nv; ++v) dual.emplace_back(v, row + v, -1.0);

  Eigen::SparseMatrix<double> A(nv, row + nv);
  A.setFromTriplets(dual.begin(), dual.end());
  Eigen::VectorXd cost = Eigen::VectorXd::Zero(row + nv);
  for (int r = 0; r < row; ++r) cost[r] = rhs[r];

  lp::Solution sol = lp::solve_standard_form(A, f, cost, lp_tol);
  if (sol.status == lp::Status::infeasible)
    throw std::runtime_error(
        "mass-bound dual is infeasible: the primal is unbounded (the radius "
        "ladder fails to anchor some fiber atom)");
  if (sol.status != lp::Status::optimal)
    throw std::runtime_error("mass-bound LP did not reach optimality");
  return std::max(sol.value, 0.0);
}

double cantor_mass_bound(int depth, double L, double target) {
  if (depth < 2 || depth > 16)
    throw std::invalid_argument("depth must lie in 2..16");
  if (!(target > 0.0 && target < 1.0))
    throw std::invalid_argument("target must lie in (0,1)");
  const double scaled = std::ldexp(target, depth);
  if (std::fabs(scaled - std::round(scaled)) > 1e-9)
    throw std::invalid_argument(
        "target must be dyadic at the requested depth");

  NetMap j = dyadic_map(depth);
  std::vector<double> radii;
  for (int q = 0; q <= depth; ++q) radii.push_back(std::ldexp(1.0, -q));
  const int target_id = static_cast<int>(std::round(scaled));
  return fiber_mass_bound(j, L, target_id, std::ldexp(1.0, -depth), radii);
}

}  // namespace condexp
