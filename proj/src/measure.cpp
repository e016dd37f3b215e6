#include "condexp/measure.hpp"

#include "condexp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace condexp {

DiscreteMeasure::DiscreteMeasure(NetSpacePtr space,
                                 std::vector<std::pair<int, double>> atoms)
    : space_(std::move(space)), total_mass_(0.0) {
  if (!space_) throw std::invalid_argument("null space");
  std::map<int, double> merged;
  for (const auto& [id, w] : atoms) {
    if (id < 0 || id >= space_->size())
      throw std::invalid_argument("atom id out of range");
    if (w < 0.0) throw std::invalid_argument("negative atom weight");
    merged[id] += w;
  }
  for (const auto& [id, w] : merged) {
    if (w == 0.0) continue;
    atoms_.emplace_back(id, w);
    total_mass_ += w;
  }
}

bool DiscreteMeasure::is_probability(double tol) const {
  return std::fabs(total_mass_ - 1.0) <= tol;
}

double DiscreteMeasure::weight(int id) const {
  auto it = std::lower_bound(
      atoms_.begin(), atoms_.end(), id,
      [](const std::pair<int, double>& a, int key) { return a.first < key; });
  if (it != atoms_.end() && it->first == id) return it->second;
  return 0.0;
}

DiscreteMeasure dirac(NetSpacePtr space, int id) {
  return DiscreteMeasure(std::move(space), {{id, 1.0}});
}

std::vector<int> support(const DiscreteMeasure& mu, double atom_tol) {
  if (atom_tol < 0.0) throw std::invalid_argument("atom tolerance must be >= 0");
  std::vector<int> out;
  for (const auto& [id, w] : mu.atoms())
    if (w > atom_tol) out.push_back(id);
  return out;
}

double integrate(const DiscreteMeasure& mu, const Eigen::VectorXd& values) {
  if (values.size() != mu.space()->size())
    throw std::invalid_argument("grid function lives on a different net");
  double acc = 0.0;
  for (const auto& [id, w] : mu.atoms()) acc += w * values[id];
  return acc;
}

DiscreteMeasure pushforward(const DiscreteMeasure& mu, const NetMap& m) {
  if (m.domain.get() != mu.space().get())
    throw std::invalid_argument("measure does not live on the map's domain");
  std::vector<std::pair<int, double>> atoms;
  atoms.reserve(mu.atoms().size());
  for (const auto& [id, w] : mu.atoms()) atoms.emplace_back(m.assignment[id], w);
  return DiscreteMeasure(m.codomain, std::move(atoms));
}

DiscreteMeasure convex_combination(double t, const DiscreteMeasure& mu,
                                   const DiscreteMeasure& nu) {
  if (t < 0.0 || t > 1.0) throw std::invalid_argument("t must lie in [0,1]");
  if (mu.space().get() != nu.space().get())
    throw std::invalid_argument("measures live on different nets");
  std::vector<std::pair<int, double>> atoms;
  atoms.reserve(mu.atoms().size() + nu.atoms().size());
  for (const auto& [id, w] : mu.atoms()) atoms.emplace_back(id, t * w);
  for (const auto& [id, w] : nu.atoms()) atoms.emplace_back(id, (1.0 - t) * w);
  return DiscreteMeasure(mu.space(), std::move(atoms));
}

double bl_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                   double lp_tol) {
  if (mu.space().get() != nu.space().get())
    throw std::invalid_argument("measures live on different nets");
  const NetSpace& space = *mu.space();

  // Work on the union of the two supports.
  std::vector<int> ids = support(mu, 0.0);
  for (int id : support(nu, 0.0)) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  const int n = static_cast<int>(ids.size());
  if (n == 0) return 0.0;

  // Transport form of the BL program: flow gamma_{pq} >= 0 moves mass at
  // cost d(p,q), u_p/v_p >= 0 destroy/create at cost 1, and node balance
  //   sum_q gamma_{pq} - sum_q gamma_{qp} + u_p - v_p = mu_p - nu_p.
  // Self-loops are omitted (cost 0, never useful). The optimum equals the
  // sup form by LP duality, with the |f| <= 1 cap realised by u, v.
  const int flows = n * (n - 1);
  const int vars = flows + 2 * n;
  Eigen::VectorXd cost(vars), rhs(n);
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(2 * flows + 2 * n);

  int col = 0;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      cost[col] = space.distance(ids[p], ids[q]);
      trips.emplace_back(p, col, 1.0);
      trips.emplace_back(q, col, -1.0);
      ++col;
    }
  }
  for (int p = 0; p < n; ++p) {
    cost[flows + p] = 1.0;  // u_p
    trips.emplace_back(p, flows + p, 1.0);
    cost[flows + n + p] = 1.0;  // v_p
    trips.emplace_back(p, flows + n + p, -1.0);
  }
  for (int p = 0; p < n; ++p)
    rhs[p] = mu.weight(ids[p]) - nu.weight(ids[p]);

  Eigen::SparseMatrix<double> A(n, vars);
  A.setFromTriplets(trips.begin(), trips.end());

  lp::Solution sol = lp::solve_standard_form(A, rhs, cost, lp_tol);
  if (sol.status != lp::Status::optimal)
    throw std::runtime_error("BL distance LP did not reach optimality");
  return std::max(sol.value, 0.0);
}

}  // namespace condexp
