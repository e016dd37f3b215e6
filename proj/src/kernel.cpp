#include "condexp/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace condexp {

Kernel make_kernel(NetMap map, std::vector<DiscreteMeasure> measures,
                   double continuity_modulus, bool normalized) {
  if (static_cast<int>(measures.size()) != map.codomain->size())
    throw std::invalid_argument("need exactly one measure per base point");
  for (const auto& mu : measures) {
    if (mu.space().get() != map.domain.get())
      throw std::invalid_argument("measure does not live on the total space");
    if (normalized && !mu.is_probability(1e-9))
      throw std::invalid_argument(
          "normalized kernel has a non-probability measure");
  }
  if (continuity_modulus < 0.0)
    throw std::invalid_argument("continuity modulus must be >= 0");
  return Kernel{std::move(map), std::move(measures), continuity_modulus,
                normalized};
}

KernelCertificate validate_kernel(const Kernel& k, double fiber_tol,
                                  double atom_tol) {
  KernelCertificate cert;
  cert.declared_modulus = k.continuity_modulus;
  const NetSpace& base = *base_space(k);
  const NetSpace& total = *total_space(k);

  for (int x = 0; x < base.size(); ++x) {
    const DiscreteMeasure& mu = k.measures[x];
    cert.mass_function.push_back(mu.total_mass());
    if (k.normalized)
      cert.normalization_drift = std::max(cert.normalization_drift,
                                          std::fabs(mu.total_mass() - 1.0));
    const std::vector<int> fib = fiber(k.map, x, fiber_tol);
    for (int s : support(mu, atom_tol)) {
      double nearest = std::numeric_limits<double>::infinity();
      for (int f : fib) nearest = std::min(nearest, total.distance(s, f));
      cert.fiber_violation = std::max(cert.fiber_violation, nearest);
    }
  }

  for (const auto& [a, b] : grid_adjacency(base)) {
    const double d = base.distance(a, b);
    if (d <= 0.0) continue;
    const double bl = bl_distance(k.measures[a], k.measures[b]);
    cert.recomputed_modulus = std::max(cert.recomputed_modulus, bl / d);
  }

  cert.passes = cert.fiber_violation == 0.0 &&
                cert.normalization_drift <= 1e-9 &&
                cert.recomputed_modulus <=
                    cert.declared_modulus * (1.0 + 1e-12) + 1e-9;
  return cert;
}

bool is_extremal_candidate(const Kernel& k, double atom_tol) {
  for (const auto& mu : k.measures)
    if (support(mu, atom_tol).size() != 1) return false;
  return true;
}

Kernel kernel_from_section(const NetMap& alpha, const NetMap& j, double tol) {
  if (alpha.domain.get() != j.codomain.get() ||
      alpha.codomain.get() != j.domain.get())
    throw std::invalid_argument("alpha must map the base into the total space");
  if (tol < 0.0) throw std::invalid_argument("tolerance must be >= 0");
  for (int x = 0; x < alpha.domain->size(); ++x) {
    const int back = j.assignment[alpha.assignment[x]];
    if (j.codomain->distance(back, x) > tol)
      throw std::invalid_argument(
          "section property violated: j∘alpha strays beyond tolerance");
  }
  std::vector<DiscreteMeasure> measures;
  measures.reserve(alpha.domain->size());
  for (int x = 0; x < alpha.domain->size(); ++x)
    measures.push_back(dirac(j.domain, alpha.assignment[x]));
  NetMap map = j;
  return make_kernel(std::move(map), std::move(measures),
                     alpha.lipschitz_estimate, true);
}

std::optional<NetMap> section_from_kernel(const Kernel& k, double atom_tol) {
  std::vector<int> assignment;
  assignment.reserve(base_space(k)->size());
  for (const auto& mu : k.measures) {
    const std::vector<int> supp = support(mu, atom_tol);
    if (supp.size() != 1) return std::nullopt;
    assignment.push_back(supp[0]);
  }
  return make_net_map(base_space(k), total_space(k), std::move(assignment));
}

std::vector<int> union_of_supports(const Kernel& k, double atom_tol) {
  std::vector<int> out;
  for (const auto& mu : k.measures)
    for (int s : support(mu, atom_tol)) out.push_back(s);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Kernel convex_combination(double t, const Kernel& k1, const Kernel& k2) {
  if (t < 0.0 || t > 1.0) throw std::invalid_argument("t must lie in [0,1]");
  if (k1.map.domain.get() != k2.map.domain.get() ||
      k1.map.codomain.get() != k2.map.codomain.get() ||
      k1.map.assignment != k2.map.assignment)
    throw std::invalid_argument("kernels are fields over different maps");
  std::vector<DiscreteMeasure> measures;
  measures.reserve(k1.measures.size());
  for (size_t x = 0; x < k1.measures.size(); ++x)
    measures.push_back(
        convex_combination(t, k1.measures[x], k2.measures[x]));
  return make_kernel(k1.map, std::move(measures),
                     t * k1.continuity_modulus + (1.0 - t) * k2.continuity_modulus,
                     k1.normalized && k2.normalized);
}

Kernel kernel_from_operator(
    const std::function<GridFunctionR(const GridFunctionR&)>& op,
    const NetMap& j, double continuity_modulus, bool normalized) {
  const int ny = j.domain->size();
  const int nx = j.codomain->size();
  std::vector<std::vector<std::pair<int, double>>> atoms(nx);
  for (int y = 0; y < ny; ++y) {
    Eigen::VectorXd indicator = Eigen::VectorXd::Zero(ny);
    indicator[y] = 1.0;
    GridFunctionR column =
        op(make_grid_function<double>(j.domain, std::move(indicator)));
    if (column.space.get() != j.codomain.get())
      throw std::invalid_argument("operator output is not on the base space");
    for (int x = 0; x < nx; ++x)
      if (column.values[x] != 0.0) atoms[x].emplace_back(y, column.values[x]);
  }
  std::vector<DiscreteMeasure> measures;
  measures.reserve(nx);
  for (int x = 0; x < nx; ++x)
    measures.emplace_back(j.domain, std::move(atoms[x]));
  return make_kernel(j, std::move(measures), continuity_modulus, normalized);
}

bool kernels_equal_exact(const Kernel& a, const Kernel& b) {
  if (a.measures.size() != b.measures.size()) return false;
  for (size_t x = 0; x < a.measures.size(); ++x)
    if (a.measures[x].atoms() != b.measures[x].atoms()) return false;
  return true;
}

double kernel_bl_sup(const Kernel& a, const Kernel& b, double stop_above) {
  if (a.measures.size() != b.measures.size())
    throw std::invalid_argument("kernels live over different bases");
  double sup = 0.0;
  for (size_t x = 0; x < a.measures.size(); ++x) {
    sup = std::max(sup, bl_distance(a.measures[x], b.measures[x]));
    if (stop_above >= 0.0 && sup > stop_above) return sup;
  }
  return sup;
}

}  // namespace condexp
