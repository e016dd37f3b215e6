#pragma once

#include "condexp/net_map.hpp"
#include "condexp/net_space.hpp"

#include <utility>
#include <vector>

namespace condexp {

// Finitely supported nonnegative measure on a net space. Atoms are kept in
// canonical form: sorted by point id, duplicate ids merged, exact-zero
// weights dropped. Negative weights are rejected at construction.
class DiscreteMeasure {
 public:
  DiscreteMeasure(NetSpacePtr space, std::vector<std::pair<int, double>> atoms);

  const NetSpacePtr& space() const { return space_; }
  const std::vector<std::pair<int, double>>& atoms() const { return atoms_; }

  double total_mass() const { return total_mass_; }
  bool is_probability(double tol = 1e-9) const;
  double weight(int id) const;  // 0 for ids outside the support

 private:
  NetSpacePtr space_;
  std::vector<std::pair<int, double>> atoms_;
  double total_mass_;
};

DiscreteMeasure dirac(NetSpacePtr space, int id);

// Ids of atoms with weight strictly above atom_tol, ascending.
std::vector<int> support(const DiscreteMeasure& mu, double atom_tol = 0.0);

// Integral of a grid function given as a per-point value vector.
double integrate(const DiscreteMeasure& mu, const Eigen::VectorXd& values);

// Image measure under a net map: each atom moves to its assigned point;
// total mass is preserved exactly.
DiscreteMeasure pushforward(const DiscreteMeasure& mu, const NetMap& m);

// t*mu + (1-t)*nu for t in [0,1]; both measures must share a space.
DiscreteMeasure convex_combination(double t, const DiscreteMeasure& mu,
                                   const DiscreteMeasure& nu);

// Bounded-Lipschitz distance sup{ |∫f dmu - ∫f dnu| : Lip(f)<=1, |f|<=1 },
// computed exactly as a small LP in its mass-transport form (move mass at
// metric cost, create/destroy at cost 1 each way). For probability measures
// this metrizes weak* convergence; bl(dirac a, dirac b) = min(d(a,b), 2).
double bl_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                   double lp_tol = 1e-8);

}  // namespace condexp
