#pragma once

#include "condexp/grid_function.hpp"
#include "condexp/measure.hpp"
#include "condexp/net_map.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace condexp {

// Measure-valued field x -> mu_x over the base net of a map j : Y -> X, the
// discrete stand-in for a weak*-continuous assignment of measures on Y.
// Positive unital j-bimodule operators C(Y) -> C(X) correspond exactly to
// such fields with supp(mu_x) inside the fiber over x; continuity_modulus is
// the declared BL-Lipschitz constant of x -> mu_x certifying the
// weak*-continuity at net scale.
struct Kernel {
  NetMap map;  // j : total -> base   (domain = total space Y, codomain = X)
  std::vector<DiscreteMeasure> measures;  // indexed by base point id
  double continuity_modulus = 0.0;
  bool normalized = true;
};

inline const NetSpacePtr& base_space(const Kernel& k) { return k.map.codomain; }
inline const NetSpacePtr& total_space(const Kernel& k) { return k.map.domain; }

// Validates shape (one measure per base point, all living on the total
// space; probability masses when normalized is set).
Kernel make_kernel(NetMap map, std::vector<DiscreteMeasure> measures,
                   double continuity_modulus, bool normalized);

struct KernelCertificate {
  double fiber_violation = 0.0;     // max distance of support atoms to fibers
  double normalization_drift = 0.0;  // max |mass - 1| when normalized
  double recomputed_modulus = 0.0;  // max bl(mu_a,mu_b)/d(a,b), adjacent a,b
  double declared_modulus = 0.0;
  bool passes = false;
  std::vector<double> mass_function;  // per base id, recorded for reports
};

// Re-derives the kernel's defining properties from its data: fiber-support
// containment at fiber_tol, normalization, and the continuity modulus over
// adjacent base pairs. passes requires exact fiber containment, drift within
// 1e-9 and recomputed modulus within the declared one.
KernelCertificate validate_kernel(const Kernel& k, double fiber_tol,
                                  double atom_tol);

// The operator side of the correspondence: (E g)(x) = ∫ g dmu_x.
template <class Scalar>
GridFunction<Scalar> apply_operator(const Kernel& k,
                                    const GridFunction<Scalar>& g) {
  if (g.space.get() != total_space(k).get())
    throw std::invalid_argument("function does not live on the total space");
  Eigen::Vector<Scalar, Eigen::Dynamic> values(base_space(k)->size());
  for (int x = 0; x < base_space(k)->size(); ++x)
    values[x] = integrate(k.measures[x], g);
  return make_grid_function(base_space(k), std::move(values));
}

// max_x | E((f∘j)·g)(x) - f(x)·(E g)(x) |: failure of the module property
// over the base algebra. Zero exactly when every mu_x is supported in the
// exact fiber over x.
template <class Scalar>
double bimodularity_defect(const Kernel& k, const GridFunction<Scalar>& f,
                           const GridFunction<Scalar>& g) {
  if (f.space.get() != base_space(k).get())
    throw std::invalid_argument("left factor must live on the base space");
  GridFunction<Scalar> fj = compose_with_map(f, k.map);
  Eigen::Vector<Scalar, Eigen::Dynamic> prod =
      fj.values.cwiseProduct(g.values);
  double worst = 0.0;
  for (int x = 0; x < base_space(k)->size(); ++x) {
    DiscreteMeasure const& mu = k.measures[x];
    Scalar lhs{};
    Scalar rhs{};
    for (const auto& [id, w] : mu.atoms()) {
      lhs += w * prod[id];
      rhs += w * g.values[id];
    }
    worst = std::max(worst, std::abs(lhs - f.values[x] * rhs));
  }
  return worst;
}

// max_x | E(g h)(x) - E(g)(x) E(h)(x) |: the homomorphism defect. Requires a
// normalized kernel. Zero on a separating function family exactly when
// every mu_x is a point mass, i.e. the kernel is an extreme point of the
// expectation set.
template <class Scalar>
double multiplicativity_defect(const Kernel& k, const GridFunction<Scalar>& g,
                               const GridFunction<Scalar>& h) {
  if (!k.normalized)
    throw std::invalid_argument(
        "multiplicativity defect needs a normalized kernel");
  if (g.space.get() != total_space(k).get() ||
      h.space.get() != total_space(k).get())
    throw std::invalid_argument("functions must live on the total space");
  double worst = 0.0;
  for (int x = 0; x < base_space(k)->size(); ++x) {
    DiscreteMeasure const& mu = k.measures[x];
    Scalar egh{};
    Scalar eg{};
    Scalar eh{};
    for (const auto& [id, w] : mu.atoms()) {
      egh += w * g.values[id] * h.values[id];
      eg += w * g.values[id];
      eh += w * h.values[id];
    }
    worst = std::max(worst, std::abs(egh - eg * eh));
  }
  return worst;
}

// All atoms above atom_tol form singletons: the kernel is a candidate
// extreme point (a point-evaluation field).
bool is_extremal_candidate(const Kernel& k, double atom_tol);

// Dirac kernel x -> delta_{alpha(x)} of a continuous section alpha: X -> Y
// of j. Requires d(j(alpha(x)), x) <= tol for every x. The declared modulus
// is alpha's Lipschitz estimate.
Kernel kernel_from_section(const NetMap& alpha, const NetMap& j, double tol);

// Inverse direction: extract the section from an extremal kernel. Empty when
// some measure is not a point mass at atom_tol.
std::optional<NetMap> section_from_kernel(const Kernel& k, double atom_tol);

// Sorted union over x of support(mu_x, atom_tol).
std::vector<int> union_of_supports(const Kernel& k, double atom_tol);

// t*K1 + (1-t)*K2 pointwise in x; kernels must share the same map. The
// declared modulus combines convexly (BL distance is jointly convex).
Kernel convex_combination(double t, const Kernel& k1, const Kernel& k2);

// Rebuilds the measure field of an operator C(Y) -> C(X) by probing it with
// atom indicators; the unique kernel representing a positive j-bimodule
// operator. declared modulus and normalization flag are supplied by the
// caller (they are operator-level facts).
Kernel kernel_from_operator(
    const std::function<GridFunctionR(const GridFunctionR&)>& op,
    const NetMap& j, double continuity_modulus, bool normalized);

// Exact structural equality (same atoms, bitwise-equal weights).
bool kernels_equal_exact(const Kernel& a, const Kernel& b);

// sup over base points of bl(mu_x, nu_x); early-exits once the sup provably
// exceeds stop_above (pass +inf for the exact sup).
double kernel_bl_sup(const Kernel& a, const Kernel& b,
                     double stop_above = -1.0);

}  // namespace condexp
