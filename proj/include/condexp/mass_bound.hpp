#pragma once

#include "condexp/net_map.hpp"

#include <vector>

namespace condexp {

// LP relaxation of "how much mass can a BL-continuous measure field keep on
// the fiber over a target base point". Variables are per-(base point, fiber
// atom) masses w >= 0; for every adjacent base pair and every tent test
// function b (centers at the pair's fiber atoms, radii from the given
// ladder) the integrals may differ by at most L * d(base pair). The optimum
// is the largest possible total mass on fiber(target). No normalization is
// imposed: the scale is anchored by atoms leaving the fiber chain (their
// singleton-radius tent rows degenerate to upper bounds), so the program is
// bounded for every finite L and vanishes identically at L = 0.
//
// Solved through its LP dual (rows = number of mass variables), exactly, by
// the simplex core.
double fiber_mass_bound(const NetMap& j, double L, int target_id,
                        double fiber_tol, const std::vector<double>& radii,
                        double lp_tol = 1e-8);

// The binary-string instance at the given depth: fiber tolerance 2^-depth,
// dyadic radius ladder {2^-q : q = 0..depth}, target a dyadic rational in
// (0,1). This is the quantitative shadow of the vanishing-mass argument that
// rules out expectations for the dyadic inclusion: the bound decays with
// depth for every finite L.
double cantor_mass_bound(int depth, double L, double target);

}  // namespace condexp
