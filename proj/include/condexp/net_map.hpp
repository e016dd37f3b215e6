#pragma once

#include "condexp/net_space.hpp"

#include <span>
#include <utility>
#include <vector>

namespace condexp {

// Discretized continuous surjection j : Y -> X between two nets. assignment
// maps each domain id to the codomain id nearest its analytic image;
// lipschitz_estimate is the exact maximum of d_X(j p, j q) / d_Y(p, q) over
// distinct net pairs.
struct NetMap {
  NetSpacePtr domain;
  NetSpacePtr codomain;
  std::vector<int> assignment;
  double lipschitz_estimate = 0.0;
};

// Validates totality and id ranges and computes the Lipschitz estimate.
NetMap make_net_map(NetSpacePtr domain, NetSpacePtr codomain,
                    std::vector<int> assignment);

inline int apply(const NetMap& m, int domain_id) {
  return m.assignment.at(domain_id);
}

// Net fiber over x: domain points whose image lands within tol of x.
// tol = 0 asks for the exact assignment preimage.
std::vector<int> fiber(const NetMap& m, int x_id, double tol);

// Worst covering gap of the image: max over codomain x of d(x, j(domain)).
double surjectivity_defect(const NetMap& m);

// Same, restricted to a subset A of the domain (j|_A).
double surjectivity_defect(const NetMap& m, std::span<const int> subset);

// Quantitative openness certificate for j|_A at scale delta with ratio
// c in (0,1]: for every a in A, the net image of the delta-ball around a in
// A must be (1-c)*delta-dense in the c*delta-ball around j(a). Returns the
// worst density gap (0 certifies openness at this scale). Larger c demands
// more; at c = 1 the certificate degenerates to exact ball inclusion at net
// scale, and for c <= 1/2 it holds vacuously (the slack covers the target).
double openness_defect(const NetMap& m, std::span<const int> subset,
                       double delta, double ratio);

// Unordered pairs of space points within 1.5 grid steps of each other;
// the neighbour structure used for section search and kernel-continuity
// recomputation.
std::vector<std::pair<int, int>> grid_adjacency(const NetSpace& space);

}  // namespace condexp
