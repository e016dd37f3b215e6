#pragma once

#include "condexp/kernel.hpp"
#include "condexp/net_map.hpp"
#include "condexp/net_space.hpp"

#include <string>
#include <utility>

namespace condexp {

// A discretized inclusion: total space Y, base space X and the net
// surjection j : Y -> X, plus the generating parameters (used for default
// tolerances and report provenance).
struct ProblemInstance {
  NetMap map;  // j : Y -> X; domain = total, codomain = base
  std::string provenance;
  double mesh = 0.0;  // realised X grid step
  int depth = 0;      // binary-string depth where applicable, else 0
  // Fiber tolerance used when none is requested: 0 for gallery instances
  // (assignments are exact by construction), a covering-radius estimate for
  // imported point lists.
  double default_fiber_tol = 0.0;
};

inline const NetSpacePtr& total_of(const ProblemInstance& p) {
  return p.map.domain;
}
inline const NetSpacePtr& base_of(const ProblemInstance& p) {
  return p.map.codomain;
}

// --- net spaces -----------------------------------------------------------

// Uniform grid on [a,b]; the realised step divides b-a and never exceeds
// the requested mesh.
NetSpacePtr interval_space(double a, double b, double mesh);

// Two horizontal rows in the plane: [0,2]x{0} together with [0,1]x{1},
// sampled on the step realised for [0,2]. Lower-row points come first.
NetSpacePtr canonical_y_space(double mesh);

// All binary strings of the given length; id equals the numeric value of
// the string (most significant bit first), covering radius 2^-depth.
NetSpacePtr cantor_space(int depth);

// n equally spaced angles on a circle of the given circumference with
// arc-length metric.
NetSpacePtr circle_space(int n, double circumference);

// Uniform grid on [0,1]^2 (u-major point order).
NetSpacePtr square_space(double mesh);

// --- net maps (j : Y -> X, exact on the grid by construction) -------------

NetMap canonical_projection(double mesh);  // (t, row) -> t
NetMap dyadic_map(int depth);              // string -> sum a_i 2^-i
NetMap identity_map(double a, double b, double mesh);
NetMap square_projection(double mesh);     // (u, v) -> u
NetMap circle_doubling(double mesh);       // angle doubling, 2n -> n points

// Both depth-truncated binary expansions of x in [0,1]: the one ending in
// zeros and the one ending in ones. They differ exactly when x is dyadic at
// this depth; otherwise both equal the plain truncation.
std::pair<std::string, std::string> dyadic_branches(double x, int depth);

// --- distinguished kernels -------------------------------------------------

// The interpolating field on the canonical two-row instance:
// mu_t = t*delta_(t,0) + (1-t)*delta_(t,1) for t <= 1, delta_(t,0) beyond.
// Declared continuity modulus 2 (horizontal shift plus reweighting across
// the unit gap between the rows). The map-taking overload builds the field
// over an existing projection so measures share its spaces.
Kernel canonical_kernel(NetMap j);
Kernel canonical_kernel(double mesh);

// Weight-perturbed two-branch field over the circle-doubling map:
// mu_x = w(x)*delta_b1 + (1-w(x))*delta_b2 with w(x) = 1/2 + t*cos(x/2).
// The half-angle makes w pick up the branch swap after one loop, so the
// field is continuous across the wraparound. amplitude must lie in [0, 1/2].
Kernel circle_perturbed_kernel(NetMap j, double amplitude);
Kernel circle_perturbed_kernel(double mesh, double amplitude);

// --- instances -------------------------------------------------------------

struct GalleryOptions {
  double mesh = 0.0;  // 0 picks the per-gallery default
  int depth = 0;      // 0 picks the default (binary-string galleries)
  double a = 0.0;     // interval endpoints where applicable
  double b = 1.0;
};

// Space names: interval, two-rows, binary-strings, circle, unit-square.
NetSpacePtr build_gallery_space(const std::string& name,
                                const GalleryOptions& opts = {});

// Map names: canonical-projection, dyadic, identity, square-projection,
// circle-doubling.
NetMap build_gallery_map(const std::string& name,
                         const GalleryOptions& opts = {});

// Instance names: canonical, identity, cantor, square, circle.
ProblemInstance gallery_instance(const std::string& name,
                                 const GalleryOptions& opts = {});

}  // namespace condexp
