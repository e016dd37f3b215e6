#pragma once

#include "condexp/admissible.hpp"
#include "condexp/kernel.hpp"

namespace condexp {

// Regular-averaging kernel over an admissible set A: a tent partition of
// unity {h_k} of width `smoothing` on the base grid blends the uniform
// measures U_k on A ∩ fiber(x_k, fiber_tol),
//     mu_x = sum_k h_k(x) U_k / sum_k h_k(x).
// The result is a valid normalized kernel supported in A with declared
// continuity modulus 2/smoothing; when A is a section graph it degenerates
// to the section's Dirac kernel. Throws when some required A-fiber is empty
// (i.e. the set's surjectivity certificate was wrong for this tolerance).
Kernel milutin_kernel(const NetMap& j, const CandidateSet& A, double smoothing,
                      double fiber_tol = 0.0);

}  // namespace condexp
