#pragma once

#include "condexp/net_map.hpp"
#include "condexp/sections.hpp"

#include <optional>
#include <string>
#include <vector>

namespace condexp {

// Closed subset A of the total space certified (or measured) against the
// two requirements of the uniqueness criterion: j|_A surjective and open at
// the working scales. minimal_flag records set-minimality with respect to
// surjectivity (no single point can be removed without opening a covering
// gap). provenance says how the candidate was generated.
struct CandidateSet {
  std::vector<int> point_ids;  // sorted ascending
  double surjectivity_defect = 0.0;
  double openness_defect = 0.0;  // worst over the certified scales
  bool minimal_flag = false;
  std::string provenance;
};

struct AdmissibleSearchResult {
  std::vector<CandidateSet> sets;
  bool capped = false;           // candidate generation hit max_sets
  bool sections_capped = false;  // the underlying section search was capped
};

// Candidate generation + certification. Candidates are, in order: graphs of
// sections found at (section_bound, section_tol), the full total space, and
// single-point prunes of the full space at points with multi-point fibers.
// Each candidate is kept when j restricted to it has zero surjectivity
// defect and zero openness defect at both scales delta and delta/2 (the
// two-scale check standing in for the countable-intersection argument on a
// finite net). Deterministic order, capped at max_sets certified sets.
AdmissibleSearchResult enumerate_admissible_sets(
    const NetMap& j, double delta, double ratio, int max_sets = 64,
    double section_bound = 2.0, double section_tol = 0.0,
    int section_cap = 64, double fiber_tol = 0.0);

// The B = A \ {y} move: recertifies the pruned set at (delta, delta/2).
// Returns the pruned candidate when both defects stay zero, nullopt when
// removing y breaks surjectivity or openness. y must belong to A.
std::optional<CandidateSet> prune_point(const CandidateSet& A, int y,
                                        const NetMap& j, double delta,
                                        double ratio);

struct TransversalResult {
  double count = 0.0;  // product of fiber sizes (exact while < 2^53)
  std::vector<CandidateSet> sets;
  bool capped = false;
};

// Enumerates fiber selections (one total-space point per base point, drawn
// from the fiber at tolerance tol) in lexicographic order. count is the
// full product of fiber sizes even when the listing is capped (0 when some
// fiber is empty and no selection exists). As sets, selections over
// overlapping fibers may repeat points; minimal_flag is computed honestly
// per emitted set.
TransversalResult minimal_surjective_transversals(const NetMap& j, double tol,
                                                  int max_count = 64);

}  // namespace condexp
