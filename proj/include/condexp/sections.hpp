#pragma once

#include "condexp/net_map.hpp"

#include <vector>

namespace condexp {

// A candidate continuous right inverse of j found at net scale: alpha maps
// the base into the total space, j∘alpha stays within section_defect of the
// identity, and alpha's Lipschitz estimate is at most the requested bound.
struct SectionCandidate {
  NetMap alpha;
  double lipschitz_bound = 0.0;
  double section_defect = 0.0;
};

struct SectionSearchResult {
  std::vector<SectionCandidate> sections;
  bool capped = false;            // true if max_count stopped the search
  long long nodes_explored = 0;   // DFS statistics, for reports
};

// Exhaustive DFS over per-point fiber choices with constraint propagation:
// adjacent base points (within 1.5 grid steps) must satisfy
// d(alpha(x), alpha(x')) <= bound * d(x, x'), and completed assignments are
// kept only if their global Lipschitz estimate honours the bound. Complete
// up to the cap: every section with estimate <= bound is enumerated. An
// empty fiber at tolerance tol means no selection exists; the result is
// simply empty (maps that miss part of the base have no sections).
SectionSearchResult find_sections(const NetMap& j, double lipschitz_bound,
                                  double tol, int max_count = 64);

}  // namespace condexp
