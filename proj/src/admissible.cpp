#include "condexp/admissible.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace condexp {

namespace {

// Surjectivity-minimality: can no single point be dropped while j|_A still
// hits every base point it hit before? With exact assignments this reduces
// to "every point is alone on its base image within A".
bool surjective_minimal(const NetMap& j, const std::vector<int>& points) {
  std::map<int, int> hits;  // base id -> multiplicity within A
  for (int p : points) ++hits[j.assignment[p]];
  for (int p : points)
    if (hits[j.assignment[p]] > 1) return false;
  return true;
}

// Certifies A at scales delta and delta/2; returns the candidate when both
// defects vanish.
std::optional<CandidateSet> certify(const NetMap& j,
                                    const std::vector<int>& points,
                                    double delta, double ratio,
                                    std::string provenance) {
  const double surj = surjectivity_defect(j, points);
  if (surj != 0.0) return std::nullopt;
  const double open_full = openness_defect(j, points, delta, ratio);
  if (open_full != 0.0) return std::nullopt;
  const double open_half = openness_defect(j, points, delta / 2.0, ratio);
  if (open_half != 0.0) return std::nullopt;
  CandidateSet out;
  out.point_ids = points;
  out.surjectivity_defect = surj;
  out.openness_defect = std::max(open_full, open_half);
  out.minimal_flag = surjective_minimal(j, points);
  out.provenance = std::move(provenance);
  return out;
}

}  // namespace

AdmissibleSearchResult enumerate_admissible_sets(
    const NetMap& j, double delta, double ratio, int max_sets,
    double section_bound, double section_tol, int section_cap,
    double fiber_tol) {
  if (max_sets < 1) throw std::invalid_argument("max_sets must be >= 1");
  if (surjectivity_defect(j) > j.codomain->grid_step() + 1e-12)
    throw std::invalid_argument(
        "j is not surjective at net scale; no admissible set can exist");

  AdmissibleSearchResult result;
  std::set<std::vector<int>> seen;
  bool more_candidates = false;

  auto consider = [&](const std::vector<int>& points,
                      const std::string& provenance) {
    if (static_cast<int>(result.sets.size()) >= max_sets) {
      more_candidates = true;
      return;
    }
    auto cert = certify(j, points, delta, ratio, provenance);
    if (!cert) return;
    if (!seen.insert(points).second) return;  // same set reached twice
    result.sets.push_back(std::move(*cert));
  };

  // 1. Section graphs.
  SectionSearchResult sections =
      find_sections(j, section_bound, section_tol, section_cap);
  result.sections_capped = sections.capped;
  for (size_t s = 0; s < sections.sections.size(); ++s) {
    std::vector<int> points = sections.sections[s].alpha.assignment;
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    consider(points, "section-graph-" + std::to_string(s));
  }

  // 2. The full total space.
  std::vector<int> full(j.domain->size());
  for (int p = 0; p < j.domain->size(); ++p) full[p] = p;
  consider(full, "full-space");

  // 3. Single-point prunes of the full space at points whose fiber has a
  // partner (elsewhere removal trivially breaks surjectivity).
  for (int y = 0; y < j.domain->size(); ++y) {
    if (fiber(j, j.assignment[y], fiber_tol).size() < 2) continue;
    std::vector<int> pruned;
    pruned.reserve(full.size() - 1);
    for (int p : full)
      if (p != y) pruned.push_back(p);
    consider(pruned, "prune-" + std::to_string(y));
  }

  result.capped = more_candidates || result.sections_capped;
  return result;
}

std::optional<CandidateSet> prune_point(const CandidateSet& A, int y,
                                        const NetMap& j, double delta,
                                        double ratio) {
  if (!std::binary_search(A.point_ids.begin(), A.point_ids.end(), y))
    throw std::invalid_argument("pruned point does not belong to the set");
  std::vector<int> points;
  points.reserve(A.point_ids.size() - 1);
  for (int p : A.point_ids)
    if (p != y) points.push_back(p);
  if (points.empty()) return std::nullopt;
  return certify(j, points, delta, ratio,
                 A.provenance + "/prune-" + std::to_string(y));
}

TransversalResult minimal_surjective_transversals(const NetMap& j, double tol,
                                                  int max_count) {
  if (max_count < 1) throw std::invalid_argument("max_count must be >= 1");
  const int nx = j.codomain->size();
  std::vector<std::vector<int>> fibers(nx);
  TransversalResult result;
  result.count = 1.0;
  for (int x = 0; x < nx; ++x) {
    fibers[x] = fiber(j, x, tol);
    if (fibers[x].empty()) {
      // An empty fiber empties the product: there is no selection at all.
      result.count = 0.0;
      return result;
    }
    result.count *= static_cast<double>(fibers[x].size());
  }

  // Odometer over the fiber product, lexicographic in base-id order.
  std::vector<size_t> idx(nx, 0);
  while (true) {
    if (static_cast<int>(result.sets.size()) >= max_count) {
      result.capped = true;
      break;
    }
    std::vector<int> points;
    points.reserve(nx);
    for (int x = 0; x < nx; ++x) points.push_back(fibers[x][idx[x]]);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    CandidateSet set;
    set.point_ids = points;
    set.surjectivity_defect = surjectivity_defect(j, points);
    set.openness_defect = 0.0;  // not part of the transversal requirement
    set.minimal_flag = surjective_minimal(j, points);
    set.provenance = "selection";
    result.sets.push_back(std::move(set));

    int x = nx - 1;
    while (x >= 0 && ++idx[x] == fibers[x].size()) idx[x--] = 0;
    if (x < 0) break;
  }
  return result;
}

}  // namespace condexp
