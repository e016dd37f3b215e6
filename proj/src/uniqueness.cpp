#include "condexp/uniqueness.hpp"

#include "condexp/milutin.hpp"

#include <algorithm>
#include <stdexcept>

namespace condexp {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::unique:
      return "unique";
    case Verdict::non_unique:
      return "non-unique";
    case Verdict::none_found:
      return "none-found";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

namespace {

// Milutin kernels are exhibited for at most this many admissible sets; the
// verdict never needs more (two distinct exhibits or a second admissible set
// already settle non-uniqueness) and each validation runs a row of BL LPs.
constexpr int kKernelExhibitCap = 8;

}  // namespace

UniquenessReport uniqueness_report(
    const ProblemInstance& inst, AnalysisParams params,
    const std::vector<std::pair<std::string, Kernel>>& extra_kernels) {
  UniquenessReport report;
  report.instance = inst.provenance;
  report.mesh = inst.mesh;
  report.total_points = total_of(inst)->size();
  report.base_points = base_of(inst)->size();

  // Resolve defaults against the instance resolution.
  if (params.fiber_tol < 0.0) params.fiber_tol = inst.default_fiber_tol;
  if (params.delta <= 0.0) params.delta = 2.0 * inst.mesh;
  if (params.smoothing <= 0.0) params.smoothing = inst.mesh;
  if (params.section_tol < 0.0) params.section_tol = params.fiber_tol;
  if (params.distinctness <= 0.0)
    params.distinctness = (inst.mesh + params.smoothing) / 2.0;
  report.params = params;

  const NetMap& j = inst.map;
  report.sections = find_sections(j, params.section_bound, params.section_tol,
                                  params.max_sections);
  report.admissible = enumerate_admissible_sets(
      j, params.delta, params.openness_ratio, params.max_sets,
      params.section_bound, params.section_tol, params.max_sections,
      params.fiber_tol);
  report.caps_hit = report.sections.capped || report.admissible.capped;

  // Exhibits: every section kernel, then one averaging kernel per admissible
  // set up to the internal cap. Averaging atoms live within
  // fiber_tol + smoothing of their fiber, so certificates are checked there.
  const double validate_tol = params.fiber_tol + params.smoothing;
  auto add_exhibit = [&](std::string label, Kernel k) {
    KernelExhibit ex{std::move(label), std::move(k), {}, 0};
    ex.certificate = validate_kernel(ex.kernel, validate_tol, params.atom_tol);
    report.kernels.push_back(std::move(ex));
  };

  for (size_t s = 0; s < report.sections.sections.size(); ++s) {
    if (static_cast<int>(s) >= kKernelExhibitCap) break;
    add_exhibit("section-kernel-" + std::to_string(s),
                kernel_from_section(report.sections.sections[s].alpha, j,
                                    params.section_tol));
  }
  for (const auto& [label, kernel] : extra_kernels)
    add_exhibit(label, kernel);
  for (size_t a = 0; a < report.admissible.sets.size(); ++a) {
    if (static_cast<int>(a) >= kKernelExhibitCap) break;
    add_exhibit("averaging-" + report.admissible.sets[a].provenance,
                milutin_kernel(j, report.admissible.sets[a], params.smoothing,
                               params.fiber_tol));
  }

  // Cluster the valid exhibits by sup-BL distance.
  std::vector<int> representatives;
  for (auto& ex : report.kernels) {
    if (!ex.certificate.passes) {
      ex.cluster = -1;
      continue;
    }
    int found = -1;
    for (size_t r = 0; r < representatives.size(); ++r) {
      const double d =
          kernel_bl_sup(report.kernels[representatives[r]].kernel, ex.kernel,
                        params.distinctness);
      if (d <= params.distinctness) {
        found = static_cast<int>(r);
        break;
      }
    }
    if (found < 0) {
      representatives.push_back(
          static_cast<int>(&ex - report.kernels.data()));
      found = static_cast<int>(representatives.size()) - 1;
    }
    ex.cluster = found;
  }
  report.distinct_valid_kernels = static_cast<int>(representatives.size());

  const size_t n_sets = report.admissible.sets.size();
  if (n_sets == 0) {
    report.verdict =
        report.caps_hit ? Verdict::inconclusive : Verdict::none_found;
  } else if (n_sets >= 2 || report.distinct_valid_kernels >= 2) {
    report.verdict = Verdict::non_unique;
  } else if (report.caps_hit) {
    report.verdict = Verdict::inconclusive;
  } else {
    report.verdict = Verdict::unique;
    const CandidateSet& A = report.admissible.sets[0];
    bool graph = true;
    for (int x = 0; x < j.codomain->size() && graph; ++x) {
      int hits = 0;
      for (int p : fiber(j, x, params.fiber_tol))
        if (std::binary_search(A.point_ids.begin(), A.point_ids.end(), p))
          ++hits;
      graph = (hits == 1);
    }
    report.unique_set_is_section_graph = graph;
  }
  return report;
}

}  // namespace condexp
