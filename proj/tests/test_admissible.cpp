#include <doctest.h>

#include "condexp/admissible.hpp"
#include "condexp/gallery.hpp"

#include <algorithm>
#include <stdexcept>

using namespace condexp;

namespace {

bool has_provenance(const AdmissibleSearchResult& r, const std::string& tag) {
  return std::any_of(r.sets.begin(), r.sets.end(),
                     [&](const CandidateSet& s) { return s.provenance == tag; });
}

}  // namespace

TEST_CASE("admissible: two-row instance certifies the section graph, the "
          "full space and every single-point prune") {
  NetMap j = canonical_projection(0.25);
  AdmissibleSearchResult found = enumerate_admissible_sets(j, 0.5, 0.5);
  // 1 section graph + full space + 10 prunes (each point of a two-point
  // fiber can go; the five upper points and the five lower points under
  // them are all individually removable).
  CHECK(found.sets.size() == 12);
  CHECK_FALSE(found.capped);
  CHECK(has_provenance(found, "section-graph-0"));
  CHECK(has_provenance(found, "full-space"));

  for (const CandidateSet& s : found.sets) {
    CHECK(s.surjectivity_defect == 0.0);
    CHECK(s.openness_defect == 0.0);
  }

  // The section graph is minimal (every fiber met once); the full space is
  // not; a prune of the full space still carries one doubled fiber.
  const auto& graph = *std::find_if(
      found.sets.begin(), found.sets.end(),
      [](const CandidateSet& s) { return s.provenance == "section-graph-0"; });
  CHECK(graph.minimal_flag);
  CHECK(graph.point_ids.size() == 9);
  const auto& full = *std::find_if(
      found.sets.begin(), found.sets.end(),
      [](const CandidateSet& s) { return s.provenance == "full-space"; });
  CHECK_FALSE(full.minimal_flag);
  CHECK(full.point_ids.size() == 14);
}

TEST_CASE("admissible: identity instance has exactly its graph") {
  NetMap j = identity_map(0.0, 1.0, 0.1);
  AdmissibleSearchResult found = enumerate_admissible_sets(j, 0.2, 0.5);
  REQUIRE(found.sets.size() == 1);
  CHECK(found.sets[0].provenance == "section-graph-0");
  CHECK(found.sets[0].minimal_flag);
}

TEST_CASE("admissible: certification is checked at both delta and delta/2") {
  // A set passing at delta but failing at delta/2 must be rejected. With
  // ratio 1 and the upper-row hole at t > 1, the full two-row space fails
  // openness at every scale, so nothing but the section graph certifies.
  NetMap j = canonical_projection(0.25);
  AdmissibleSearchResult strict = enumerate_admissible_sets(j, 0.5, 1.0);
  CHECK(strict.sets.size() == 1);
  CHECK(strict.sets[0].provenance == "section-graph-0");
}

TEST_CASE("admissible: maps that miss the base beyond one grid step are "
          "rejected outright") {
  // The depth-4 dyadic map misses x = 1 by 2^-4, within one grid step:
  // enumeration proceeds and finds nothing certifiable.
  NetMap dy = dyadic_map(4);
  AdmissibleSearchResult found = enumerate_admissible_sets(dy, 0.125, 0.5);
  CHECK(found.sets.empty());
  CHECK_FALSE(found.capped);

  // A genuinely non-surjective map (image collapsed to one point) throws.
  NetSpacePtr x = interval_space(0.0, 1.0, 0.25);
  NetMap collapse = make_net_map(x, x, {0, 0, 0, 0, 0});
  CHECK_THROWS_AS(enumerate_admissible_sets(collapse, 0.25, 0.5),
                  std::invalid_argument);
}

TEST_CASE("admissible: the cap truncates candidate generation") {
  NetMap j = canonical_projection(0.25);
  AdmissibleSearchResult found = enumerate_admissible_sets(j, 0.5, 0.5, 3);
  CHECK(found.sets.size() == 3);
  CHECK(found.capped);
}

TEST_CASE("admissible: prune_point recertifies honestly") {
  NetMap j = canonical_projection(0.25);
  AdmissibleSearchResult found = enumerate_admissible_sets(j, 0.5, 0.5);
  const auto& full = *std::find_if(
      found.sets.begin(), found.sets.end(),
      [](const CandidateSet& s) { return s.provenance == "full-space"; });

  // Removing one member of a two-point fiber keeps the set admissible.
  auto pruned = prune_point(full, 9, j, 0.5, 0.5);
  REQUIRE(pruned.has_value());
  CHECK(pruned->point_ids.size() == full.point_ids.size() - 1);
  CHECK(pruned->provenance == "full-space/prune-9");

  // Removing a singleton-fiber point breaks surjectivity.
  CHECK_FALSE(prune_point(full, 6, j, 0.5, 0.5).has_value());

  // Points outside the set are rejected.
  auto graph = std::find_if(
      found.sets.begin(), found.sets.end(),
      [](const CandidateSet& s) { return s.provenance == "section-graph-0"; });
  CHECK_THROWS_AS(prune_point(*graph, 13, j, 0.5, 0.5),
                  std::invalid_argument);
}

TEST_CASE("transversals: product counts match the fiber structure") {
  // Two-row instance at mesh 0.5: fibers over t in {0, 0.5, 1} have two
  // points, the remaining two are singletons, so 2*2*2 = 8 selections.
  NetMap j = canonical_projection(0.5);
  TransversalResult r = minimal_surjective_transversals(j, 0.0, 64);
  CHECK(r.count == doctest::Approx(8.0));
  CHECK(r.sets.size() == 8);
  CHECK_FALSE(r.capped);
  for (const CandidateSet& s : r.sets) {
    CHECK(s.provenance == "selection");
    CHECK(s.surjectivity_defect == 0.0);
    CHECK(s.minimal_flag);
  }

  // Depth-2 dyadic instance at tolerance 1/4: fiber sizes are 2,3,3,2,1.
  NetMap dy = dyadic_map(2);
  TransversalResult rdy =
      minimal_surjective_transversals(dy, 0.25, 64);
  CHECK(rdy.count == doctest::Approx(36.0));
  CHECK(rdy.sets.size() == 36);

  // At exact tolerance the last fiber is empty: no selection exists.
  TransversalResult none = minimal_surjective_transversals(dy, 0.0, 64);
  CHECK(none.count == 0.0);
  CHECK(none.sets.empty());
}

TEST_CASE("transversals: the cap truncates but the count stays exact") {
  NetMap j = canonical_projection(0.25);
  TransversalResult r = minimal_surjective_transversals(j, 0.0, 10);
  CHECK(r.count == doctest::Approx(32.0));  // five two-point fibers
  CHECK(r.sets.size() == 10);
  CHECK(r.capped);
}
