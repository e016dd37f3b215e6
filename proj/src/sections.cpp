#include "condexp/sections.hpp"

#include <stdexcept>
#include <string>

namespace condexp {

namespace {

struct SectionSearch {
  const NetMap& j;
  double bound;
  double tol;
  int max_count;

  std::vector<std::vector<int>> domains;        // fiber choices per base id
  std::vector<std::vector<int>> earlier_neighbours;  // adjacency, ids < x
  std::vector<int> chosen;
  SectionSearchResult result;
  // An empty fiber means no selection exists at all: the search is over
  // before it starts (maps that miss part of the base have no sections).
  bool impossible = false;

  explicit SectionSearch(const NetMap& map, double b, double t, int cap)
      : j(map), bound(b), tol(t), max_count(cap) {
    const int nx = j.codomain->size();
    domains.resize(nx);
    for (int x = 0; x < nx; ++x) {
      domains[x] = fiber(j, x, tol);
      if (domains[x].empty()) {
        impossible = true;
        return;
      }
    }
    earlier_neighbours.resize(nx);
    for (const auto& [a, b2] : grid_adjacency(*j.codomain))
      earlier_neighbours[std::max(a, b2)].push_back(std::min(a, b2));
    chosen.assign(nx, -1);
  }

  bool feasible(int x, int y) const {
    for (int xp : earlier_neighbours[x]) {
      const double dx = j.codomain->distance(x, xp);
      if (j.domain->distance(y, chosen[xp]) > bound * dx + 1e-12) return false;
    }
    return true;
  }

  void emit() {
    NetMap alpha = make_net_map(j.codomain, j.domain, chosen);
    if (alpha.lipschitz_estimate > bound + 1e-12) return;
    double defect = 0.0;
    for (int x = 0; x < j.codomain->size(); ++x)
      defect = std::max(
          defect, j.codomain->distance(j.assignment[alpha.assignment[x]], x));
    result.sections.push_back({std::move(alpha), bound, defect});
  }

  // Returns false once the cap is reached.
  bool dfs(int x) {
    if (x == static_cast<int>(domains.size())) {
      emit();
      return static_cast<int>(result.sections.size()) < max_count;
    }
    for (int y : domains[x]) {
      ++result.nodes_explored;
      if (!feasible(x, y)) continue;
      chosen[x] = y;
      if (!dfs(x + 1)) {
        chosen[x] = -1;
        return false;
      }
      chosen[x] = -1;
    }
    return true;
  }
};

}  // namespace

SectionSearchResult find_sections(const NetMap& j, double lipschitz_bound,
                                  double tol, int max_count) {
  if (lipschitz_bound <= 0.0)
    throw std::invalid_argument("Lipschitz bound must be positive");
  if (tol < 0.0) throw std::invalid_argument("tolerance must be >= 0");
  if (max_count < 1) throw std::invalid_argument("max_count must be >= 1");
  SectionSearch search(j, lipschitz_bound, tol, max_count);
  if (search.impossible) return {};
  search.result.capped = !search.dfs(0);
  return search.result;
}

}  // namespace condexp
