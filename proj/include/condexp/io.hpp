#pragma once

#include "condexp/gallery.hpp"
#include "condexp/kernel.hpp"
#include "condexp/uniqueness.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace condexp {

// Report values print at 12 significant digits; coordinates embedded in
// error messages and tables use the same. JSON problem files keep full
// precision through the serializer's shortest-roundtrip doubles.
std::string fmt_value(double v);

// Overwrites path with content (binary mode, so renderings stay byte-exact);
// throws on I/O failure.
void write_text(const std::string& path, const std::string& content);

// --- problem files ----------------------------------------------------------
//
// A problem file is a JSON document with two space objects and the map:
//
//   {
//     "provenance": "...",                       (optional)
//     "parameters": { "mesh": ..., "depth": ..., "default_fiber_tol": ... },
//     "total_space": { "metric": ..., "covering_radius": ...,
//                      "ambient": ...,
//                      "points": [ { "id": 0, "coords": [...] }, ... ] },
//     "base_space":  { ... same layout ... },
//     "map": { "assignment": [ ... ] }
//   }
//
// space.metric is "euclidean", "cantor" or { "name": "circle", "period": p };
// space.points[].coords is a number array (euclidean/circle) or a binary
// string (cantor). map.assignment maps each total-space id to a base id,
// either as an array indexed by id or as an object keyed by the id's decimal
// string. covering_radius, ambient, provenance and parameters are optional on
// input and estimated or defaulted when absent; they are always written, so
// an exported file loads back to the identical instance.

void write_problem(const ProblemInstance& inst, const std::string& path);

// Parses and validates a problem file. Errors name the offending field and
// point id; a map whose image misses the base net by more than one grid step
// is rejected citing the uncovered base coordinate.
ProblemInstance load_problem(const std::string& path);

// --- report rendering -------------------------------------------------------

// Deterministic structured-text rendering (fixed key order and formatting:
// equal reports render to identical bytes).
std::string format_report(const UniquenessReport& report);

// The same content as flat CSV rows `record,key,value`.
std::string format_report_csv(const UniquenessReport& report);

// Full measure fields of the exhibited kernels (atoms as id:weight pairs).
std::string format_kernels(const std::vector<KernelExhibit>& kernels);

// --- gallery tables ---------------------------------------------------------

// Per-base-point weight split of a two-row kernel: `x,weight_lower,
// weight_upper` (weights of the row-0 and row-1 atoms over each x).
std::string two_row_weight_table(const Kernel& k);

// Mass-bound decay rows as `depth,lipschitz,bound`.
std::string mass_bound_table(
    const std::vector<std::tuple<int, double, double>>& rows);

// --- gallery driver ---------------------------------------------------------

struct GalleryRunOptions {
  GalleryOptions gallery;
  AnalysisParams analysis;
  std::string format = "text";  // "text" or "csv" for the report file
  // Instance-specific extras: perturbation amplitude of the second circle
  // kernel, and the mass-bound sweep for the binary-string instance.
  double perturbation = 0.25;
  int depth_min = 4;
  int depth_max = 8;
  double mass_lipschitz = 1.0;
  double mass_target = 0.5;
};

struct GalleryRunResult {
  UniquenessReport report;
  std::vector<std::string> files_written;
};

// Runs the uniqueness pipeline on the named gallery instance, adding its
// distinguished kernels to the exhibit list, and writes under out_dir:
// report.txt (or report.csv), kernels.txt, and the instance's table
// (weights.csv for canonical, mass_bounds.csv for cantor).
GalleryRunResult run_gallery(const std::string& name,
                             const GalleryRunOptions& opts,
                             const std::string& out_dir);

}  // namespace condexp
