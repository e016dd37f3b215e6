#include "condexp/io.hpp"

#include "condexp/mass_bound.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <utility>

namespace condexp {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string ids_join(const std::vector<int>& ids) {
  std::string out;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(ids[i]);
  }
  return out;
}

std::string coords_text(const Coords& c) {
  if (const auto* bits = std::get_if<std::string>(&c)) return *bits;
  const auto& v = std::get<Eigen::VectorXd>(c);
  std::string out = "(";
  for (int i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += fmt_value(v[i]);
  }
  return out + ")";
}

// --- problem files, write side ---------------------------------------------

ordered_json space_to_json(const NetSpace& s) {
  ordered_json out;
  switch (s.metric()) {
    case MetricKind::euclidean:
      out["metric"] = "euclidean";
      break;
    case MetricKind::cantor_dyadic:
      out["metric"] = "cantor";
      break;
    case MetricKind::circle_arc:
      out["metric"] =
          ordered_json{{"name", "circle"}, {"period", s.circle_period()}};
      break;
  }
  out["covering_radius"] = s.covering_radius();
  out["ambient"] = s.ambient_tag();
  ordered_json pts = ordered_json::array();
  for (const NetPoint& p : s.points()) {
    ordered_json e;
    e["id"] = p.id;
    if (const auto* bits = std::get_if<std::string>(&p.coords)) {
      e["coords"] = *bits;
    } else {
      const auto& v = std::get<Eigen::VectorXd>(p.coords);
      ordered_json arr = ordered_json::array();
      for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
      e["coords"] = std::move(arr);
    }
    pts.push_back(std::move(e));
  }
  out["points"] = std::move(pts);
  return out;
}

// --- problem files, load side -----------------------------------------------

struct ProblemLoader {
  const std::string& path;
  const ordered_json& doc;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::runtime_error("problem file " + path + ": " + msg);
  }

  NetSpacePtr parse_space(const std::string& key) const {
    if (!doc.contains(key) || !doc.at(key).is_object())
      fail(key + " must be present as an object");
    const ordered_json& sj = doc.at(key);

    // Metric tag: a plain string, or an object carrying the circle period.
    if (!sj.contains("metric")) fail(key + ".metric is missing");
    const ordered_json& mj = sj.at("metric");
    MetricKind metric;
    double period = 0.0;
    std::string name;
    if (mj.is_string()) {
      name = mj.get<std::string>();
    } else if (mj.is_object() && mj.contains("name") &&
               mj.at("name").is_string()) {
      name = mj.at("name").get<std::string>();
    } else {
      fail(key + ".metric must be a string or an object with a name");
    }
    if (name == "euclidean") {
      metric = MetricKind::euclidean;
    } else if (name == "cantor") {
      metric = MetricKind::cantor_dyadic;
    } else if (name == "circle") {
      metric = MetricKind::circle_arc;
      if (!mj.is_object() || !mj.contains("period") ||
          !mj.at("period").is_number() ||
          !(mj.at("period").get<double>() > 0.0))
        fail(key + ".metric: the circle metric needs a positive period");
      period = mj.at("period").get<double>();
    } else {
      fail(key + ".metric \"" + name +
           "\" is not one of euclidean, cantor, circle");
    }

    if (!sj.contains("points") || !sj.at("points").is_array() ||
        sj.at("points").empty())
      fail(key + ".points must be a non-empty array");
    const ordered_json& pj = sj.at("points");

    std::vector<NetPoint> points;
    points.reserve(pj.size());
    Eigen::Index dim = -1;
    size_t bit_len = 0;
    for (size_t k = 0; k < pj.size(); ++k) {
      const std::string where = key + ".points[" + std::to_string(k) + "]";
      const ordered_json& e = pj.at(k);
      if (!e.is_object() || !e.contains("id") || !e.contains("coords"))
        fail(where + " must be an object with id and coords");
      if (!e.at("id").is_number_integer() ||
          e.at("id").get<long long>() != static_cast<long long>(k))
        fail(where + ".id must be " + std::to_string(k) +
             " (ids run 0..n-1 in order)");

      const ordered_json& cj = e.at("coords");
      Coords coords;
      if (metric == MetricKind::cantor_dyadic) {
        if (!cj.is_string())
          fail(where + ".coords must be a binary string for this metric");
        const std::string bits = cj.get<std::string>();
        if (bits.empty()) fail(where + ".coords must not be empty");
        if (bit_len == 0) bit_len = bits.size();
        if (bits.size() != bit_len)
          fail(where + ".coords has " + std::to_string(bits.size()) +
               " digits, expected " + std::to_string(bit_len));
        coords = bits;
      } else {
        if (!cj.is_array() || cj.empty())
          fail(where + ".coords must be a non-empty number array");
        Eigen::VectorXd v(static_cast<Eigen::Index>(cj.size()));
        for (size_t i = 0; i < cj.size(); ++i) {
          if (!cj.at(i).is_number())
            fail(where + ".coords[" + std::to_string(i) +
                 "] must be a number");
          v[static_cast<Eigen::Index>(i)] = cj.at(i).get<double>();
        }
        if (metric == MetricKind::circle_arc && v.size() != 1)
          fail(where + ".coords must hold a single angle for the circle");
        if (dim < 0) dim = v.size();
        if (v.size() != dim)
          fail(where + ".coords has " + std::to_string(v.size()) +
               " entries, expected " + std::to_string(dim));
        coords = std::move(v);
      }
      points.push_back({static_cast<int>(k), std::move(coords)});
    }

    double covering = 0.0;
    if (sj.contains("covering_radius")) {
      if (!sj.at("covering_radius").is_number() ||
          !(sj.at("covering_radius").get<double>() > 0.0))
        fail(key + ".covering_radius must be a positive number");
      covering = sj.at("covering_radius").get<double>();
    } else if (points.size() == 1) {
      covering = 1.0;
    } else {
      // Half the worst nearest-neighbour distance: the coarsest radius at
      // which the listed points could cover what they were sampled from.
      double worst = 0.0;
      for (size_t a = 0; a < points.size(); ++a) {
        double nearest = std::numeric_limits<double>::infinity();
        for (size_t b = 0; b < points.size(); ++b)
          if (a != b)
            nearest = std::min(
                nearest, coord_distance(metric, points[a].coords,
                                        points[b].coords, period));
        worst = std::max(worst, nearest);
      }
      covering = worst / 2.0;
    }

    std::string ambient = "imported";
    if (sj.contains("ambient")) {
      if (!sj.at("ambient").is_string())
        fail(key + ".ambient must be a string");
      ambient = sj.at("ambient").get<std::string>();
    }

    try {
      return std::make_shared<NetSpace>(std::move(points), metric, covering,
                                        std::move(ambient), period);
    } catch (const std::exception& e) {
      fail(key + ": " + e.what());
    }
  }

  std::vector<int> parse_assignment(int total_points, int base_points) const {
    if (!doc.contains("map") || !doc.at("map").is_object() ||
        !doc.at("map").contains("assignment"))
      fail("map.assignment is missing");
    const ordered_json& aj = doc.at("map").at("assignment");

    std::vector<int> assignment(total_points, -1);
    auto set_entry = [&](int id, const ordered_json& v,
                         const std::string& where) {
      if (!v.is_number_integer())
        fail(where + " must be an integer base-space id");
      const long long target = v.get<long long>();
      if (target < 0 || target >= base_points)
        fail(where + " = " + std::to_string(target) +
             " is not a base-space id (0.." + std::to_string(base_points - 1) +
             ")");
      assignment[id] = static_cast<int>(target);
    };

    if (aj.is_array()) {
      if (static_cast<int>(aj.size()) != total_points)
        fail("map.assignment lists " + std::to_string(aj.size()) +
             " images but the total space has " + std::to_string(total_points) +
             " points");
      for (int id = 0; id < total_points; ++id)
        set_entry(id, aj.at(id), "map.assignment[" + std::to_string(id) + "]");
    } else if (aj.is_object()) {
      for (int id = 0; id < total_points; ++id) {
        const std::string skey = std::to_string(id);
        if (!aj.contains(skey))
          fail("map.assignment has no entry for total-space point id " + skey);
        set_entry(id, aj.at(skey), "map.assignment[\"" + skey + "\"]");
      }
    } else {
      fail("map.assignment must be an array or an object keyed by id");
    }
    return assignment;
  }
};

}  // namespace

std::string fmt_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path);
}

void write_problem(const ProblemInstance& inst, const std::string& path) {
  ordered_json doc;
  doc["provenance"] = inst.provenance;
  doc["parameters"] = ordered_json{{"mesh", inst.mesh},
                                   {"depth", inst.depth},
                                   {"default_fiber_tol",
                                    inst.default_fiber_tol}};
  doc["total_space"] = space_to_json(*inst.map.domain);
  doc["base_space"] = space_to_json(*inst.map.codomain);
  ordered_json mj;
  mj["assignment"] = inst.map.assignment;
  doc["map"] = std::move(mj);
  write_text(path, doc.dump(2) + "\n");
}

ProblemInstance load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open problem file " + path);
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("problem file " + path + ": " + e.what());
  }
  if (!doc.is_object())
    throw std::runtime_error("problem file " + path +
                             ": top level must be an object");
  ProblemLoader loader{path, doc};

  NetSpacePtr total = loader.parse_space("total_space");
  NetSpacePtr base = loader.parse_space("base_space");
  std::vector<int> assignment =
      loader.parse_assignment(total->size(), base->size());

  NetMap map;
  try {
    map = make_net_map(total, base, std::move(assignment));
  } catch (const std::exception& e) {
    loader.fail(std::string("map: ") + e.what());
  }

  // The image must cover the base net up to one grid step; report the worst
  // uncovered base point otherwise, by coordinate, so the file can be fixed.
  const double allowed = base->grid_step() + 1e-12;
  if (surjectivity_defect(map) > allowed) {
    std::vector<bool> hit(base->size(), false);
    for (int p = 0; p < total->size(); ++p) hit[map.assignment[p]] = true;
    int worst = -1;
    double worst_gap = -1.0;
    for (int x = 0; x < base->size(); ++x) {
      double gap = std::numeric_limits<double>::infinity();
      for (int i = 0; i < base->size(); ++i)
        if (hit[i]) gap = std::min(gap, base->distance(x, i));
      if (gap > worst_gap) {
        worst_gap = gap;
        worst = x;
      }
    }
    loader.fail("map.assignment does not cover the base net: base point id " +
                std::to_string(worst) + " at " +
                coords_text(base->point(worst).coords) + " is " +
                fmt_value(worst_gap) + " away from the image (allowed " +
                fmt_value(allowed) + ")");
  }

  ProblemInstance inst;
  inst.map = std::move(map);
  inst.provenance =
      "imported:" + std::filesystem::path(path).stem().string();
  inst.mesh = base->grid_step();
  inst.default_fiber_tol = base->covering_radius();
  if (doc.contains("provenance")) {
    if (!doc.at("provenance").is_string())
      loader.fail("provenance must be a string");
    inst.provenance = doc.at("provenance").get<std::string>();
  }
  if (doc.contains("parameters")) {
    const ordered_json& pj = doc.at("parameters");
    if (!pj.is_object()) loader.fail("parameters must be an object");
    if (pj.contains("mesh")) {
      if (!pj.at("mesh").is_number() || !(pj.at("mesh").get<double>() > 0.0))
        loader.fail("parameters.mesh must be a positive number");
      inst.mesh = pj.at("mesh").get<double>();
    }
    if (pj.contains("depth")) {
      if (!pj.at("depth").is_number_integer() ||
          pj.at("depth").get<long long>() < 0)
        loader.fail("parameters.depth must be a nonnegative integer");
      inst.depth = static_cast<int>(pj.at("depth").get<long long>());
    }
    if (pj.contains("default_fiber_tol")) {
      if (!pj.at("default_fiber_tol").is_number() ||
          pj.at("default_fiber_tol").get<double>() < 0.0)
        loader.fail("parameters.default_fiber_tol must be >= 0");
      inst.default_fiber_tol = pj.at("default_fiber_tol").get<double>();
    }
  }
  return inst;
}

// --- report rendering -------------------------------------------------------

namespace {

struct ReportRow {
  std::string record;
  std::string key;
  std::string value;
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::vector<ReportRow> report_rows(const UniquenessReport& r) {
  std::vector<ReportRow> rows;
  auto add = [&](std::string rec, std::string key, std::string value) {
    rows.push_back({std::move(rec), std::move(key), std::move(value)});
  };

  add("report", "instance", r.instance);
  add("report", "verdict", verdict_name(r.verdict));
  add("report", "mesh", fmt_value(r.mesh));
  add("report", "total-points", std::to_string(r.total_points));
  add("report", "base-points", std::to_string(r.base_points));
  add("report", "caps-hit", bool_text(r.caps_hit));
  if (r.verdict == Verdict::unique)
    add("report", "section-graph-homeomorphism",
        bool_text(r.unique_set_is_section_graph));

  const AnalysisParams& p = r.params;
  add("param", "fiber-tol", fmt_value(p.fiber_tol));
  add("param", "atom-tol", fmt_value(p.atom_tol));
  add("param", "delta", fmt_value(p.delta));
  add("param", "openness-ratio", fmt_value(p.openness_ratio));
  add("param", "smoothing", fmt_value(p.smoothing));
  add("param", "section-bound", fmt_value(p.section_bound));
  add("param", "section-tol", fmt_value(p.section_tol));
  add("param", "distinctness", fmt_value(p.distinctness));
  add("param", "max-sets", std::to_string(p.max_sets));
  add("param", "max-sections", std::to_string(p.max_sections));
  add("param", "seed", std::to_string(p.seed));

  add("sections", "count", std::to_string(r.sections.sections.size()));
  add("sections", "capped", bool_text(r.sections.capped));
  add("sections", "nodes-explored",
      std::to_string(r.sections.nodes_explored));
  for (size_t i = 0; i < r.sections.sections.size(); ++i) {
    const SectionCandidate& s = r.sections.sections[i];
    const std::string rec = "section-" + std::to_string(i);
    add(rec, "lipschitz", fmt_value(s.alpha.lipschitz_estimate));
    add(rec, "defect", fmt_value(s.section_defect));
    add(rec, "images", ids_join(s.alpha.assignment));
  }

  add("admissible-sets", "count", std::to_string(r.admissible.sets.size()));
  add("admissible-sets", "capped", bool_text(r.admissible.capped));
  add("admissible-sets", "sections-capped",
      bool_text(r.admissible.sections_capped));
  for (size_t i = 0; i < r.admissible.sets.size(); ++i) {
    const CandidateSet& s = r.admissible.sets[i];
    const std::string rec = "set-" + std::to_string(i);
    add(rec, "provenance", s.provenance);
    add(rec, "size", std::to_string(s.point_ids.size()));
    add(rec, "surjectivity-defect", fmt_value(s.surjectivity_defect));
    add(rec, "openness-defect", fmt_value(s.openness_defect));
    add(rec, "minimal", bool_text(s.minimal_flag));
    add(rec, "points", ids_join(s.point_ids));
  }

  add("kernels", "exhibited", std::to_string(r.kernels.size()));
  add("kernels", "distinct-valid", std::to_string(r.distinct_valid_kernels));
  for (size_t i = 0; i < r.kernels.size(); ++i) {
    const KernelExhibit& k = r.kernels[i];
    const std::string rec = "kernel-" + std::to_string(i);
    add(rec, "label", k.label);
    add(rec, "cluster", std::to_string(k.cluster));
    add(rec, "valid", bool_text(k.certificate.passes));
    add(rec, "declared-modulus", fmt_value(k.certificate.declared_modulus));
    add(rec, "recomputed-modulus",
        fmt_value(k.certificate.recomputed_modulus));
    add(rec, "fiber-violation", fmt_value(k.certificate.fiber_violation));
    add(rec, "normalization-drift",
        fmt_value(k.certificate.normalization_drift));
    if (!k.certificate.mass_function.empty()) {
      double lo = k.certificate.mass_function[0];
      double hi = lo;
      for (double m : k.certificate.mass_function) {
        lo = std::min(lo, m);
        hi = std::max(hi, m);
      }
      add(rec, "mass-min", fmt_value(lo));
      add(rec, "mass-max", fmt_value(hi));
    }
  }
  return rows;
}

// Group a record belongs to in the text layout; records before the first
// named group print at top level.
std::string record_group(const std::string& rec) {
  if (rec == "report") return "";
  if (rec == "param") return "parameters";
  if (rec == "sections" || rec.rfind("section-", 0) == 0) return "sections";
  if (rec == "admissible-sets" || rec.rfind("set-", 0) == 0)
    return "admissible-sets";
  return "kernels";
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_report(const UniquenessReport& report) {
  std::string out = "uniqueness-report\n";
  std::string group;
  for (const ReportRow& row : report_rows(report)) {
    const std::string g = record_group(row.record);
    if (g != group) {
      group = g;
      out += "\n" + group + "\n";
    }
    if (group.empty()) {
      out += row.key + ": " + row.value + "\n";
    } else if (row.record == group || row.record == "param") {
      out += "  " + row.key + ": " + row.value + "\n";
    } else {
      out += "  " + row.record + "." + row.key + ": " + row.value + "\n";
    }
  }
  return out;
}

std::string format_report_csv(const UniquenessReport& report) {
  std::string out = "record,key,value\n";
  for (const ReportRow& row : report_rows(report))
    out += csv_escape(row.record) + "," + csv_escape(row.key) + "," +
           csv_escape(row.value) + "\n";
  return out;
}

std::string format_kernels(const std::vector<KernelExhibit>& kernels) {
  std::string out;
  for (const KernelExhibit& ex : kernels) {
    if (!out.empty()) out += "\n";
    out += "kernel: " + ex.label + "\n";
    out += "  valid: " + std::string(bool_text(ex.certificate.passes)) + "\n";
    out += "  cluster: " + std::to_string(ex.cluster) + "\n";
    out += "  normalized: " + std::string(bool_text(ex.kernel.normalized)) +
           "\n";
    out += "  declared-modulus: " + fmt_value(ex.kernel.continuity_modulus) +
           "\n";
    for (size_t x = 0; x < ex.kernel.measures.size(); ++x) {
      out += "  mu[" + std::to_string(x) + "]:";
      for (const auto& [id, w] : ex.kernel.measures[x].atoms())
        out += " " + std::to_string(id) + ":" + fmt_value(w);
      out += "\n";
    }
  }
  return out;
}

// --- gallery tables ---------------------------------------------------------

std::string two_row_weight_table(const Kernel& k) {
  if (total_space(k)->ambient_tag() != "two-rows")
    throw std::invalid_argument(
        "the weight table is defined for two-row kernels");
  std::string out = "x,weight_lower,weight_upper\n";
  for (int x = 0; x < base_space(k)->size(); ++x) {
    double lower = 0.0;
    double upper = 0.0;
    for (const auto& [id, w] : k.measures[x].atoms()) {
      const auto& c =
          std::get<Eigen::VectorXd>(total_space(k)->point(id).coords);
      (c[1] < 0.5 ? lower : upper) += w;
    }
    const auto& xc =
        std::get<Eigen::VectorXd>(base_space(k)->point(x).coords);
    out += fmt_value(xc[0]) + "," + fmt_value(lower) + "," +
           fmt_value(upper) + "\n";
  }
  return out;
}

std::string mass_bound_table(
    const std::vector<std::tuple<int, double, double>>& rows) {
  std::string out = "depth,lipschitz,bound\n";
  for (const auto& [depth, lipschitz, bound] : rows)
    out += std::to_string(depth) + "," + fmt_value(lipschitz) + "," +
           fmt_value(bound) + "\n";
  return out;
}

// --- gallery driver ---------------------------------------------------------

GalleryRunResult run_gallery(const std::string& name,
                             const GalleryRunOptions& opts,
                             const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  ProblemInstance inst = gallery_instance(name, opts.gallery);
  std::vector<std::pair<std::string, Kernel>> extras;
  if (name == "canonical")
    extras.emplace_back("interpolating-field", canonical_kernel(inst.map));
  if (name == "circle")
    extras.emplace_back("perturbed-weights",
                        circle_perturbed_kernel(inst.map, opts.perturbation));

  GalleryRunResult result;
  result.report = uniqueness_report(inst, opts.analysis, extras);

  auto emit = [&](const std::string& filename, const std::string& content) {
    const std::string full = (fs::path(out_dir) / filename).string();
    write_text(full, content);
    result.files_written.push_back(full);
  };

  if (opts.format == "csv") {
    emit("report.csv", format_report_csv(result.report));
  } else if (opts.format == "text") {
    emit("report.txt", format_report(result.report));
  } else {
    throw std::invalid_argument("unknown report format: " + opts.format);
  }
  emit("kernels.txt", format_kernels(result.report.kernels));

  if (name == "canonical")
    emit("weights.csv", two_row_weight_table(extras.front().second));
  if (name == "cantor") {
    if (opts.depth_min < 2 || opts.depth_min > opts.depth_max ||
        opts.depth_max > 16)
      throw std::invalid_argument(
          "mass-bound depth range must satisfy 2 <= min <= max <= 16");
    std::vector<std::tuple<int, double, double>> rows;
    for (int d = opts.depth_min; d <= opts.depth_max; ++d)
      rows.emplace_back(
          d, opts.mass_lipschitz,
          cantor_mass_bound(d, opts.mass_lipschitz, opts.mass_target));
    emit("mass_bounds.csv", mass_bound_table(rows));
  }
  return result;
}

}  // namespace condexp
