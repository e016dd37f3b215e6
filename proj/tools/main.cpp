// Command-line front end: run a built-in instance, analyze a problem file,
// or export a built-in instance as a problem file.
//
// Exit codes: 0 success, 1 usage error, 2 invalid input (bad file, bad
// name, bad parameter value), 3 analysis finished but was inconclusive
// (an enumeration cap interfered before the evidence settled).

#include <CLI11.hpp>

#include "condexp/gallery.hpp"
#include "condexp/io.hpp"
#include "condexp/uniqueness.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>

namespace {

struct AnalysisFlags {
  double lipschitz = 2.0;
  double atom_tol = 0.0;
  double fiber_tol = -1.0;
  double delta = 0.0;
  double openness_ratio = 0.5;
  double smoothing = 0.0;
  int max_sets = 64;
  unsigned seed = 0;
};

void add_analysis_flags(CLI::App* cmd, AnalysisFlags& o) {
  cmd->add_option("--lipschitz", o.lipschitz,
                  "Lipschitz budget for the section search (default 2); for "
                  "the binary-strings instance it also sets the mass-bound "
                  "constant");
  cmd->add_option("--atom-tol", o.atom_tol,
                  "weights at or below this count as absent");
  cmd->add_option("--fiber-tol", o.fiber_tol,
                  "fiber membership tolerance (default: per instance)");
  cmd->add_option("--delta", o.delta,
                  "openness certification scale (default: 2*mesh)");
  cmd->add_option("--openness-ratio", o.openness_ratio,
                  "ratio c of the openness certificate, in (0,1]");
  cmd->add_option("--smoothing", o.smoothing,
                  "averaging-kernel width (default: mesh)");
  cmd->add_option("--max-sets", o.max_sets,
                  "cap on certified admissible sets");
  cmd->add_option("--seed", o.seed,
                  "recorded in the report for reproducibility");
}

condexp::AnalysisParams to_params(const AnalysisFlags& o) {
  condexp::AnalysisParams p;
  p.fiber_tol = o.fiber_tol;
  p.atom_tol = o.atom_tol;
  p.delta = o.delta;
  p.openness_ratio = o.openness_ratio;
  p.smoothing = o.smoothing;
  p.section_bound = o.lipschitz;
  p.max_sets = o.max_sets;
  p.seed = o.seed;
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "finite-net uniqueness analysis of expectation kernels over a fixed "
      "surjection"};
  app.require_subcommand(1);

  AnalysisFlags g_flags;
  double g_mesh = 0.0;
  int g_depth = 0;
  std::string g_name, g_out, g_format = "text";
  double g_amplitude = 0.25;
  CLI::App* gallery = app.add_subcommand(
      "gallery", "run a built-in instance and write its report files");
  gallery->add_option("name", g_name,
                      "canonical, identity, cantor, square or circle")
      ->required();
  gallery->add_option("--mesh", g_mesh, "target grid step");
  gallery->add_option("--depth", g_depth,
                      "binary-string depth (cantor instance)");
  add_analysis_flags(gallery, g_flags);
  gallery->add_option("--out", g_out, "output directory (default out/<name>)");
  gallery->add_option("--format", g_format, "report format")
      ->check(CLI::IsMember({"text", "csv"}));
  gallery->add_option("--amplitude", g_amplitude,
                      "amplitude of the perturbed circle kernel, in [0, 1/2]");

  AnalysisFlags a_flags;
  double a_mesh = 0.0;
  std::string a_file, a_out, a_format = "text";
  CLI::App* analyze = app.add_subcommand(
      "analyze", "run the uniqueness pipeline on a problem JSON file");
  analyze->add_option("file", a_file, "problem file")->required();
  analyze->add_option("--mesh", a_mesh, "override the instance mesh");
  add_analysis_flags(analyze, a_flags);
  analyze->add_option("--out", a_out, "also write the report to this file");
  analyze->add_option("--format", a_format, "report format")
      ->check(CLI::IsMember({"text", "csv"}));

  double e_mesh = 0.0;
  int e_depth = 0;
  std::string e_name, e_out;
  CLI::App* exp = app.add_subcommand(
      "export", "write a built-in instance as a problem JSON file");
  exp->add_option("name", e_name,
                  "canonical, identity, cantor, square or circle")
      ->required();
  exp->add_option("--out", e_out, "destination file")->required();
  exp->add_option("--mesh", e_mesh, "target grid step");
  exp->add_option("--depth", e_depth, "binary-string depth");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help lands here with code 0; genuine usage errors map to 1.
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (gallery->parsed()) {
      condexp::GalleryRunOptions opts;
      opts.gallery.mesh = g_mesh;
      opts.gallery.depth = g_depth;
      opts.analysis = to_params(g_flags);
      opts.format = g_format;
      opts.perturbation = g_amplitude;
      if (gallery->count("--lipschitz") > 0)
        opts.mass_lipschitz = g_flags.lipschitz;
      const std::string out_dir = g_out.empty() ? "out/" + g_name : g_out;
      condexp::GalleryRunResult run =
          condexp::run_gallery(g_name, opts, out_dir);
      std::printf("instance: %s\nverdict: %s\n", run.report.instance.c_str(),
                  condexp::verdict_name(run.report.verdict));
      for (const std::string& f : run.files_written)
        std::printf("wrote: %s\n", f.c_str());
      return run.report.verdict == condexp::Verdict::inconclusive ? 3 : 0;
    }

    if (analyze->parsed()) {
      condexp::ProblemInstance inst = condexp::load_problem(a_file);
      if (analyze->count("--mesh") > 0) {
        if (!(a_mesh > 0.0))
          throw std::invalid_argument("--mesh must be positive");
        inst.mesh = a_mesh;
      }
      condexp::UniquenessReport report =
          condexp::uniqueness_report(inst, to_params(a_flags));
      const std::string text = a_format == "csv"
                                   ? condexp::format_report_csv(report)
                                   : condexp::format_report(report);
      std::fputs(text.c_str(), stdout);
      if (!a_out.empty()) condexp::write_text(a_out, text);
      return report.verdict == condexp::Verdict::inconclusive ? 3 : 0;
    }

    // export
    condexp::GalleryOptions opts;
    opts.mesh = e_mesh;
    opts.depth = e_depth;
    condexp::ProblemInstance inst = condexp::gallery_instance(e_name, opts);
    condexp::write_problem(inst, e_out);
    std::printf("wrote: %s\n", e_out.c_str());
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
