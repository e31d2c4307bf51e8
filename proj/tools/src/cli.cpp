#include "hypermap_cli/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "hypermap/errors.hpp"
#include "hypermap/version.hpp"

namespace hypermap::cli {

namespace {

void add_k(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--k", cfg.k, "Map parameter k > 0")->required()->check(CLI::PositiveNumber);
}

void build(CLI::App& app, RunConfig& cfg) {
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto* constants = app.add_subcommand("constants", "Critical constants (and the strip edges for m)");
  add_k(constants, cfg);
  constants->add_option("--m", cfg.m, "Cone parameter, 2 <= m < k");
  constants->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* field = app.add_subcommand("field", "Grid dump of phi, theta and the e/f vectors");
  add_k(field, cfg);
  field->add_option("--time", cfg.time, "forward | backward")
      ->check(CLI::IsMember({"forward", "backward"}));
  field->add_option("--grid", cfg.grid, "Number of grid points")->check(CLI::PositiveNumber);
  field->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* leaf = app.add_subcommand("leaf", "Trace one leaf of a direction field");
  add_k(leaf, cfg);
  leaf->add_option("--field", cfg.field, "E1 | F1 | E-1 | F-1")
      ->check(CLI::IsMember({"E1", "F1", "E-1", "F-1"}));
  leaf->add_option("--x", cfg.x, "Start x");
  leaf->add_option("--y", cfg.y, "Start y");
  leaf->add_option("--step", cfg.step, "Integration step")->check(CLI::PositiveNumber);
  leaf->add_option("--max-arc", cfg.max_arc, "Arc length budget")->check(CLI::PositiveNumber);
  leaf->add_flag("!--no-adaptive", cfg.adaptive, "Use a fixed step near the critical lines");
  leaf->add_option("--format", cfg.format, "csv | svg")->check(CLI::IsMember({"csv", "svg"}));
  leaf->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* tangency = app.add_subcommand("tangency", "Samples of the tangency curve");
  add_k(tangency, cfg);
  tangency->add_option("--samples", cfg.samples, "Number of ytilde samples")
      ->check(CLI::Range(std::int64_t{16}, std::int64_t{1} << 24));
  tangency->add_flag("--landmarks", cfg.landmarks, "Emit the eight landmark points instead");
  tangency->add_option("--format", cfg.format, "csv | svg")->check(CLI::IsMember({"csv", "svg"}));
  tangency->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* cones = app.add_subcommand("cones", "Seeded check of the cone conditions");
  add_k(cones, cfg);
  cones->add_option("--m", cfg.m, "Cone parameter, 2 <= m < k")->required();
  cones->add_option("--samples", cfg.samples, "Number of samples")->check(CLI::NonNegativeNumber);
  cones->add_option("--seed", cfg.seed, "RNG seed");
  cones->add_flag("--inside-strip", cfg.inside_strip, "Sample inside the critical strips");
  cones->add_option("--format", cfg.format, "csv | txt")->check(CLI::IsMember({"csv", "txt"}));
  cones->add_option("--failures-out", cfg.failures_out, "Write every failing sample as CSV");
  cones->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Invariant suite over a list of k values");
  verify->add_option("--k-list", cfg.k_list, "Comma-separated k values");
  verify->add_option("--samples", cfg.samples, "Cone samples per (k, m)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", cfg.seed, "RNG seed");
  verify->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* figures = app.add_subcommand("figures", "Write the SVG figure set into a directory");
  figures->add_option("--k", cfg.k, "Map parameter k > 0")->check(CLI::PositiveNumber);
  figures->add_option("--out", cfg.out, "Output directory")->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough(false);
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  const std::string& s = cfg.subcommand;
  if (s == "constants") return cmd_constants(cfg, out);
  if (s == "field") return cmd_field(cfg, out);
  if (s == "leaf") return cmd_leaf(cfg, out);
  if (s == "tangency") return cmd_tangency(cfg, out);
  if (s == "cones") return cmd_cones(cfg, out);
  if (s == "verify") return cmd_verify(cfg, out);
  return cmd_figures(cfg, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperbolic coordinates of the standard map", "hypermap"};
  RunConfig cfg;
  build(app, cfg);

  std::vector<const char*> argv{"hypermap"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    const bool to_file = !cfg.out.empty() && cfg.subcommand != "figures";
    if (!to_file) return dispatch(cfg, out);
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << cfg.out << "' for writing\n";
      return 2;
    }
    const int code = dispatch(cfg, file);
    if (!file) {
      err << "error: write to '" << cfg.out << "' failed\n";
      return 1;
    }
    return code;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hypermap::cli
