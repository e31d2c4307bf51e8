// Subcommand bodies shared by the dispatcher. Each writes its primary output
// to `out` and returns an exit code.
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hypermap/io.hpp"

namespace hypermap::cli {

struct RunConfig {
  std::string subcommand;
  double k = 1.0;
  std::optional<int> m;
  int grid = 1024;
  std::int64_t samples = 100000;
  double step = 1e-3;
  double max_arc = 1.0;
  std::uint64_t seed = 42;
  std::string out;
  std::string format = "csv";

  std::string time = "forward";
  std::string field = "E1";
  double x = 0.0;
  double y = 0.0;
  bool adaptive = true;
  bool landmarks = false;
  bool inside_strip = false;
  std::string failures_out;
  std::string k_list = "1,2,5,10,100";
};

/// Effective parameters of a subcommand, in the order they are echoed.
std::vector<io::Param> effective_params(const RunConfig& cfg);

int cmd_constants(const RunConfig& cfg, std::ostream& out);
int cmd_field(const RunConfig& cfg, std::ostream& out);
int cmd_leaf(const RunConfig& cfg, std::ostream& out);
int cmd_tangency(const RunConfig& cfg, std::ostream& out);
int cmd_cones(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_figures(const RunConfig& cfg, std::ostream& out);

/// Parses "1,2,5" into reals; throws std::invalid_argument on bad input.
std::vector<double> parse_k_list(const std::string& s);

}  // namespace hypermap::cli
