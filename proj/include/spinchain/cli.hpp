#pragma once

#include <string>
#include <vector>

namespace spinchain::cli {

/// Parsed command line. Filled by run(); exposed so tests can drive
/// subcommands without a process boundary.
struct RunConfig {
  std::string subcommand;
  std::string n_text;
  double nu = 3.0;
  std::string variant = "complete";
  std::string holes_text;
  double window_factor = 3.0;
  int samples = 2000;
  int coarse_steps = 20000;
  std::string modes_text = "1,2";
  bool shifted = false;
  bool quiet = false;
  std::string output;
};

/// Entry point behind main(). Exit codes: 0 ok, 1 oracle mismatch,
/// 2 validation/usage, 3 numerical or internal failure.
int run(int argc, const char* const* argv);

/// "start[:stop[:step]]", inclusive of stop when aligned: "5:100:5".
std::vector<int> parse_n_range(const std::string& text);

/// Comma-separated integers: "2,49".
std::vector<int> parse_site_list(const std::string& text);

} // namespace spinchain::cli
