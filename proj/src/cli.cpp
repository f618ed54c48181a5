#include "spinchain/cli.hpp"

#include "spinchain/chain_model.hpp"
#include "spinchain/csv_io.hpp"
#include "spinchain/errors.hpp"
#include "spinchain/experiments.hpp"
#include "spinchain/full_space.hpp"
#include "spinchain/spectral.hpp"
#include "spinchain/transfer.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace spinchain::cli {

namespace {

int parse_int(const std::string& text) {
  int value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ValidationError("expected an integer, got '" + text + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream stream(text);
  while (std::getline(stream, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.push_back("");
  return parts;
}

int single_n(const std::string& text) {
  const std::vector<int> values = parse_n_range(text);
  if (values.size() != 1) {
    throw ValidationError("this subcommand takes a single --n value, got range '" + text + "'");
  }
  return values.front();
}

Variant variant_from(const std::string& name) {
  if (name == "complete") return Variant::complete;
  if (name == "dh") return Variant::double_hole;
  if (name == "custom") return Variant::custom;
  throw ValidationError("unknown variant '" + name + "'");
}

std::set<int> holes_from(const RunConfig& config) {
  if (config.variant == "custom") {
    if (config.holes_text.empty()) {
      throw ValidationError("--variant custom requires --holes");
    }
    const std::vector<int> sites = parse_site_list(config.holes_text);
    return {sites.begin(), sites.end()};
  }
  if (!config.holes_text.empty()) {
    throw ValidationError("--holes conflicts with --variant " + config.variant +
                          " (holes are only free with --variant custom)");
  }
  return {};
}

ChainSpec spec_from(const RunConfig& config) {
  return make_spec(single_n(config.n_text), config.nu, variant_from(config.variant),
                   holes_from(config));
}

void emit(const RunConfig& config, const std::string& content, const std::string& summary) {
  if (config.output == "-") {
    std::cout << content;
  } else {
    write_text_atomic(config.output, content);
  }
  if (!config.quiet) {
    std::cerr << summary << (config.output == "-" ? "" : " -> " + config.output) << "\n";
  }
}

int cmd_trace(const RunConfig& config) {
  const ChainSpec spec = spec_from(config);
  const double t_ideal = ideal_transfer_time(spec.receiver - spec.sender, spec.nu);
  const FidelityTrace trace =
      run_fidelity_trace(spec, config.window_factor * t_ideal, config.samples);
  const double peak = *std::max_element(trace.fidelity.begin(), trace.fidelity.end());
  emit(config, trace_to_csv(trace),
       "trace " + spec.label() + ": " + std::to_string(config.samples) +
           " samples, peak F = " + format_double(peak));
  return 0;
}

int cmd_sweep(const RunConfig& config) {
  SweepRequest request;
  request.n_values = parse_n_range(config.n_text);
  request.nu = config.nu;
  request.window_factor = config.window_factor;
  request.coarse_steps = config.coarse_steps;
  if (config.variant == "both") {
    if (!config.holes_text.empty()) {
      throw ValidationError("--holes conflicts with --variant both");
    }
    request.variants = {Variant::complete, Variant::double_hole};
  } else {
    request.variants = {variant_from(config.variant)};
    const std::set<int> holes = holes_from(config);
    request.custom_holes = holes;
  }

  const SweepResult result = run_sweep(request);
  const std::size_t failed = static_cast<std::size_t>(
      std::count_if(result.rows.begin(), result.rows.end(),
                    [](const SweepRow& row) { return !row.error.empty(); }));
  std::string summary = "sweep: " + std::to_string(result.rows.size()) + " rows";
  if (failed > 0) summary += ", " + std::to_string(failed) + " failed";
  emit(config, sweep_to_csv(result), summary);
  return 0;
}

int cmd_eigvec(const RunConfig& config) {
  const ChainSpec spec = spec_from(config);
  const std::vector<int> modes = parse_site_list(config.modes_text);
  if (modes.empty()) {
    throw ValidationError("--modes list is empty");
  }
  const EigenvectorTable table = dump_eigenvector_components(spec, modes);
  emit(config, eigvec_to_csv(table),
       "eigvec " + spec.label() + ": " + std::to_string(modes.size()) + " modes");
  return 0;
}

int cmd_onsite(const RunConfig& config) {
  const ChainSpec spec = spec_from(config);
  const OnsiteTable table = dump_onsite_energies(spec, config.shifted);
  emit(config, onsite_to_csv(table),
       "onsite " + spec.label() + (config.shifted ? " (shifted)" : ""));
  return 0;
}

int cmd_oracle_check(const RunConfig& config) {
  const ChainSpec spec = spec_from(config);
  const Eigen::MatrixXd full = build_full_space_hamiltonian(spec);

  OracleComparison worst;
  int checked = 0;
  for (HoleTreatment treatment : {HoleTreatment::keep, HoleTreatment::drop}) {
    const HamiltonianMatrix direct = build_single_excitation_hamiltonian(spec, treatment);
    const HamiltonianMatrix projected = project_to_single_excitation(full, spec, treatment);
    const OracleComparison comparison = compare_to_oracle(direct, projected);
    if (checked == 0 || comparison.max_deviation > worst.max_deviation) worst = comparison;
    ++checked;
  }

  const bool pass = worst.max_deviation <= 1e-10;
  std::string report = "oracle check " + spec.label() + "\n";
  report += "max deviation " + format_double(worst.max_deviation) + " at sites (" +
            std::to_string(worst.site_row) + "," + std::to_string(worst.site_col) +
            ") after diagonal shift " + format_double(worst.shift) + " (threshold 1e-10)\n";
  report += pass ? "PASS\n" : "FAIL\n";
  emit(config, report, std::string("oracle check: ") + (pass ? "pass" : "FAIL"));
  return pass ? 0 : 1;
}

} // namespace

std::vector<int> parse_n_range(const std::string& text) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.empty() || parts.size() > 3) {
    throw ValidationError("expected --n as start[:stop[:step]], got '" + text + "'");
  }
  const int start = parse_int(parts[0]);
  if (parts.size() == 1) return {start};
  const int stop = parse_int(parts[1]);
  const int step = parts.size() == 3 ? parse_int(parts[2]) : 1;
  if (step < 1) {
    throw ValidationError("range step must be at least 1, got " + std::to_string(step));
  }
  if (stop < start) {
    throw ValidationError("range stop " + std::to_string(stop) + " is below start " +
                          std::to_string(start));
  }
  std::vector<int> values;
  for (int n = start; n <= stop; n += step) values.push_back(n);
  return values;
}

std::vector<int> parse_site_list(const std::string& text) {
  std::vector<int> sites;
  if (text.empty()) return sites;
  for (const std::string& part : split(text, ',')) {
    sites.push_back(parse_int(part));
  }
  return sites;
}

int run(int argc, const char* const* argv) {
  RunConfig config;
  CLI::App app("spin-chain state-transfer simulator");
  app.require_subcommand(1);

  const auto add_common = [&config](CLI::App* sub, bool sweep_variants) {
    sub->add_option("--n", config.n_text,
                    sweep_variants ? "chain sizes, start[:stop[:step]]" : "chain size")
        ->required();
    sub->add_option("--nu", config.nu, "coupling power-law exponent")->capture_default_str();
    std::vector<std::string> allowed = {"complete", "dh", "custom"};
    if (sweep_variants) allowed.push_back("both");
    sub->add_option("--variant", config.variant, "chain family")
        ->transform(CLI::IsMember(allowed))
        ->capture_default_str();
    sub->add_option("--holes", config.holes_text, "custom hole sites i,j,... (custom variant)");
    sub->add_flag("--quiet", config.quiet, "suppress the stderr summary line");
  };
  const auto add_output = [&config](CLI::App* sub, const std::string& fallback) {
    config.output = fallback;
    sub->add_option("--output", config.output, "output path, or - for stdout")
        ->capture_default_str();
  };

  CLI::App* trace = app.add_subcommand("trace", "fidelity versus time as CSV");
  add_common(trace, false);
  trace->add_option("--window-factor", config.window_factor, "trace span in units of t_ideal")
      ->capture_default_str();
  trace->add_option("--samples", config.samples, "number of time samples")->capture_default_str();
  add_output(trace, "trace.csv");

  CLI::App* sweep = app.add_subcommand("sweep", "transfer metrics over chain sizes as CSV");
  add_common(sweep, true);
  sweep->add_option("--window-factor", config.window_factor,
                    "peak search window in units of t_ideal")
      ->capture_default_str();
  sweep->add_option("--coarse-steps", config.coarse_steps, "coarse scan steps per window")
      ->capture_default_str();
  add_output(sweep, "sweep.csv");

  CLI::App* eigvec = app.add_subcommand("eigvec", "eigenvector components per site as CSV");
  add_common(eigvec, false);
  eigvec->add_option("--modes", config.modes_text, "eigenvector indices j1,j2,... (ascending energy)")
      ->capture_default_str();
  add_output(eigvec, "eigvec.csv");

  CLI::App* onsite = app.add_subcommand("onsite", "on-site energies H_ii as CSV");
  add_common(onsite, false);
  onsite->add_flag("--shifted", config.shifted, "shift the minimum on-site energy to 0");
  add_output(onsite, "onsite.csv");

  CLI::App* oracle = app.add_subcommand(
      "oracle-check", "compare the reduced builder against the full-space construction");
  add_common(oracle, false);
  add_output(oracle, "-");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(trace)) return cmd_trace(config);
    if (app.got_subcommand(sweep)) return cmd_sweep(config);
    if (app.got_subcommand(eigvec)) return cmd_eigvec(config);
    if (app.got_subcommand(onsite)) return cmd_onsite(config);
    if (app.got_subcommand(oracle)) return cmd_oracle_check(config);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

} // namespace spinchain::cli
