#pragma once

#include "spinchain/chain_model.hpp"
#include "spinchain/transfer.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace spinchain {

/// Chain family: the untouched chain, the chain with holes at sites 2 and
/// N-1, or a caller-supplied hole set.
enum class Variant { complete, double_hole, custom };

std::string variant_label(Variant variant);

/// End-to-end transfer spec for a family member: sender 1, receiver N.
/// double_hole needs N >= 5 so the holes are interior and distinct.
ChainSpec make_spec(int n_sites, double nu, Variant variant,
                    const std::set<int>& custom_holes = {});

FidelityTrace run_fidelity_trace(const ChainSpec& spec, double t_max, int samples);

struct SweepRequest {
  std::vector<int> n_values;
  double nu = 3.0;
  std::vector<Variant> variants;
  std::set<int> custom_holes;
  double window_factor = 3.0; // search window = window_factor * t_ideal
  int coarse_steps = 20000;
};

/// One (N, variant) outcome. `error` is empty on success, otherwise one of
/// "validation", "numerical", "internal" and the numeric fields are
/// meaningless.
struct SweepRow {
  int n_sites = 0;
  Variant variant = Variant::complete;
  TransferReport report;
  double delta12 = 0.0;
  double f_m = 0.0;
  double gamma1_sq = 0.0;
  double gamma2_sq = 0.0;
  std::string error;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

/// Runs all (N, variant) pairs, in parallel when hardware allows. Failed
/// rows carry their error class and the sweep continues. Rows come back
/// sorted by (N, variant label), independent of scheduling.
SweepResult run_sweep(const SweepRequest& request);

/// Components <lambda_j|i> for the requested modes (1-based, ascending
/// energy) at every chain site; hole sites carry no value.
struct EigenvectorTable {
  std::vector<int> sites;
  std::vector<int> modes;
  // components[m][s]: mode modes[m] at site sites[s]
  std::vector<std::vector<std::optional<double>>> components;
};

EigenvectorTable dump_eigenvector_components(const ChainSpec& spec, const std::vector<int>& modes);

/// Diagonal H_{i,i} per occupied site; `shifted` maps the minimum to zero.
struct OnsiteTable {
  std::vector<int> sites;
  std::vector<double> energies;
  bool shifted = false;
};

OnsiteTable dump_onsite_energies(const ChainSpec& spec, bool shifted);

} // namespace spinchain
