#include "spinchain/experiments.hpp"

#include "spinchain/errors.hpp"
#include "spinchain/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace spinchain {

std::string variant_label(Variant variant) {
  switch (variant) {
    case Variant::complete: return "complete";
    case Variant::double_hole: return "dh";
    case Variant::custom: return "custom";
  }
  throw ValidationError("unknown variant");
}

ChainSpec make_spec(int n_sites, double nu, Variant variant, const std::set<int>& custom_holes) {
  ChainSpec spec;
  spec.n_sites = n_sites;
  spec.nu = nu;
  spec.sender = 1;
  spec.receiver = n_sites;
  switch (variant) {
    case Variant::complete:
      if (!custom_holes.empty()) {
        throw ValidationError("complete variant takes no holes");
      }
      break;
    case Variant::double_hole:
      if (!custom_holes.empty()) {
        throw ValidationError("double-hole variant takes no custom holes");
      }
      if (n_sites < 5) {
        throw ValidationError("double-hole variant needs n_sites >= 5 so holes 2 and N-1 are "
                              "interior and distinct (got " + std::to_string(n_sites) + ")");
      }
      spec.holes = {2, n_sites - 1};
      break;
    case Variant::custom:
      spec.holes = custom_holes;
      break;
  }
  spec.validate();
  return spec;
}

FidelityTrace run_fidelity_trace(const ChainSpec& spec, double t_max, int samples) {
  spec.validate();
  if (samples < 2) {
    throw ValidationError("trace needs at least 2 samples (got " + std::to_string(samples) + ")");
  }
  if (!(t_max > 0.0)) {
    throw ValidationError("trace window must extend past t = 0 (got t_max = " +
                          std::to_string(t_max) + ")");
  }

  const HamiltonianMatrix h = build_single_excitation_hamiltonian(spec);
  const SpectralData sd = eigendecompose(h);
  const ProjectionSet ps = projections(sd, spec.sender, spec.receiver);

  FidelityTrace trace;
  trace.spec = spec;
  trace.f_m = decompose_fm_ft(ps, sd.eigenvalues, 0.0).f_m;
  trace.times.resize(static_cast<std::size_t>(samples));
  trace.f_abs.resize(static_cast<std::size_t>(samples));
  trace.fidelity.resize(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double t = t_max * static_cast<double>(i) / static_cast<double>(samples - 1);
    const double f_abs = std::abs(propagator_amplitude(sd, spec.sender, spec.receiver, t));
    trace.times[static_cast<std::size_t>(i)] = t;
    trace.f_abs[static_cast<std::size_t>(i)] = f_abs;
    trace.fidelity[static_cast<std::size_t>(i)] = fidelity(f_abs);
  }
  return trace;
}

namespace {

SweepRow run_sweep_row(const SweepRequest& request, int n, Variant variant) {
  SweepRow row;
  row.n_sites = n;
  row.variant = variant;
  try {
    const ChainSpec spec = make_spec(n, request.nu, variant, request.custom_holes);
    const HamiltonianMatrix h = build_single_excitation_hamiltonian(spec);
    const SpectralData sd = eigendecompose(h);
    const ProjectionSet ps = projections(sd, spec.sender, spec.receiver);
    const double t_ideal = ideal_transfer_time(spec.receiver - spec.sender, spec.nu);
    row.report = find_transfer_event(sd, spec.sender, spec.receiver, spec.nu,
                                     request.window_factor * t_ideal, request.coarse_steps);
    row.delta12 = gap_delta12(sd);
    row.f_m = decompose_fm_ft(ps, sd.eigenvalues, 0.0).f_m;
    row.gamma1_sq = ps.gamma_sq(0);
    row.gamma2_sq = ps.gamma_sq(1);
  } catch (const ValidationError&) {
    row.error = "validation";
  } catch (const NumericalError&) {
    row.error = "numerical";
  } catch (const std::exception&) {
    row.error = "internal";
  }
  return row;
}

} // namespace

SweepResult run_sweep(const SweepRequest& request) {
  if (request.n_values.empty()) {
    throw ValidationError("sweep needs at least one chain size");
  }
  if (request.variants.empty()) {
    throw ValidationError("sweep needs at least one variant");
  }
  if (!(request.window_factor > 0.0)) {
    throw ValidationError("window_factor must be positive (got " +
                          std::to_string(request.window_factor) + ")");
  }
  if (request.coarse_steps < 1000) {
    throw ValidationError("coarse_steps must be at least 1000 (got " +
                          std::to_string(request.coarse_steps) + ")");
  }

  struct Task {
    int n;
    Variant variant;
  };
  std::vector<Task> tasks;
  tasks.reserve(request.n_values.size() * request.variants.size());
  for (int n : request.n_values) {
    for (Variant variant : request.variants) tasks.push_back({n, variant});
  }

  SweepResult result;
  result.rows.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  const unsigned hardware = std::thread::hardware_concurrency();
  const std::size_t worker_count =
      std::min<std::size_t>(tasks.size(), hardware == 0 ? 1 : hardware);
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
      result.rows[i] = run_sweep_row(request, tasks[i].n, tasks[i].variant);
    }
  };
  if (worker_count <= 1) {
    work();
  } else {
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (std::size_t w = 0; w < worker_count; ++w) workers.emplace_back(work);
    for (auto& worker : workers) worker.join();
  }

  std::stable_sort(result.rows.begin(), result.rows.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.n_sites != b.n_sites) return a.n_sites < b.n_sites;
    return variant_label(a.variant) < variant_label(b.variant);
  });
  return result;
}

EigenvectorTable dump_eigenvector_components(const ChainSpec& spec,
                                             const std::vector<int>& modes) {
  spec.validate();
  const HamiltonianMatrix h = build_single_excitation_hamiltonian(spec);
  const SpectralData sd = eigendecompose(h);
  for (int mode : modes) {
    if (mode < 1 || mode > sd.dim()) {
      throw ValidationError("mode " + std::to_string(mode) + " outside 1.." +
                            std::to_string(sd.dim()));
    }
  }

  EigenvectorTable table;
  table.modes = modes;
  table.sites.resize(static_cast<std::size_t>(spec.n_sites));
  for (int site = 1; site <= spec.n_sites; ++site) {
    table.sites[static_cast<std::size_t>(site - 1)] = site;
  }
  table.components.resize(modes.size());
  for (std::size_t m = 0; m < modes.size(); ++m) {
    table.components[m].assign(table.sites.size(), std::nullopt);
    const int col = modes[m] - 1;
    for (int site = 1; site <= spec.n_sites; ++site) {
      const int row = sd.row_of_site(site);
      if (row >= 0) {
        table.components[m][static_cast<std::size_t>(site - 1)] = sd.eigenvectors(row, col);
      }
    }
  }
  return table;
}

OnsiteTable dump_onsite_energies(const ChainSpec& spec, bool shifted) {
  const HamiltonianMatrix h = build_single_excitation_hamiltonian(spec);

  OnsiteTable table;
  table.shifted = shifted;
  table.sites = h.basis_sites;
  table.energies.resize(table.sites.size());
  for (int row = 0; row < h.dim(); ++row) {
    table.energies[static_cast<std::size_t>(row)] = h.entries(row, row);
  }
  if (shifted && !table.energies.empty()) {
    const double low = *std::min_element(table.energies.begin(), table.energies.end());
    for (double& e : table.energies) e -= low;
  }
  return table;
}

} // namespace spinchain
