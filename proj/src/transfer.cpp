#include "spinchain/transfer.hpp"

#include "spinchain/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace spinchain {

std::complex<double> propagator_amplitude(const SpectralData& sd, int sender, int receiver,
                                          double t) {
  if (!(t >= 0.0)) {
    throw ValidationError("propagation time must be non-negative (got " + std::to_string(t) + ")");
  }
  const int row_s = sd.row_of_site(sender);
  const int row_r = sd.row_of_site(receiver);
  if (row_s < 0) {
    throw ValidationError("sender site " + std::to_string(sender) + " is not in the basis");
  }
  if (row_r < 0) {
    throw ValidationError("receiver site " + std::to_string(receiver) + " is not in the basis");
  }

  std::complex<double> f(0.0, 0.0);
  for (int j = 0; j < sd.dim(); ++j) {
    const double weight = sd.eigenvectors(row_r, j) * sd.eigenvectors(row_s, j);
    const double theta = sd.eigenvalues(j) * t;
    f += weight * std::complex<double>(std::cos(theta), -std::sin(theta));
  }
  if (std::abs(f) > 1.0 + 1e-12) {
    throw NumericalError("propagator amplitude |f| = " + std::to_string(std::abs(f)) +
                         " exceeds 1; eigenbasis is not unitary");
  }
  return f;
}

double fidelity(double f_abs) {
  if (!(f_abs >= 0.0) || f_abs > 1.0 + 1e-12) {
    throw ValidationError("|f| must lie in [0, 1] (got " + std::to_string(f_abs) + ")");
  }
  const double f = std::min(f_abs, 1.0);
  return f * f / 6.0 + f / 3.0 + 0.5;
}

FmFt decompose_fm_ft(const ProjectionSet& ps, const Eigen::VectorXd& eigenvalues, double t) {
  const int n = ps.dim();
  if (eigenvalues.size() != n) {
    throw ValidationError("projection set and eigenvalues disagree in size (" +
                          std::to_string(n) + " vs " + std::to_string(eigenvalues.size()) + ")");
  }

  FmFt result;
  for (int j = 0; j < n; ++j) {
    const double s2 = ps.sigma_abs(j) * ps.sigma_abs(j);
    const double r2 = ps.rho_abs(j) * ps.rho_abs(j);
    result.f_m += s2 * r2;
  }

  Eigen::VectorXd theta(n);
  for (int j = 0; j < n; ++j) theta(j) = eigenvalues(j) * t;
  for (int k = 0; k < n; ++k) {
    const double wk = ps.sigma_abs(k) * ps.rho_abs(k);
    if (wk == 0.0) continue;
    for (int l = k + 1; l < n; ++l) {
      const double w = wk * ps.sigma_abs(l) * ps.rho_abs(l);
      if (w == 0.0) continue;
      const double xi =
          ps.sigma_phase(k) - ps.sigma_phase(l) - ps.rho_phase(k) + ps.rho_phase(l);
      result.f_t += 2.0 * w * std::cos((theta(k) - theta(l)) + xi);
    }
  }
  return result;
}

double ideal_transfer_time(int distance_units, double nu) {
  if (distance_units < 1) {
    throw ValidationError("sender-receiver distance must be at least 1 lattice unit (got " +
                          std::to_string(distance_units) + ")");
  }
  return 0.5 * std::numbers::pi * std::pow(static_cast<double>(distance_units), nu);
}

double estimate_transfer_time(const SpectralData& sd) {
  const double gap = gap_delta12(sd);
  if (gap <= 1e-13) {
    throw NumericalError("two lowest eigenvalues are degenerate (Delta12 = " +
                         std::to_string(gap) + "); pi/Delta12 estimate undefined");
  }
  return std::numbers::pi / gap;
}

namespace {

// Golden-section maximization of g on [a, b] to relative width 1e-6.
// Returns the best sampled point.
template <typename Fn>
std::pair<double, double> refine_peak(Fn&& g, double a, double b) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double gc = g(c);
  double gd = g(d);
  while (b - a > 1e-6 * std::max(1.0, b)) {
    if (gc >= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - kInvPhi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + kInvPhi * (b - a);
      gd = g(d);
    }
  }
  return gc >= gd ? std::make_pair(c, gc) : std::make_pair(d, gd);
}

} // namespace

TransferReport find_transfer_event(const SpectralData& sd, int sender, int receiver, double nu,
                                   double t_max, int coarse_steps) {
  if (!(t_max > 0.0)) {
    throw ValidationError("search window must extend past t = 0 (got t_max = " +
                          std::to_string(t_max) + ")");
  }
  if (coarse_steps < 1000) {
    throw ValidationError("coarse_steps must be at least 1000 (got " +
                          std::to_string(coarse_steps) + ")");
  }
  if (sender == receiver) {
    throw ValidationError("transfer needs distinct sender and receiver (both are " +
                          std::to_string(sender) + ")");
  }

  const auto g = [&](double t) {
    const std::complex<double> f = propagator_amplitude(sd, sender, receiver, t);
    return std::norm(f);
  };

  std::vector<double> samples(static_cast<std::size_t>(coarse_steps) + 1);
  double g_max = 0.0;
  std::size_t arg_max = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double t = t_max * static_cast<double>(i) / static_cast<double>(coarse_steps);
    samples[i] = g(t);
    if (samples[i] > g_max) {
      g_max = samples[i];
      arg_max = i;
    }
  }
  if (g_max < 1e-6) {
    throw NumericalError("flat channel: max |f|^2 over the window is " + std::to_string(g_max) +
                         "; no transfer event to report");
  }

  const double step = t_max / static_cast<double>(coarse_steps);
  const std::size_t last = samples.size() - 1;
  const double lo = arg_max >= 1 ? static_cast<double>(arg_max - 1) * step : 0.0;
  const double hi = arg_max < last ? static_cast<double>(arg_max + 1) * step : t_max;
  auto [peak_t, peak_g] = refine_peak(g, lo, hi);
  if (samples[arg_max] > peak_g) {
    peak_t = static_cast<double>(arg_max) * step;
    peak_g = samples[arg_max];
  }

  TransferReport report;
  report.t_ideal = ideal_transfer_time(std::abs(receiver - sender), nu);
  report.t_estimate = estimate_transfer_time(sd);
  report.t_measured = peak_t;
  report.f_max = std::min(peak_g, 1.0);
  report.fidelity_max = fidelity(std::sqrt(report.f_max));
  report.ratio_ideal_over_measured = report.t_ideal / report.t_measured;
  return report;
}

} // namespace spinchain
