#pragma once

#include "spinchain/chain_model.hpp"
#include "spinchain/spectral.hpp"

#include <complex>
#include <vector>

namespace spinchain {

/// Sampled |f(t)| and F(t) on a uniform grid, plus the time-independent
/// mean f_m of |f|^2.
struct FidelityTrace {
  std::vector<double> times;
  std::vector<double> f_abs;
  std::vector<double> fidelity;
  double f_m = 0.0;
  ChainSpec spec;
};

/// The three transfer-time notions and the peak heights at t_measured.
struct TransferReport {
  double t_ideal = 0.0;    // (pi/2) d^nu, the two-spin lower bound
  double t_estimate = 0.0; // pi / Delta12
  double t_measured = 0.0; // refined global maximum of |f|^2 in the window
  double f_max = 0.0;      // |f(t_measured)|^2
  double fidelity_max = 0.0;
  double ratio_ideal_over_measured = 0.0;
};

/// Time-independent and oscillatory parts of |f(t)|^2; f_m + f_t = |f|^2.
struct FmFt {
  double f_m = 0.0;
  double f_t = 0.0;
};

/// f(t) = sum_j e^{-i E_j t} <r|lambda_j><lambda_j|s>. Throws NumericalError
/// if |f| exceeds 1 + 1e-12 (a unitarity break upstream).
std::complex<double> propagator_amplitude(const SpectralData& sd, int sender, int receiver,
                                          double t);

/// Bloch-sphere-averaged transmission fidelity F = f^2/6 + f/3 + 1/2.
/// Values in (1, 1+1e-12] are clamped to 1; anything further outside [0,1]
/// is rejected.
double fidelity(double f_abs);

/// Eigenbasis split of |f(t)|^2: f_m = sum_j sigma_j^2 rho_j^2 and
/// f_t = 2 sum_{k<l} |sigma_k||sigma_l||rho_k||rho_l| cos(Delta_kl t + xi_kl)
/// with xi_kl = phi_k - phi_l - psi_k + psi_l.
FmFt decompose_fm_ft(const ProjectionSet& ps, const Eigen::VectorXd& eigenvalues, double t);

/// (pi/2) d^nu for sender-receiver separation d in lattice units.
double ideal_transfer_time(int distance_units, double nu);

/// pi / Delta12; throws NumericalError when the two lowest eigenvalues are
/// degenerate (Delta12 <= 1e-13).
double estimate_transfer_time(const SpectralData& sd);

/// Locate the transfer event in the window [0, t_max]: coarse scan of
/// coarse_steps+1 samples for the global maximum of |f|^2, then
/// golden-section refinement of its bracket to relative time tolerance 1e-6.
/// A maximum still rising at t_max refines against the window edge. Throws
/// NumericalError if the channel is flat (window maximum below 1e-6).
TransferReport find_transfer_event(const SpectralData& sd, int sender, int receiver, double nu,
                                   double t_max, int coarse_steps);

} // namespace spinchain
