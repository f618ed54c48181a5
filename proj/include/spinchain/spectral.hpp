#pragma once

#include "spinchain/chain_model.hpp"

#include <Eigen/Dense>

#include <vector>

namespace spinchain {

/// Eigensystem of a single-excitation Hamiltonian. Eigenvalues ascend;
/// eigenvector j sits in column j of `eigenvectors`. Signs are pinned by the
/// rule "largest-magnitude component positive, lowest index breaking ties",
/// so repeated runs give identical data even inside degenerate clusters.
struct SpectralData {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
  std::vector<int> basis_sites;

  int dim() const { return static_cast<int>(eigenvalues.size()); }
  int row_of_site(int site) const;
};

/// Sender/receiver structure of each eigenvector: sigma = <lambda_j|s>,
/// rho = <lambda_j|r> split into magnitude and phase (0 or pi for real
/// symmetric H), and the channel opacity gamma_sq_j = sum of the squared
/// components on all other sites.
struct ProjectionSet {
  Eigen::VectorXd sigma_abs;
  Eigen::VectorXd sigma_phase;
  Eigen::VectorXd rho_abs;
  Eigen::VectorXd rho_phase;
  Eigen::VectorXd gamma_sq;

  int dim() const { return static_cast<int>(sigma_abs.size()); }
};

/// Dense symmetric eigendecomposition with a residual check
/// (||Hv - Ev|| <= 1e-10 ||H||_F per column) and the deterministic sign rule.
SpectralData eigendecompose(const HamiltonianMatrix& h);

/// Projections onto sender and receiver sites. Enforces the normalization
/// sums (sum sigma^2 = sum rho^2 = 1) and the per-eigenvector completeness
/// sigma^2 + rho^2 + gamma^2 = 1, both within 1e-10.
ProjectionSet projections(const SpectralData& sd, int sender, int receiver);

/// Energy difference between the two lowest eigenvalues.
double gap_delta12(const SpectralData& sd);

} // namespace spinchain
