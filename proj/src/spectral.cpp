#include "spinchain/spectral.hpp"

#include "spinchain/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace spinchain {

int SpectralData::row_of_site(int site) const {
  auto it = std::lower_bound(basis_sites.begin(), basis_sites.end(), site);
  if (it == basis_sites.end() || *it != site) return -1;
  return static_cast<int>(it - basis_sites.begin());
}

SpectralData eigendecompose(const HamiltonianMatrix& h) {
  const int n = h.dim();
  if (n < 1) {
    throw ValidationError("eigendecompose needs a non-empty matrix");
  }
  if (h.entries.rows() != h.entries.cols() ||
      static_cast<int>(h.basis_sites.size()) != n) {
    throw ValidationError("HamiltonianMatrix entries/basis_sites sizes disagree (dim " +
                          std::to_string(h.entries.rows()) + "x" +
                          std::to_string(h.entries.cols()) + ", " +
                          std::to_string(h.basis_sites.size()) + " sites)");
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.entries);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver failed to converge on dim " + std::to_string(n) +
                         " (iteration cap 30*dim = " + std::to_string(30 * n) + " exhausted)");
  }

  SpectralData sd;
  sd.eigenvalues = solver.eigenvalues();
  sd.eigenvectors = solver.eigenvectors();
  sd.basis_sites = h.basis_sites;

  for (int j = 0; j < n; ++j) {
    int pivot = 0;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
      const double mag = std::abs(sd.eigenvectors(i, j));
      if (mag > best) {
        best = mag;
        pivot = i;
      }
    }
    if (sd.eigenvectors(pivot, j) < 0.0) {
      sd.eigenvectors.col(j) = -sd.eigenvectors.col(j);
    }
  }

  const double norm = h.entries.norm();
  const double tolerance = 1e-10 * (norm > 0.0 ? norm : 1.0);
  for (int j = 0; j < n; ++j) {
    const double residual =
        (h.entries * sd.eigenvectors.col(j) - sd.eigenvalues(j) * sd.eigenvectors.col(j)).norm();
    if (residual > tolerance) {
      throw NumericalError("eigenpair " + std::to_string(j) + " residual " +
                           std::to_string(residual) + " exceeds " + std::to_string(tolerance) +
                           " on dim " + std::to_string(n));
    }
  }
  return sd;
}

ProjectionSet projections(const SpectralData& sd, int sender, int receiver) {
  const int row_s = sd.row_of_site(sender);
  const int row_r = sd.row_of_site(receiver);
  if (row_s < 0) {
    throw ValidationError("sender site " + std::to_string(sender) + " is not in the basis");
  }
  if (row_r < 0) {
    throw ValidationError("receiver site " + std::to_string(receiver) + " is not in the basis");
  }

  const int n = sd.dim();
  ProjectionSet p;
  p.sigma_abs.resize(n);
  p.sigma_phase.resize(n);
  p.rho_abs.resize(n);
  p.rho_phase.resize(n);
  p.gamma_sq.resize(n);

  for (int j = 0; j < n; ++j) {
    const double cs = sd.eigenvectors(row_s, j);
    const double cr = sd.eigenvectors(row_r, j);
    p.sigma_abs(j) = std::abs(cs);
    p.sigma_phase(j) = cs < 0.0 ? std::numbers::pi : 0.0;
    p.rho_abs(j) = std::abs(cr);
    p.rho_phase(j) = cr < 0.0 ? std::numbers::pi : 0.0;
    double rest = 0.0;
    for (int i = 0; i < n; ++i) {
      if (i != row_s && i != row_r) rest += sd.eigenvectors(i, j) * sd.eigenvectors(i, j);
    }
    p.gamma_sq(j) = rest;
  }

  const double sum_sigma = p.sigma_abs.squaredNorm();
  const double sum_rho = p.rho_abs.squaredNorm();
  if (std::abs(sum_sigma - 1.0) > 1e-10 || std::abs(sum_rho - 1.0) > 1e-10) {
    throw NumericalError("projection normalization broke: sum|sigma|^2 = " +
                         std::to_string(sum_sigma) + ", sum|rho|^2 = " + std::to_string(sum_rho));
  }
  for (int j = 0; j < n; ++j) {
    const double total =
        p.sigma_abs(j) * p.sigma_abs(j) + p.rho_abs(j) * p.rho_abs(j) + p.gamma_sq(j);
    if (std::abs(total - 1.0) > 1e-10) {
      throw NumericalError("eigenvector " + std::to_string(j) +
                           " completeness broke: sigma^2 + rho^2 + gamma^2 = " +
                           std::to_string(total));
    }
  }
  return p;
}

double gap_delta12(const SpectralData& sd) {
  if (sd.dim() < 2) {
    throw ValidationError("gap_delta12 needs at least two eigenvalues (dim " +
                          std::to_string(sd.dim()) + ")");
  }
  return sd.eigenvalues(1) - sd.eigenvalues(0);
}

} // namespace spinchain
