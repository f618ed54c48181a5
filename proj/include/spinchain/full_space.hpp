#pragma once

#include "spinchain/chain_model.hpp"

#include <Eigen/Dense>

namespace spinchain {

/// Brute-force reference: the Hamiltonian on the full 2^N product space,
/// assembled from explicit spin-1/2 operators as
///   sum over pairs i<j of J_{ij} (Sx_i Sx_j + Sy_i Sy_j - 2 Sz_i Sz_j).
/// Basis state b encodes site k in bit k-1 (1 = up), ground state is b = 0.
/// Guarded at N <= 12; meant for validating the reduced builder, not for
/// production runs.
Eigen::MatrixXd build_full_space_hamiltonian(const ChainSpec& spec);

/// Diagonal of the total-S^z operator in the same basis ordering.
Eigen::VectorXd magnetization_diagonal(int n_sites);

/// Extract the one-excitation block (basis states with exactly one up spin)
/// from a full-space matrix. Verifies first that those columns couple to no
/// other magnetization sector: any nonzero cross-sector element throws
/// ConsistencyError, since it would mean the construction broke [H,M] = 0.
/// HoleTreatment::drop restricts rows to occupied sites.
HamiltonianMatrix project_to_single_excitation(const Eigen::MatrixXd& full, const ChainSpec& spec,
                                               HoleTreatment holes = HoleTreatment::drop);

/// Entrywise comparison of two same-basis Hamiltonians after removing one
/// global diagonal shift (the mean diagonal difference).
struct OracleComparison {
  double shift = 0.0;         // mean(diag(lhs) - diag(rhs)), removed before comparing
  double max_deviation = 0.0; // largest |lhs - rhs - shift*I| entry
  int site_row = 0;           // chain sites of that entry
  int site_col = 0;
};

OracleComparison compare_to_oracle(const HamiltonianMatrix& lhs, const HamiltonianMatrix& rhs);

} // namespace spinchain
