#pragma once

#include <Eigen/Dense>

#include <set>
#include <string>
#include <vector>

namespace spinchain {

/// One experiment instance: a linear chain of spins at uniform spacing with
/// power-law couplings J_{i,j} = C/(a|i-j|)^nu, a set of "hole" sites whose
/// couplings are all zeroed, and a sender/receiver pair.
///
/// Sites are numbered 1..n_sites. Units: lattice_spacing is the length unit
/// and nn_energy is the nearest-neighbour Hamiltonian element C/(2a^nu);
/// both default to 1 (chain units). C is derived, never a free parameter.
struct ChainSpec {
  int n_sites = 0;
  double nu = 3.0;
  std::set<int> holes;
  int sender = 1;
  int receiver = 0;
  double lattice_spacing = 1.0;
  double nn_energy = 1.0;

  /// Throws ValidationError naming the offending field.
  void validate() const;

  /// Coupling constant C = 2 a^nu * nn_energy.
  double coupling_constant() const;

  /// Occupied (non-hole) sites, ascending.
  std::vector<int> occupied_sites() const;

  bool is_hole(int site) const { return holes.count(site) > 0; }

  /// Short tag such as "n=50 nu=3 holes={2,49}", used in messages and traces.
  std::string label() const;
};

/// Symmetric J_{i,j} table in energy units, zero diagonal, zero rows for holes.
struct CouplingTable {
  int n_sites = 0;
  Eigen::MatrixXd values; // n_sites x n_sites, 1-based sites at index-1

  double at(int site_i, int site_j) const { return values(site_i - 1, site_j - 1); }
};

/// Real symmetric Hamiltonian block with its row -> chain-site map.
struct HamiltonianMatrix {
  Eigen::MatrixXd entries;
  std::vector<int> basis_sites; // ascending

  int dim() const { return static_cast<int>(entries.rows()); }

  /// Row index of a chain site, or -1 if the site is not in the basis.
  int row_of_site(int site) const;
};

/// Whether hole sites are dropped from the basis (dim = N - |holes|) or kept
/// as decoupled rows. The two agree exactly on the occupied block.
enum class HoleTreatment { drop, keep };

CouplingTable build_couplings(const ChainSpec& spec);

/// Single-excitation Hamiltonian: off-diagonal J_{ij}/2, diagonal
/// E_g + sum_k J_{ik} with E_g = -(1/2) sum_{k<l} J_{kl}.
/// Row sums accumulate in ascending value order, so mirror-image rows add the
/// same sequence of terms; mirror symmetry of the matrix is exact, not
/// approximate, whenever the hole set is mirror-symmetric.
HamiltonianMatrix build_single_excitation_hamiltonian(const ChainSpec& spec,
                                                      HoleTreatment holes = HoleTreatment::drop);

} // namespace spinchain
