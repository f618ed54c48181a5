#include "spinchain/chain_model.hpp"

#include "spinchain/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace spinchain {

namespace {

std::string describe(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

} // namespace

void ChainSpec::validate() const {
  if (n_sites < 2) {
    throw ValidationError("n_sites must be at least 2 (got " + std::to_string(n_sites) + ")");
  }
  if (!(nu > 0.0)) {
    throw ValidationError("nu must be positive (got " + describe(nu) + ")");
  }
  if (!(lattice_spacing > 0.0)) {
    throw ValidationError("lattice_spacing must be positive (got " + describe(lattice_spacing) + ")");
  }
  if (!(nn_energy > 0.0)) {
    throw ValidationError("nn_energy must be positive (got " + describe(nn_energy) + ")");
  }
  for (int hole : holes) {
    if (hole < 1 || hole > n_sites) {
      throw ValidationError("holes contains site " + std::to_string(hole) + " outside 1.." +
                            std::to_string(n_sites));
    }
  }
  if (sender < 1 || sender > n_sites) {
    throw ValidationError("sender must lie in 1.." + std::to_string(n_sites) + " (got " +
                          std::to_string(sender) + ")");
  }
  if (receiver < 1 || receiver > n_sites) {
    throw ValidationError("receiver must lie in 1.." + std::to_string(n_sites) + " (got " +
                          std::to_string(receiver) + ")");
  }
  if (sender == receiver) {
    throw ValidationError("sender and receiver must be distinct sites (both are " +
                          std::to_string(sender) + ")");
  }
  if (is_hole(sender)) {
    throw ValidationError("sender site " + std::to_string(sender) + " is a hole");
  }
  if (is_hole(receiver)) {
    throw ValidationError("receiver site " + std::to_string(receiver) + " is a hole");
  }
}

double ChainSpec::coupling_constant() const {
  return 2.0 * std::pow(lattice_spacing, nu) * nn_energy;
}

std::vector<int> ChainSpec::occupied_sites() const {
  std::vector<int> sites;
  sites.reserve(static_cast<std::size_t>(n_sites));
  for (int site = 1; site <= n_sites; ++site) {
    if (!is_hole(site)) {
      sites.push_back(site);
    }
  }
  return sites;
}

std::string ChainSpec::label() const {
  std::ostringstream out;
  out << "n=" << n_sites << " nu=" << nu;
  if (!holes.empty()) {
    out << " holes={";
    bool first = true;
    for (int hole : holes) {
      if (!first) out << ",";
      out << hole;
      first = false;
    }
    out << "}";
  }
  return out.str();
}

int HamiltonianMatrix::row_of_site(int site) const {
  auto it = std::lower_bound(basis_sites.begin(), basis_sites.end(), site);
  if (it == basis_sites.end() || *it != site) return -1;
  return static_cast<int>(it - basis_sites.begin());
}

CouplingTable build_couplings(const ChainSpec& spec) {
  spec.validate();
  const double c = spec.coupling_constant();
  CouplingTable table;
  table.n_sites = spec.n_sites;
  table.values = Eigen::MatrixXd::Zero(spec.n_sites, spec.n_sites);
  for (int i = 1; i <= spec.n_sites; ++i) {
    if (spec.is_hole(i)) continue;
    for (int j = i + 1; j <= spec.n_sites; ++j) {
      if (spec.is_hole(j)) continue;
      const double coupling = c / std::pow(spec.lattice_spacing * (j - i), spec.nu);
      table.values(i - 1, j - 1) = coupling;
      table.values(j - 1, i - 1) = coupling;
    }
  }
  return table;
}

namespace {

// Sum after sorting ascending: mirror-image rows carry the same multiset of
// couplings, so their sums agree bitwise, and decoupled-site zeros at the
// front leave the total untouched (x + 0 == x).
double sorted_sum(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end());
  double total = 0.0;
  for (double term : terms) total += term;
  return total;
}

} // namespace

HamiltonianMatrix build_single_excitation_hamiltonian(const ChainSpec& spec,
                                                      HoleTreatment holes) {
  const CouplingTable table = build_couplings(spec);
  const int n = spec.n_sites;

  std::vector<double> pair_terms;
  pair_terms.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      pair_terms.push_back(table.at(i, j));
    }
  }
  const double ground_energy = -0.5 * sorted_sum(pair_terms);

  HamiltonianMatrix h;
  if (holes == HoleTreatment::drop) {
    h.basis_sites = spec.occupied_sites();
  } else {
    h.basis_sites.resize(static_cast<std::size_t>(n));
    for (int site = 1; site <= n; ++site) h.basis_sites[site - 1] = site;
  }

  const int dim = static_cast<int>(h.basis_sites.size());
  h.entries = Eigen::MatrixXd::Zero(dim, dim);
  std::vector<double> row_terms;
  row_terms.reserve(static_cast<std::size_t>(n - 1));
  for (int row = 0; row < dim; ++row) {
    const int site = h.basis_sites[static_cast<std::size_t>(row)];
    row_terms.clear();
    for (int other = 1; other <= n; ++other) {
      if (other != site) row_terms.push_back(table.at(site, other));
    }
    h.entries(row, row) = ground_energy + sorted_sum(row_terms);
    for (int col = row + 1; col < dim; ++col) {
      const double half = 0.5 * table.at(site, h.basis_sites[static_cast<std::size_t>(col)]);
      h.entries(row, col) = half;
      h.entries(col, row) = half;
    }
  }
  return h;
}

} // namespace spinchain
