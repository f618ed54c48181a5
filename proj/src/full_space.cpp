#include "spinchain/full_space.hpp"

#include "spinchain/errors.hpp"

#include <bit>
#include <complex>
#include <string>

namespace spinchain {

namespace {

constexpr int kMaxOracleSites = 12;

using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;

// Spin-1/2 matrices in the (down, up) basis, i.e. index 0 = down.
Mat2c spin_x() {
  Mat2c m;
  m << 0.0, 0.5, 0.5, 0.0;
  return m;
}

Mat2c spin_y() {
  const std::complex<double> ih(0.0, 0.5);
  Mat2c m;
  m << 0.0, ih, -ih, 0.0;
  return m;
}

Mat2c spin_z() {
  Mat2c m;
  m << -0.5, 0.0, 0.0, 0.5;
  return m;
}

// Two-site tensor product; composite index = 2*(index at site i) + (index at site j).
Mat4c two_site(const Mat2c& a, const Mat2c& b) {
  Mat4c out;
  for (int ar = 0; ar < 2; ++ar)
    for (int ac = 0; ac < 2; ++ac)
      for (int br = 0; br < 2; ++br)
        for (int bc = 0; bc < 2; ++bc) out(2 * ar + br, 2 * ac + bc) = a(ar, ac) * b(br, bc);
  return out;
}

// Pair operator Sx Sx + Sy Sy - 2 Sz Sz. Every entry comes out with imaginary
// part exactly +-0 (the y*y products multiply two purely imaginary numbers),
// which the caller checks before dropping to real arithmetic.
Mat4c pair_operator() {
  return two_site(spin_x(), spin_x()) + two_site(spin_y(), spin_y()) -
         2.0 * two_site(spin_z(), spin_z());
}

} // namespace

Eigen::MatrixXd build_full_space_hamiltonian(const ChainSpec& spec) {
  spec.validate();
  if (spec.n_sites > kMaxOracleSites) {
    throw ValidationError("full-space build refused: n_sites = " + std::to_string(spec.n_sites) +
                          " exceeds " + std::to_string(kMaxOracleSites) + " (would need a 2^" +
                          std::to_string(spec.n_sites) + " = " +
                          std::to_string(1L << spec.n_sites) + "-dimensional matrix)");
  }
  const CouplingTable table = build_couplings(spec);

  const Mat4c op_c = pair_operator();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (op_c(r, c).imag() != 0.0) {
        throw ConsistencyError("pair operator acquired an imaginary part at (" +
                               std::to_string(r) + "," + std::to_string(c) + ")");
      }
    }
  }
  const Eigen::Matrix4d op = op_c.real();

  const long dim = 1L << spec.n_sites;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 1; i <= spec.n_sites; ++i) {
    for (int j = i + 1; j <= spec.n_sites; ++j) {
      const double coupling = table.at(i, j);
      if (coupling == 0.0) continue;
      const long bit_i = 1L << (i - 1);
      const long bit_j = 1L << (j - 1);
      for (long b = 0; b < dim; ++b) {
        const int col2 = 2 * ((b & bit_i) ? 1 : 0) + ((b & bit_j) ? 1 : 0);
        for (int row2 = 0; row2 < 4; ++row2) {
          const double amp = op(row2, col2);
          if (amp == 0.0) continue;
          long target = b & ~(bit_i | bit_j);
          if (row2 & 2) target |= bit_i;
          if (row2 & 1) target |= bit_j;
          h(target, b) += coupling * amp;
        }
      }
    }
  }
  return h;
}

Eigen::VectorXd magnetization_diagonal(int n_sites) {
  if (n_sites < 1 || n_sites > kMaxOracleSites) {
    throw ValidationError("magnetization_diagonal needs 1 <= n_sites <= " +
                          std::to_string(kMaxOracleSites) + " (got " + std::to_string(n_sites) +
                          ")");
  }
  const long dim = 1L << n_sites;
  Eigen::VectorXd m(dim);
  for (long b = 0; b < dim; ++b) {
    m(b) = static_cast<double>(std::popcount(static_cast<unsigned long>(b))) -
           0.5 * static_cast<double>(n_sites);
  }
  return m;
}

HamiltonianMatrix project_to_single_excitation(const Eigen::MatrixXd& full, const ChainSpec& spec,
                                               HoleTreatment holes) {
  spec.validate();
  const long dim = 1L << spec.n_sites;
  if (full.rows() != dim || full.cols() != dim) {
    throw ValidationError("full matrix is " + std::to_string(full.rows()) + "x" +
                          std::to_string(full.cols()) + ", expected 2^" +
                          std::to_string(spec.n_sites));
  }

  for (int site = 1; site <= spec.n_sites; ++site) {
    const long col = 1L << (site - 1);
    for (long row = 0; row < dim; ++row) {
      if (std::popcount(static_cast<unsigned long>(row)) == 1) continue;
      if (full(row, col) != 0.0) {
        throw ConsistencyError("single-excitation column for site " + std::to_string(site) +
                               " couples to basis state " + std::to_string(row) +
                               " in another magnetization sector (element " +
                               std::to_string(full(row, col)) + ")");
      }
    }
  }

  HamiltonianMatrix block;
  if (holes == HoleTreatment::drop) {
    block.basis_sites = spec.occupied_sites();
  } else {
    block.basis_sites.resize(static_cast<std::size_t>(spec.n_sites));
    for (int site = 1; site <= spec.n_sites; ++site) {
      block.basis_sites[static_cast<std::size_t>(site - 1)] = site;
    }
  }
  const int n = static_cast<int>(block.basis_sites.size());
  block.entries.resize(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      block.entries(r, c) = full(1L << (block.basis_sites[static_cast<std::size_t>(r)] - 1),
                                 1L << (block.basis_sites[static_cast<std::size_t>(c)] - 1));
    }
  }
  return block;
}

OracleComparison compare_to_oracle(const HamiltonianMatrix& lhs, const HamiltonianMatrix& rhs) {
  if (lhs.basis_sites != rhs.basis_sites) {
    throw ConsistencyError("oracle comparison across different bases (dim " +
                           std::to_string(lhs.dim()) + " vs " + std::to_string(rhs.dim()) + ")");
  }
  const int n = lhs.dim();
  OracleComparison result;
  result.shift = (lhs.entries.diagonal() - rhs.entries.diagonal()).mean();
  result.site_row = lhs.basis_sites.empty() ? 0 : lhs.basis_sites[0];
  result.site_col = result.site_row;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const double expected = rhs.entries(r, c) + (r == c ? result.shift : 0.0);
      const double deviation = std::abs(lhs.entries(r, c) - expected);
      if (deviation > result.max_deviation) {
        result.max_deviation = deviation;
        result.site_row = lhs.basis_sites[static_cast<std::size_t>(r)];
        result.site_col = lhs.basis_sites[static_cast<std::size_t>(c)];
      }
    }
  }
  return result;
}

} // namespace spinchain
