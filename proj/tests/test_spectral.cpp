#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinchain/chain_model.hpp"
#include "spinchain/errors.hpp"
#include "spinchain/experiments.hpp"
#include "spinchain/spectral.hpp"

#include <cmath>
#include <set>

using namespace spinchain;

namespace {

ChainSpec make(int n, double nu, std::set<int> holes = {}) {
  ChainSpec spec;
  spec.n_sites = n;
  spec.nu = nu;
  spec.holes = std::move(holes);
  spec.sender = 1;
  spec.receiver = n;
  return spec;
}

HamiltonianMatrix hand_matrix(const Eigen::MatrixXd& entries) {
  HamiltonianMatrix h;
  h.entries = entries;
  h.basis_sites.resize(entries.rows());
  for (int i = 0; i < entries.rows(); ++i) h.basis_sites[i] = i + 1;
  return h;
}

} // namespace

TEST_CASE("2x2 analytic eigensystem with pinned signs") {
  Eigen::MatrixXd m(2, 2);
  m << 3.0, 1.0, 1.0, 3.0;
  const SpectralData sd = eigendecompose(hand_matrix(m));

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(sd.eigenvalues(0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sd.eigenvalues(1) == doctest::Approx(4.0).epsilon(1e-14));
  // antisymmetric state first; tie on |v| resolved toward the lower index
  CHECK(sd.eigenvectors(0, 0) == doctest::Approx(inv_sqrt2).epsilon(1e-12));
  CHECK(sd.eigenvectors(1, 0) == doctest::Approx(-inv_sqrt2).epsilon(1e-12));
  CHECK(sd.eigenvectors(0, 1) == doctest::Approx(inv_sqrt2).epsilon(1e-12));
  CHECK(sd.eigenvectors(1, 1) == doctest::Approx(inv_sqrt2).epsilon(1e-12));
}

TEST_CASE("degenerate spectrum still yields an orthonormal pinned basis") {
  const SpectralData sd = eigendecompose(hand_matrix(Eigen::MatrixXd::Identity(4, 4)));
  CHECK((sd.eigenvectors.transpose() * sd.eigenvectors - Eigen::MatrixXd::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() < 1e-10);
  for (int j = 0; j < 4; ++j) {
    int arg = 0;
    sd.eigenvectors.col(j).cwiseAbs().maxCoeff(&arg);
    CHECK(sd.eigenvectors(arg, j) > 0.0);
  }
  CHECK(gap_delta12(sd) == 0.0);
}

TEST_CASE("orthonormality, reconstruction and trace on a physical chain") {
  const HamiltonianMatrix h = build_single_excitation_hamiltonian(make(14, 3.0, {2, 13}));
  const SpectralData sd = eigendecompose(h);
  const int d = sd.dim();

  CHECK((sd.eigenvectors.transpose() * sd.eigenvectors - Eigen::MatrixXd::Identity(d, d))
            .cwiseAbs()
            .maxCoeff() < 1e-10);
  const Eigen::MatrixXd rebuilt =
      sd.eigenvectors * sd.eigenvalues.asDiagonal() * sd.eigenvectors.transpose();
  CHECK((rebuilt - h.entries).cwiseAbs().maxCoeff() < 1e-9);
  CHECK(sd.eigenvalues.sum() == doctest::Approx(h.entries.trace()).epsilon(1e-12));
  CHECK(sd.basis_sites == h.basis_sites);
}

TEST_CASE("eigendecomposition is deterministic") {
  const HamiltonianMatrix h = build_single_excitation_hamiltonian(make(12, 2.0, {3, 10}));
  const SpectralData a = eigendecompose(h);
  const SpectralData b = eigendecompose(h);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(a.eigenvectors == b.eigenvectors);
}

TEST_CASE("sign rule holds on every eigenvector") {
  const SpectralData sd = eigendecompose(build_single_excitation_hamiltonian(make(12, 3.0, {2, 11})));
  for (int j = 0; j < sd.dim(); ++j) {
    const Eigen::VectorXd v = sd.eigenvectors.col(j);
    int arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    CHECK(v(arg) > 0.0);
    // no earlier component shares that magnitude
    for (int i = 0; i < arg; ++i) CHECK(std::abs(v(i)) < std::abs(v(arg)));
  }
}

TEST_CASE("lowest modes of a ferromagnetic chain localize on the end spins") {
  const SpectralData sd = eigendecompose(build_single_excitation_hamiltonian(make(10, 3.0)));
  for (int j = 0; j < 2; ++j) {
    const Eigen::VectorXd v = sd.eigenvectors.col(j).cwiseAbs();
    for (int i = 1; i < 9; ++i) {
      CHECK(v(0) > v(i));
      CHECK(v(9) > v(i));
    }
  }
}

TEST_CASE("two-spin projections split evenly with phases 0 and pi") {
  const SpectralData sd = eigendecompose(build_single_excitation_hamiltonian(make(2, 3.0)));
  const ProjectionSet ps = projections(sd, 1, 2);

  for (int j = 0; j < 2; ++j) {
    CHECK(ps.sigma_abs(j) * ps.sigma_abs(j) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ps.rho_abs(j) * ps.rho_abs(j) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ps.gamma_sq(j) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(ps.sigma_phase(j) == 0.0);
  }
  const double pi = std::acos(-1.0);
  CHECK(ps.rho_phase(0) == pi); // antisymmetric mode
  CHECK(ps.rho_phase(1) == 0.0);
}

TEST_CASE("double holes choke the channel opacity of the transfer doublet") {
  const SpectralData complete = eigendecompose(build_single_excitation_hamiltonian(make(10, 3.0)));
  const SpectralData dh = eigendecompose(build_single_excitation_hamiltonian(make(10, 3.0, {2, 9})));
  const ProjectionSet pc = projections(complete, 1, 10);
  const ProjectionSet pd = projections(dh, 1, 10);

  CHECK(pc.gamma_sq(0) == doctest::Approx(0.19368664985652659).epsilon(1e-9));
  CHECK(pc.gamma_sq(1) == doctest::Approx(0.19341040949554766).epsilon(1e-9));
  CHECK(pd.gamma_sq(0) == doctest::Approx(0.003323456632438446).epsilon(1e-9));
  CHECK(pd.gamma_sq(1) == doctest::Approx(0.0035158750958575787).epsilon(1e-9));
  CHECK(pd.gamma_sq(0) < pc.gamma_sq(0) / 10.0);
  CHECK(pd.gamma_sq(1) < pc.gamma_sq(1) / 10.0);
}

TEST_CASE("mirror-symmetric chains weight sender and receiver equally") {
  for (int n = 4; n <= 20; n += 4) {
    const SpectralData sd = eigendecompose(build_single_excitation_hamiltonian(make(n, 3.0)));
    const ProjectionSet ps = projections(sd, 1, n);
    for (int j = 0; j < ps.dim(); ++j)
      CHECK(std::abs(ps.sigma_abs(j) - ps.rho_abs(j)) < 1e-9);
  }
  const SpectralData sd = eigendecompose(build_single_excitation_hamiltonian(make(10, 3.0, {2, 9})));
  const ProjectionSet ps = projections(sd, 1, 10);
  for (int j = 0; j < ps.dim(); ++j)
    CHECK(std::abs(ps.sigma_abs(j) - ps.rho_abs(j)) < 1e-9);
}

TEST_CASE("projections reject sites outside the basis") {
  const SpectralData sd = eigendecompose(build_single_excitation_hamiltonian(make(10, 3.0, {2, 9})));
  CHECK_THROWS_AS(projections(sd, 2, 10), ValidationError);
  CHECK_THROWS_AS(projections(sd, 1, 11), ValidationError);
}

TEST_CASE("two-spin gap equals twice the coupling element") {
  const SpectralData sd = eigendecompose(build_single_excitation_hamiltonian(make(2, 1.0)));
  CHECK(gap_delta12(sd) == doctest::Approx(2.0).epsilon(1e-14));

  // distance 3 at nu=2 through holes: gap 2/9
  const SpectralData far = eigendecompose(build_single_excitation_hamiltonian(make(4, 2.0, {2, 3})));
  CHECK(gap_delta12(far) == doctest::Approx(2.0 / 9.0).epsilon(1e-13));
}

TEST_CASE("gap needs at least two levels") {
  const SpectralData sd = eigendecompose(hand_matrix(Eigen::MatrixXd::Constant(1, 1, 4.0)));
  CHECK_THROWS_AS(gap_delta12(sd), ValidationError);
}

TEST_CASE("transfer doublet splitting at n=50 matches the frozen value") {
  const SpectralData sd = eigendecompose(build_single_excitation_hamiltonian(make(50, 3.0)));
  CHECK(gap_delta12(sd) == doctest::Approx(5.2429907810846998e-06).epsilon(1e-6));
}
