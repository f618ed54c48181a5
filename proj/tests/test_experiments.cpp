#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinchain/csv_io.hpp"
#include "spinchain/errors.hpp"
#include "spinchain/experiments.hpp"
#include "spinchain/transfer.hpp"

#include <cmath>
#include <set>

using namespace spinchain;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("spec factory wires the chain families") {
  const ChainSpec complete = make_spec(10, 3.0, Variant::complete);
  CHECK(complete.holes.empty());
  CHECK(complete.sender == 1);
  CHECK(complete.receiver == 10);

  const ChainSpec dh = make_spec(10, 2.0, Variant::double_hole);
  CHECK(dh.holes == std::set<int>{2, 9});
  CHECK(dh.nu == 2.0);

  const ChainSpec custom = make_spec(10, 3.0, Variant::custom, {3, 7});
  CHECK(custom.holes == std::set<int>{3, 7});

  CHECK(variant_label(Variant::complete) == "complete");
  CHECK(variant_label(Variant::double_hole) == "dh");
  CHECK(variant_label(Variant::custom) == "custom");
}

TEST_CASE("double-hole family needs interior room") {
  CHECK_THROWS_AS(make_spec(4, 3.0, Variant::double_hole), ValidationError);
  CHECK_NOTHROW(make_spec(5, 3.0, Variant::double_hole));
}

TEST_CASE("hole overrides only belong to the custom family") {
  CHECK_THROWS_AS(make_spec(10, 3.0, Variant::complete, {3}), ValidationError);
  CHECK_THROWS_AS(make_spec(10, 3.0, Variant::double_hole, {3}), ValidationError);
}

TEST_CASE("two-spin trace reproduces the analytic curve") {
  const FidelityTrace trace = run_fidelity_trace(make_spec(2, 3.0, Variant::complete), kPi, 101);
  REQUIRE(trace.times.size() == 101);
  CHECK(trace.times.front() == 0.0);
  CHECK(trace.times.back() == doctest::Approx(kPi).epsilon(1e-15));
  for (std::size_t k = 0; k < trace.times.size(); ++k) {
    CHECK(trace.f_abs[k] == doctest::Approx(std::abs(std::sin(trace.times[k]))).epsilon(1e-12));
    CHECK(trace.fidelity[k] == fidelity(trace.f_abs[k]));
  }
  CHECK(trace.f_m == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("trace input validation") {
  const ChainSpec spec = make_spec(2, 3.0, Variant::complete);
  CHECK_THROWS_AS(run_fidelity_trace(spec, kPi, 1), ValidationError);
  CHECK_THROWS_AS(run_fidelity_trace(spec, 0.0, 100), ValidationError);
}

TEST_CASE("sweeps are deterministic across runs") {
  SweepRequest req;
  req.n_values = {5, 10};
  req.variants = {Variant::complete, Variant::double_hole};
  const std::string a = sweep_to_csv(run_sweep(req));
  const std::string b = sweep_to_csv(run_sweep(req));
  CHECK(a == b);
}

TEST_CASE("a failing row does not sink the sweep") {
  SweepRequest req;
  req.n_values = {4, 10};
  req.variants = {Variant::double_hole};
  const SweepResult res = run_sweep(req);
  REQUIRE(res.rows.size() == 2);
  CHECK(res.rows[0].n_sites == 4);
  CHECK(res.rows[0].error == "validation");
  CHECK(res.rows[1].n_sites == 10);
  CHECK(res.rows[1].error.empty());
  CHECK(sweep_to_csv(res).find("ERROR:validation") != std::string::npos);
}

TEST_CASE("sweep rows carry the channel diagnostics") {
  SweepRequest req;
  req.n_values = {10};
  req.variants = {Variant::complete, Variant::double_hole};
  const SweepResult res = run_sweep(req);
  REQUIRE(res.rows.size() == 2);
  const SweepRow& complete = res.rows[0];
  const SweepRow& dh = res.rows[1];
  CHECK(complete.variant == Variant::complete);
  CHECK(dh.variant == Variant::double_hole);

  CHECK(complete.report.t_ideal == doctest::Approx(0.5 * kPi * 729.0).epsilon(1e-15));
  CHECK(complete.delta12 > 0.0);
  CHECK(dh.delta12 > 0.0);
  CHECK(dh.f_m == doctest::Approx(0.4966).epsilon(2e-3));
  CHECK(dh.gamma1_sq == doctest::Approx(0.003323456632438446).epsilon(1e-9));
  CHECK(complete.gamma1_sq == doctest::Approx(0.19368664985652659).epsilon(1e-9));
  // the cleaner channel transfers better
  CHECK(dh.report.fidelity_max > complete.report.fidelity_max);
}

TEST_CASE("eigenvector dump skips holes and keeps normalization") {
  const EigenvectorTable table =
      dump_eigenvector_components(make_spec(6, 3.0, Variant::custom, {2, 5}), {1, 2});
  REQUIRE(table.sites.size() == 6);
  REQUIRE(table.components.size() == 2);
  for (std::size_t m = 0; m < 2; ++m) {
    double norm_sq = 0.0;
    for (std::size_t s = 0; s < table.sites.size(); ++s) {
      const bool hole = table.sites[s] == 2 || table.sites[s] == 5;
      CHECK(table.components[m][s].has_value() == !hole);
      if (table.components[m][s]) norm_sq += *table.components[m][s] * *table.components[m][s];
    }
    CHECK(std::abs(norm_sq - 1.0) < 1e-10);
  }
}

TEST_CASE("two-spin eigenvector components are the even and odd pair") {
  const EigenvectorTable table =
      dump_eigenvector_components(make_spec(2, 3.0, Variant::complete), {1, 2});
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(*table.components[0][0] == doctest::Approx(inv_sqrt2).epsilon(1e-12));
  CHECK(*table.components[0][1] == doctest::Approx(-inv_sqrt2).epsilon(1e-12));
  CHECK(*table.components[1][0] == doctest::Approx(inv_sqrt2).epsilon(1e-12));
  CHECK(*table.components[1][1] == doctest::Approx(inv_sqrt2).epsilon(1e-12));
}

TEST_CASE("eigenvector dump validates the mode list") {
  const ChainSpec spec = make_spec(6, 3.0, Variant::custom, {2, 5}); // dim 4
  CHECK_THROWS_AS(dump_eigenvector_components(spec, {0}), ValidationError);
  CHECK_THROWS_AS(dump_eigenvector_components(spec, {5}), ValidationError);
  CHECK_NOTHROW(dump_eigenvector_components(spec, {4}));
}

TEST_CASE("on-site energies mirror exactly and dip at the chain ends") {
  const OnsiteTable raw = dump_onsite_energies(make_spec(11, 3.0, Variant::complete), false);
  REQUIRE(raw.sites.size() == 11);
  for (std::size_t i = 0; i < raw.sites.size(); ++i)
    CHECK(raw.energies[i] == raw.energies[raw.sites.size() - 1 - i]);
  for (std::size_t i = 1; i + 1 < raw.sites.size(); ++i) CHECK(raw.energies[0] < raw.energies[i]);

  const OnsiteTable shifted = dump_onsite_energies(make_spec(11, 3.0, Variant::complete), true);
  CHECK(shifted.energies[0] == 0.0);
  for (std::size_t i = 0; i < shifted.energies.size(); ++i)
    CHECK(shifted.energies[i] == raw.energies[i] - raw.energies[0]);
}

TEST_CASE("on-site dump lists occupied sites only") {
  const OnsiteTable table = dump_onsite_energies(make_spec(10, 3.0, Variant::double_hole), false);
  CHECK(table.sites == std::vector<int>{1, 3, 4, 5, 6, 7, 8, 10});
}
