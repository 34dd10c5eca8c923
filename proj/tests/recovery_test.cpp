#include "qsi/recovery.hpp"

#include "qsi/costs.hpp"
#include "support/corpus.hpp"
#include "support/testutil.hpp"

#include <doctest.h>

#include <cmath>

using qsi::Matrix;
using qsi::MultipartiteState;
using qsi::RecoveryReport;
using qsi::Role;
using testutil::max_abs;

namespace {

MultipartiteState product_markov(std::uint64_t seed) {
  // rho_{c,s1} x rho_{s2}: an exact Markov chain c - s1 - s2.
  const MultipartiteState cs1 = qsi::with_labels(
      qsi::density_from_pure(qsi::random_pure_state({2, 2}, seed)),
      {"c", "s1"});
  const MultipartiteState s2 = qsi::with_roles(
      qsi::with_labels(qsi::random_mixed_state({3}, 2, seed + 1), {"s2"}),
      {Role::reference});
  return qsi::tensor_product(cs1, s2);
}

MultipartiteState ghz4_markov() {
  // Tracing one GHZ4 qubit leaves a classically correlated three-qubit
  // mixture, a Markov chain in any order.
  const MultipartiteState ghz4 = qsi::density_from_pure(qsi::ghz_state(4));
  return qsi::partial_trace(ghz4, {"q1", "q2", "q3"});
}

}  // namespace

TEST_CASE("product states recover exactly") {
  for (std::uint64_t seed : {41u, 42u, 43u}) {
    const MultipartiteState state = product_markov(seed);
    const RecoveryReport rep =
        qsi::recovery_report(state, {"c"}, {"s1"}, {"s2"});
    CHECK(std::abs(rep.qcmi) <= 1e-8);
    CHECK(rep.achieved_fidelity >= 1.0 - 1e-6);
    CHECK(rep.bound == doctest::Approx(1.0));
    CHECK(rep.bound_satisfied);
    CHECK(std::abs(rep.trace_deficiency) < 1e-8);

    const MultipartiteState rebuilt =
        qsi::petz_recover(state, {"c"}, {"s1"}, {"s2"});
    CHECK(max_abs(rebuilt.rho - state.rho) < 1e-8);
    CHECK(qsi::is_markov(state, {"c"}, {"s1"}, {"s2"}, 1e-8));
  }
}

TEST_CASE("classically correlated mixture is a markov chain") {
  const MultipartiteState state = ghz4_markov();
  const RecoveryReport rep =
      qsi::recovery_report(state, {"q1"}, {"q2"}, {"q3"});
  CHECK(std::abs(rep.qcmi) <= 1e-8);
  CHECK(rep.achieved_fidelity >= 1.0 - 1e-8);
  CHECK(rep.bound_satisfied);
  CHECK(qsi::is_markov(state, {"q1"}, {"q2"}, {"q3"}, 1e-6));
}

TEST_CASE("ghz3 recovery hits the bound exactly") {
  const MultipartiteState ghz3 = qsi::density_from_pure(qsi::ghz_state(3));
  const RecoveryReport rep =
      qsi::recovery_report(ghz3, {"q1"}, {"q2"}, {"q3"});
  CHECK(rep.qcmi == doctest::Approx(1.0));
  CHECK(rep.bound == doctest::Approx(std::exp2(-0.5)));
  CHECK(std::abs(rep.achieved_fidelity - std::exp2(-0.5)) < 1e-9);
  CHECK(rep.bound_satisfied);
  CHECK(!qsi::is_markov(ghz3, {"q1"}, {"q2"}, {"q3"}, 1e-6));
}

TEST_CASE("recovered states are valid densities") {
  const auto states = corpus::recovery_bound();
  for (std::size_t s = 0; s < 20; ++s) {
    const auto& state = states[s * 5];
    const auto labels = state.layout.labels();
    const MultipartiteState rebuilt = qsi::petz_recover(
        state, {labels[0]}, {labels[1]}, {labels[2]});
    CHECK_NOTHROW(qsi::validate_state(rebuilt));
    CHECK(rebuilt.layout.labels() ==
          std::vector<std::string>{labels[0], labels[1], labels[2]});
  }
}

TEST_CASE("exactness works in both directions corpus-wide") {
  for (const auto& state : corpus::recovery_bound()) {
    const auto labels = state.layout.labels();
    const RecoveryReport rep = qsi::recovery_report(
        state, {labels[0]}, {labels[1]}, {labels[2]});
    if (rep.qcmi <= 1e-8) CHECK(rep.achieved_fidelity >= 1.0 - 1e-6);
    if (rep.achieved_fidelity >= 1.0 - 1e-10) CHECK(rep.qcmi <= 1e-6);
    CHECK(rep.achieved_fidelity <= 1.0 + 1e-9);
    CHECK(rep.achieved_fidelity >= 0.0);
    CHECK(rep.bound == doctest::Approx(std::exp2(-0.5 * rep.qcmi)));
  }
}

TEST_CASE("fidelity bound holds on the pre-verified corpus") {
  for (const auto& state : corpus::recovery_bound()) {
    const auto labels = state.layout.labels();
    const RecoveryReport rep = qsi::recovery_report(
        state, {labels[0]}, {labels[1]}, {labels[2]});
    CHECK(rep.bound_satisfied);
    CHECK(rep.achieved_fidelity >= rep.bound - 1e-8);
  }
}

TEST_CASE("label bookkeeping") {
  const MultipartiteState ghz3 = qsi::density_from_pure(qsi::ghz_state(3));

  // The conditioning system can sit anywhere in the layout.
  const RecoveryReport swapped =
      qsi::recovery_report(ghz3, {"q3"}, {"q2"}, {"q1"});
  CHECK(swapped.qcmi == doctest::Approx(1.0));

  CHECK_THROWS_AS(qsi::recovery_report(ghz3, {"q1"}, {"q2"}, {"q2"}),
                  std::invalid_argument);
  CHECK_THROWS_AS(qsi::recovery_report(ghz3, {"q1"}, {"q2"}, {}),
                  std::invalid_argument);
  // Sets must cover the whole layout.
  const MultipartiteState ghz4 = qsi::density_from_pure(qsi::ghz_state(4));
  CHECK_THROWS_AS(qsi::recovery_report(ghz4, {"q1"}, {"q2"}, {"q3"}),
                  std::invalid_argument);
}
