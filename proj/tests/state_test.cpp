#include "qsi/state.hpp"

#include "support/corpus.hpp"
#include "support/oracle.hpp"
#include "support/testutil.hpp"

#include <doctest.h>

#include <cmath>

using qsi::Complex;
using qsi::Matrix;
using qsi::MultipartiteState;
using qsi::PureState;
using qsi::Role;
using qsi::Subsystem;
using qsi::SubsystemLayout;
using testutil::max_abs;

TEST_CASE("layout validation") {
  CHECK_THROWS_AS(SubsystemLayout({{"a", 2, Role::transfer},
                                   {"a", 2, Role::reference}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SubsystemLayout({{"a", 0, Role::transfer}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SubsystemLayout({{"a", 2, Role::transfer},
                                   {"b", 2, Role::transfer}}),
                  std::invalid_argument);

  SubsystemLayout layout({{"a", 2, Role::transfer}, {"b", 3, Role::bob_qsi}});
  CHECK(layout.total_dim() == 6);
  CHECK(layout.index_of("b") == 1);
  CHECK(layout.has_label("a"));
  CHECK(!layout.has_label("c"));
  CHECK_THROWS_WITH_AS(layout.index_of("zz"), doctest::Contains("zz"),
                       std::invalid_argument);
  CHECK(layout.labels_with_role(Role::bob_qsi) ==
        std::vector<std::string>{"b"});
}

TEST_CASE("named state amplitudes") {
  const PureState bell = qsi::bell_state();
  CHECK(bell.amplitudes.size() == 4);
  CHECK(std::abs(bell.amplitudes[0] - Complex(1.0 / std::sqrt(2.0))) < 1e-15);
  CHECK(std::abs(bell.amplitudes[3] - Complex(1.0 / std::sqrt(2.0))) < 1e-15);
  CHECK(std::abs(bell.amplitudes[1]) == 0.0);

  const PureState ghz = qsi::ghz_state(3);
  CHECK(std::abs(ghz.amplitudes[0] - Complex(1.0 / std::sqrt(2.0))) < 1e-15);
  CHECK(std::abs(ghz.amplitudes[7] - Complex(1.0 / std::sqrt(2.0))) < 1e-15);

  const PureState w = qsi::w_state(3);
  const double third = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(w.amplitudes[1] - Complex(third)) < 1e-15);  // |001>
  CHECK(std::abs(w.amplitudes[2] - Complex(third)) < 1e-15);  // |010>
  CHECK(std::abs(w.amplitudes[4] - Complex(third)) < 1e-15);  // |100>
  CHECK(std::abs(w.amplitudes[0]) == 0.0);

  CHECK_THROWS_AS(qsi::ghz_state(1), std::invalid_argument);
  CHECK_THROWS_AS(qsi::w_state(1), std::invalid_argument);
  CHECK_THROWS_AS(qsi::werner_state(1.5), std::invalid_argument);
}

TEST_CASE("density matrices from pure states") {
  Matrix zero = qsi::density_from_pure(
                    PureState{SubsystemLayout({{"a", 2, Role::transfer}}),
                              (qsi::Vector(2) << 1.0, 0.0).finished()})
                    .rho;
  CHECK(zero(0, 0).real() == doctest::Approx(1.0));
  CHECK(max_abs(zero.row(1)) == 0.0);

  const MultipartiteState bell = qsi::density_from_pure(qsi::bell_state());
  CHECK(qsi::trace(bell.rho).real() == doctest::Approx(1.0));
  CHECK(qsi::purity(bell) == doctest::Approx(1.0));

  const MultipartiteState ghz = qsi::density_from_pure(qsi::ghz_state(3));
  CHECK(qsi::purity(ghz) == doctest::Approx(1.0));
}

TEST_CASE("partial trace") {
  const MultipartiteState bell = qsi::density_from_pure(qsi::bell_state());
  const MultipartiteState half = qsi::partial_trace(bell, {"q1"});
  CHECK(max_abs(half.rho - 0.5 * Matrix::Identity(2, 2)) < 1e-14);

  const MultipartiteState ghz = qsi::density_from_pure(qsi::ghz_state(3));
  const MultipartiteState pair = qsi::partial_trace(ghz, {"q1", "q2"});
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = 0.5;
  expected(3, 3) = 0.5;
  CHECK(max_abs(pair.rho - expected) < 1e-14);

  const MultipartiteState all =
      qsi::partial_trace(ghz, {"q1", "q2", "q3"});
  CHECK(max_abs(all.rho - ghz.rho) == 0.0);

  CHECK_THROWS_AS(qsi::partial_trace(ghz, {}), std::invalid_argument);
  CHECK_THROWS_AS(qsi::partial_trace(ghz, {"nope"}), std::invalid_argument);
}

TEST_CASE("partial trace matches the oracle") {
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    const MultipartiteState state = qsi::random_mixed_state({2, 3, 2}, 3, seed);
    const auto dims = corpus::dims_of(state.layout);
    const auto full = corpus::to_oracle(state.rho);
    const std::vector<std::vector<std::size_t>> keeps = {
        {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};
    for (const auto& keep : keeps) {
      std::vector<std::string> labels;
      for (std::size_t k : keep)
        labels.push_back(state.layout.subsystems()[k].label);
      const MultipartiteState lib = qsi::partial_trace(state, labels);
      const auto ref = oracle::reduce(full, dims, keep);
      const auto got = corpus::to_oracle(lib.rho);
      REQUIRE(got.size() == ref.size());
      double dev = 0.0;
      for (std::size_t i = 0; i < ref.size(); ++i)
        dev = std::max(dev, std::abs(got[i] - ref[i]));
      CHECK(dev < 1e-12);
      CHECK(qsi::trace(lib.rho).real() == doctest::Approx(1.0));
      CHECK(qsi::eig_hermitian(lib.rho).eigenvalues.minCoeff() > -1e-12);
    }
  }
}

TEST_CASE("permutation") {
  const MultipartiteState bell = qsi::density_from_pure(qsi::bell_state());
  const MultipartiteState swapped = qsi::permute(bell, {"q2", "q1"});
  CHECK(max_abs(swapped.rho - bell.rho) < 1e-14);  // symmetric state

  const MultipartiteState state = qsi::random_mixed_state({2, 3, 2}, 2, 99);
  const MultipartiteState same = qsi::permute(state, {"s1", "s2", "s3"});
  CHECK(max_abs(same.rho - state.rho) == 0.0);

  const MultipartiteState rolled = qsi::permute(state, {"s3", "s1", "s2"});
  CHECK(rolled.layout.labels() ==
        std::vector<std::string>{"s3", "s1", "s2"});
  const MultipartiteState back = qsi::permute(rolled, {"s1", "s2", "s3"});
  CHECK(max_abs(back.rho - state.rho) < 1e-14);

  // Spot-check one matrix element against digit bookkeeping: entry
  // (s1,s2,s3)=(1,2,0),(0,1,1) of the original must appear at the permuted
  // position (s3,s1,s2)=(0,1,2),(1,0,1).
  const Eigen::Index row_old = (1 * 3 + 2) * 2 + 0;
  const Eigen::Index col_old = (0 * 3 + 1) * 2 + 1;
  const Eigen::Index row_new = (0 * 2 + 1) * 3 + 2;
  const Eigen::Index col_new = (1 * 2 + 0) * 3 + 1;
  CHECK(std::abs(rolled.rho(row_new, col_new) - state.rho(row_old, col_old)) <
        1e-15);

  const MultipartiteState ghz = qsi::density_from_pure(qsi::ghz_state(3));
  for (const auto& order :
       std::vector<std::vector<std::string>>{{"q2", "q3", "q1"},
                                             {"q3", "q2", "q1"}}) {
    const MultipartiteState p = qsi::permute(ghz, order);
    for (const auto& label : p.layout.labels()) {
      const MultipartiteState marginal = qsi::partial_trace(p, {label});
      CHECK(max_abs(marginal.rho - 0.5 * Matrix::Identity(2, 2)) < 1e-14);
    }
  }

  CHECK_THROWS_AS(qsi::permute(state, {"s1", "s2"}), std::invalid_argument);
  CHECK_THROWS_AS(qsi::permute(state, {"s1", "s2", "s2"}),
                  std::invalid_argument);
}

TEST_CASE("purification") {
  // Pure input: rank-1 reference.
  const MultipartiteState bell = qsi::density_from_pure(qsi::bell_state());
  const PureState trivial = qsi::purify(bell, "ref");
  CHECK(trivial.layout.subsystems().back().dim == 1);
  CHECK(trivial.layout.subsystems().back().label == "ref");

  // Maximally mixed qubit: Bell-type purification.
  const MultipartiteState half{
      SubsystemLayout({{"a", 2, Role::transfer}}),
      0.5 * Matrix::Identity(2, 2)};
  const PureState purified = qsi::purify(half, "r");
  CHECK(purified.layout.subsystems().back().dim == 2);
  const MultipartiteState back = qsi::partial_trace(
      qsi::density_from_pure(purified), {"a"});
  CHECK(max_abs(back.rho - half.rho) < 1e-12);

  // Werner(0.5): full-rank, reference dimension 4, tight round trip.
  MultipartiteState werner = qsi::werner_state(0.5);
  const PureState wp = qsi::purify(werner, "env");
  CHECK(wp.layout.subsystems().back().dim == 4);
  const MultipartiteState wback = qsi::partial_trace(
      qsi::density_from_pure(wp), {"q1", "q2"});
  CHECK(max_abs(wback.rho - werner.rho) < 1e-10);

  CHECK_THROWS_AS(qsi::purify(werner, "q1"), std::invalid_argument);
}

TEST_CASE("maximally entangled states") {
  const PureState one = qsi::maximally_entangled(1);
  CHECK(one.layout.total_dim() == 1);
  CHECK(std::abs(one.amplitudes[0] - Complex(1.0)) < 1e-15);

  const PureState two = qsi::maximally_entangled(2);
  const MultipartiteState marginal =
      qsi::partial_trace(qsi::density_from_pure(two), {"A"});
  CHECK(max_abs(marginal.rho - 0.5 * Matrix::Identity(2, 2)) < 1e-14);

  const PureState three = qsi::maximally_entangled(3);
  const MultipartiteState m3 =
      qsi::partial_trace(qsi::density_from_pure(three), {"B"});
  const auto eig = qsi::eig_hermitian(m3.rho);
  for (Eigen::Index i = 0; i < 3; ++i)
    CHECK(eig.eigenvalues(i) == doctest::Approx(1.0 / 3.0));

  CHECK_THROWS_AS(qsi::maximally_entangled(0), std::invalid_argument);
}

TEST_CASE("werner family") {
  const MultipartiteState uniform = qsi::werner_state(0.0);
  CHECK(max_abs(uniform.rho - 0.25 * Matrix::Identity(4, 4)) < 1e-15);

  const MultipartiteState singlet = qsi::werner_state(1.0);
  CHECK(qsi::purity(singlet) == doctest::Approx(1.0));
  // Singlet amplitudes live on |01> and |10> with opposite signs.
  CHECK(singlet.rho(1, 1).real() == doctest::Approx(0.5));
  CHECK(singlet.rho(2, 2).real() == doctest::Approx(0.5));
  CHECK(singlet.rho(1, 2).real() == doctest::Approx(-0.5));

  const MultipartiteState mixed = qsi::werner_state(0.5);
  const auto eig = qsi::eig_hermitian(mixed.rho);
  CHECK(eig.eigenvalues.maxCoeff() == doctest::Approx(0.625));
  CHECK(eig.eigenvalues.minCoeff() == doctest::Approx(0.125));
}

TEST_CASE("random states are seeded and valid") {
  const PureState a = qsi::random_pure_state({2, 3, 2}, 4);
  const PureState b = qsi::random_pure_state({2, 3, 2}, 4);
  const PureState c = qsi::random_pure_state({2, 3, 2}, 5);
  CHECK(max_abs(a.amplitudes - b.amplitudes) == 0.0);
  CHECK(max_abs(a.amplitudes - c.amplitudes) > 1e-3);
  CHECK(a.amplitudes.norm() == doctest::Approx(1.0));
  CHECK_NOTHROW(qsi::validate_pure(a));

  const MultipartiteState m = qsi::random_mixed_state({2, 2, 2}, 2, 4);
  CHECK_NOTHROW(qsi::validate_state(m));
  CHECK(qsi::purity(m) < 1.0 - 1e-6);
  // Rank bounded by the requested value.
  const auto eig = qsi::eig_hermitian(m.rho);
  int rank = 0;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i)
    if (eig.eigenvalues(i) > 1e-10) ++rank;
  CHECK(rank <= 2);

  CHECK_THROWS_AS(qsi::random_mixed_state({2, 2}, 0, 1),
                  std::invalid_argument);
}

TEST_CASE("state validation catches defects") {
  const SubsystemLayout layout({{"a", 2, Role::transfer}});
  CHECK_THROWS_WITH_AS(
      qsi::validate_state(MultipartiteState{layout, Matrix::Identity(2, 2)}),
      doctest::Contains("trace"), std::invalid_argument);

  Matrix skew = 0.5 * Matrix::Identity(2, 2);
  skew(0, 1) = Complex(0.0, 0.3);
  CHECK_THROWS_AS(qsi::validate_state(MultipartiteState{layout, skew}),
                  std::invalid_argument);

  Matrix indefinite = Matrix::Zero(2, 2);
  indefinite(0, 0) = 1.5;
  indefinite(1, 1) = -0.5;
  CHECK_THROWS_AS(qsi::validate_state(MultipartiteState{layout, indefinite}),
                  std::invalid_argument);

  Matrix wrong_dim = Matrix::Identity(3, 3) / 3.0;
  CHECK_THROWS_AS(qsi::validate_state(MultipartiteState{layout, wrong_dim}),
                  std::invalid_argument);
}

TEST_CASE("tensor product of states") {
  const MultipartiteState bell = qsi::density_from_pure(qsi::bell_state());
  const MultipartiteState relabeled = qsi::with_roles(
      qsi::with_labels(bell, {"r1", "r2"}),
      {Role::reference, Role::reference});
  const MultipartiteState joint = qsi::tensor_product(bell, relabeled);
  CHECK(joint.layout.size() == 4);
  CHECK(joint.layout.total_dim() == 16);
  CHECK(max_abs(joint.rho - qsi::tensor(bell.rho, relabeled.rho)) == 0.0);
  CHECK_THROWS_AS(qsi::tensor_product(bell, bell), std::invalid_argument);
}

TEST_CASE("role helpers") {
  CHECK(qsi::role_from_name("transfer") == Role::transfer);
  CHECK(qsi::role_from_name("alice_qsi") == Role::alice_qsi);
  CHECK(qsi::role_from_name("bob_qsi") == Role::bob_qsi);
  CHECK(qsi::role_from_name("reference") == Role::reference);
  CHECK_THROWS_AS(qsi::role_from_name("boss"), std::invalid_argument);
  CHECK(std::string(qsi::role_name(Role::alice_qsi)) == "alice_qsi");

  const MultipartiteState bell = qsi::density_from_pure(qsi::bell_state());
  const MultipartiteState tagged =
      qsi::with_roles(bell, {Role::transfer, Role::bob_qsi});
  CHECK(tagged.layout.labels_with_role(Role::bob_qsi) ==
        std::vector<std::string>{"q2"});
  CHECK_THROWS_AS(qsi::with_roles(bell, {Role::transfer}),
                  std::invalid_argument);
  CHECK_THROWS_AS(qsi::with_labels(bell, {"x"}), std::invalid_argument);
}
