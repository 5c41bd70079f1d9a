#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <complex>

#include "brauer/brauer_linalg.hpp"
#include "brauer/errors.hpp"
#include "brauer/sampling.hpp"
#include "brauer/tensor_rep.hpp"
#include "test_helpers.hpp"

using namespace brauer;
using brauer::testing::naive_rep;
using std::complex;

namespace {

const PairPartition kGamma2(2, {{1, 2}, {3, 4}});
const PairPartition kSwap2(2, {{1, 4}, {2, 3}});

}  // namespace

TEST_CASE("tensor_dim and the cap") {
  CHECK(tensor_dim(2, 3) == 8);
  CHECK(tensor_dim(1, 8) == 1);
  CHECK_THROWS_AS(tensor_dim(2, 13), CapError);
  CHECK_THROWS_AS(tensor_dim(7, 5), CapError);
  CHECK(tensor_dim(7, 5, 20000) == 16807);
  try {
    tensor_dim(2, 13);
  } catch (const CapError& e) {
    CHECK(e.required() == 8192);
    CHECK(e.cap() == 4096);
  }
}

TEST_CASE("rep_pairing basic matrices") {
  SUBCASE("identity at t=1 is the d x d identity") {
    for (int d : {2, 5}) {
      const DenseOperator op = rep_pairing(identity_pairing(1), d);
      CHECK((op.entries - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() == 0.0);
    }
  }
  SUBCASE("gamma at d=2 hits the four corner entries") {
    const DenseOperator op = rep_pairing(kGamma2, 2);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
    expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 1.0;
    CHECK((op.entries - expected).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("swap diagram is the SWAP matrix") {
    const DenseOperator op = rep_pairing(kSwap2, 2);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
    expected(0, 0) = expected(1, 2) = expected(2, 1) = expected(3, 3) = 1.0;
    CHECK((op.entries - expected).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("rep_pairing agrees with the direct delta-product oracle") {
  for (int t : {1, 2, 3}) {
    for (int d : {2, 3}) {
      for (const PairPartition& m : enumerate_pairings(t)) {
        const DenseOperator op = rep_pairing(m, d);
        CHECK((op.entries - naive_rep(m, d)).cwiseAbs().maxCoeff() == 0.0);
      }
    }
  }
}

TEST_CASE("rep_pairing_trace matches the materialized trace") {
  for (int t : {1, 2, 3, 4}) {
    for (int d : {2, 3}) {
      for (const PairPartition& m : enumerate_pairings(t)) {
        const auto exact = rep_pairing_exact(m, d);
        CHECK(rep_pairing_trace(m, d) == exact.trace());
        // Tr[rep(m)] = d^{cycles(m, identity)}
        std::int64_t expected = 1;
        for (int k = 0; k < union_cycle_count(m, identity_pairing(t)); ++k) expected *= d;
        CHECK(rep_pairing_trace(m, d) == expected);
      }
    }
  }
}

TEST_CASE("rep_permutation") {
  SUBCASE("identity and transposition") {
    const DenseOperator id = rep_permutation({0, 1}, 2);
    CHECK((id.entries - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
    const DenseOperator swap = rep_permutation({1, 0}, 2);
    CHECK((swap.entries - rep_pairing(kSwap2, 2).entries).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("composition law rep(s u) = rep(s) rep(u) over all of S_3") {
    const int d = 2;
    for (const auto& s : enumerate_permutations(3)) {
      for (const auto& u : enumerate_permutations(3)) {
        std::vector<int> su(3);
        for (int i = 0; i < 3; ++i) su[i] = s[u[i]];
        const Eigen::MatrixXcd lhs = rep_permutation(su, d).entries;
        const Eigen::MatrixXcd rhs =
            rep_permutation(s, d).entries * rep_permutation(u, d).entries;
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() == 0.0);
      }
    }
  }
  SUBCASE("matches the diagram embedding") {
    for (const auto& s : enumerate_permutations(3)) {
      const Eigen::MatrixXcd via_pairing = rep_pairing(pairing_from_permutation(s), 2).entries;
      const Eigen::MatrixXcd direct = rep_permutation(s, 2).entries;
      CHECK((via_pairing - direct).cwiseAbs().maxCoeff() == 0.0);
    }
  }
  SUBCASE("acts by inverse index placement") {
    // 3-cycle s: 0->1->2->0 sends |abc> to |cab>: factor i receives the
    // former factor s^{-1}(i).
    const DenseOperator op = rep_permutation({1, 2, 0}, 2);
    Eigen::VectorXcd basis_state = Eigen::VectorXcd::Zero(8);
    basis_state[0b011] = 1.0;  // |011>
    const Eigen::VectorXcd mapped = op.entries * basis_state;
    Eigen::VectorXcd expected = Eigen::VectorXcd::Zero(8);
    expected[0b101] = 1.0;  // |101>
    CHECK((mapped - expected).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("rho_sym") {
  SUBCASE("t=1 is maximally mixed") {
    const DenseOperator op = rho_sym(3, 1);
    CHECK((op.entries - Eigen::MatrixXcd::Identity(3, 3) / 3.0).cwiseAbs().maxCoeff() <= 1e-15);
  }
  SUBCASE("t=2, d=2 is the normalized rank-3 projector") {
    const DenseOperator op = rho_sym(2, 2);
    CHECK(std::abs(op.entries.trace().real() - 1.0) <= 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(op.entries);
    const Eigen::VectorXd eigenvalues = solver.eigenvalues();
    CHECK(eigenvalues[0] == doctest::Approx(0.0));
    for (int k = 1; k < 4; ++k) CHECK(eigenvalues[k] == doctest::Approx(1.0 / 3.0));
  }
}

TEST_CASE("rho_br") {
  SUBCASE("t=1 is maximally mixed") {
    const DenseOperator op = rho_br(4, 1);
    CHECK((op.entries - Eigen::MatrixXcd::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() <= 1e-15);
  }
  SUBCASE("t=2, d=2 equals (I + SWAP + gamma)/8") {
    const DenseOperator op = rho_br(2, 2);
    const Eigen::MatrixXcd expected = (Eigen::MatrixXcd::Identity(4, 4) +
                                       rep_pairing(kSwap2, 2).entries +
                                       rep_pairing(kGamma2, 2).entries) /
                                      8.0;
    CHECK((op.entries - expected).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(std::abs(op.entries.trace().real() - 1.0) <= 1e-12);
  }
}

TEST_CASE("moment operators commute with tensor-power rotations") {
  Rng rng(7);
  const int d = 3, t = 2;
  const DenseOperator sym = rho_sym(d, t);
  const DenseOperator br = rho_br(d, t);
  for (int sample = 0; sample < 20; ++sample) {
    const Eigen::MatrixXcd o =
        sample_haar_orthogonal(d, rng).cast<complex<double>>();
    const Eigen::MatrixXcd ot = kron_power(o, t);
    CHECK((ot * br.entries - br.entries * ot).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK((ot * sym.entries - sym.entries * ot).cwiseAbs().maxCoeff() <= 1e-10);
  }
  for (int sample = 0; sample < 20; ++sample) {
    const Eigen::MatrixXcd ut = kron_power(sample_haar_unitary(d, rng), t);
    CHECK((ut * sym.entries - sym.entries * ut).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("trace_distance") {
  SUBCASE("coincident operators") {
    const DenseOperator op = rho_sym(2, 2);
    CHECK(trace_distance(op, op) == doctest::Approx(0.0));
  }
  SUBCASE("exact values from the commutant spectrum") {
    // rho_br - rho_sym acts as scalars on the isotypic blocks inside the
    // symmetric subspace. At t=2 the three eigenvalues are (d-1)/(d(d+1)) on
    // the maximally entangled direction, -2/(d(d+1)(d+2)) on the rest of the
    // symmetric subspace and 0 on the antisymmetric one, so the distance is
    // (d-1)/(d(d+1)). Cross-checked against an exact rational
    // eigendecomposition and a 2e5-sample Monte Carlo estimate.
    for (int d = 2; d <= 6; ++d) {
      const double expected = (d - 1.0) / (d * (d + 1.0));
      CHECK(trace_distance(rho_br(d, 2), rho_sym(d, 2)) ==
            doctest::Approx(expected).epsilon(1e-9));
    }
    CHECK(trace_distance(rho_br(2, 2), rho_sym(2, 2)) ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-9));
    CHECK(trace_distance(rho_br(4, 3), rho_sym(4, 3)) ==
          doctest::Approx(3.0 / 10.0).epsilon(1e-9));
    CHECK(trace_distance(rho_br(3, 4), rho_sym(3, 4)) ==
          doctest::Approx(13.0 / 35.0).epsilon(1e-9));
  }
  SUBCASE("the closed-form product strictly upper-bounds the distance") {
    for (int d = 2; d <= 5; ++d) {
      for (int t = 2; t <= 3; ++t) {
        const double numeric = trace_distance(rho_br(d, t), rho_sym(d, t));
        CHECK(numeric < closed_form_distance(d, t).to_double());
      }
    }
  }
  SUBCASE("positive and negative parts balance") {
    const Eigen::MatrixXcd diff = rho_br(3, 3).entries - rho_sym(3, 3).entries;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver((diff + diff.adjoint()) / 2.0);
    double positive = 0, negative = 0;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
      const double lambda = solver.eigenvalues()[k];
      (lambda >= 0 ? positive : negative) += std::abs(lambda);
    }
    CHECK(positive == doctest::Approx(negative).epsilon(1e-10));
  }
  SUBCASE("contract violations") {
    DenseOperator skew{1, 2, Eigen::MatrixXcd::Zero(2, 2)};
    skew.entries(0, 1) = 1.0;  // not Hermitian
    const DenseOperator id{1, 2, Eigen::MatrixXcd::Identity(2, 2)};
    CHECK_THROWS_AS(trace_distance(skew, id), ContractError);
    CHECK_THROWS_AS(trace_distance(id, rho_sym(2, 2)), SizeError);
  }
}

TEST_CASE("closed_form_distance") {
  CHECK(closed_form_distance(5, 1) == Rational(0));
  CHECK(closed_form_distance(2, 2) == Rational(1, 4));
  CHECK(closed_form_distance(4, 3) == Rational(3, 8));
  CHECK(closed_form_distance(100, 5) == Rational(1045, 11448));
}

TEST_CASE("min_eigenvalue") {
  const DenseOperator id{1, 2, Eigen::MatrixXcd::Identity(2, 2)};
  CHECK(min_eigenvalue(id) == doctest::Approx(1.0));
  // gamma has eigenvalues {d, 0, 0, 0}.
  const DenseOperator gamma = rep_pairing(kGamma2, 2);
  CHECK(min_eigenvalue(gamma) == doctest::Approx(0.0));
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(8, 8);
  for (const PairPartition& m : enumerate_pairings(3))
    if (!is_permutation_diagram(m)) accumulate_pairing(sum, m, 2, 1.0);
  CHECK(min_eigenvalue(DenseOperator{3, 2, std::move(sum)}) >= -1e-10);
}

TEST_CASE("overlap_trace") {
  SUBCASE("real states always give 1") {
    Rng rng(11);
    const StateVector psi = brauer::testing::real_random_state(rng, 4);
    for (const PairPartition& m : enumerate_pairings(2))
      CHECK(overlap_trace(m, psi) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("permutations always give 1") {
    Rng rng(13);
    const StateVector psi = brauer::testing::random_state(rng, 3);
    for (const auto& s : enumerate_permutations(3))
      CHECK(overlap_trace(pairing_from_permutation(s), psi) == doctest::Approx(1.0));
  }
  SUBCASE("circular state kills gamma") {
    Eigen::VectorXcd v(2);
    v << complex<double>(1 / std::sqrt(2.0), 0), complex<double>(0, 1 / std::sqrt(2.0));
    const StateVector psi = StateVector::make(std::move(v));
    CHECK(overlap_trace(kGamma2, psi) == doctest::Approx(0.0));
  }
  SUBCASE("agrees with the dense trace for random states") {
    Rng rng(17);
    for (int t : {1, 2, 3}) {
      const StateVector psi = brauer::testing::random_state(rng, 3);
      const Eigen::VectorXcd power = tensor_power(psi.amplitudes, t);
      const Eigen::MatrixXcd density = power * power.adjoint();
      for (const PairPartition& m : enumerate_pairings(t)) {
        const double direct = (rep_pairing(m, 3).entries * density).trace().real();
        CHECK(overlap_trace(m, psi) == doctest::Approx(direct).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("state vector validation") {
  Eigen::VectorXcd not_unit(2);
  not_unit << 1.0, 1.0;
  CHECK_THROWS_AS(StateVector::make(not_unit), ContractError);
  const StateVector fixed = StateVector::normalized(not_unit);
  CHECK(fixed.amplitudes.norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS(StateVector::normalized(Eigen::VectorXcd::Zero(2)), ContractError);
}

TEST_CASE("partial_trace_last") {
  const DenseOperator big = rho_sym(2, 3);
  const DenseOperator reduced = partial_trace_last(big);
  CHECK(reduced.t == 2);
  CHECK(std::abs(reduced.entries.trace().real() - 1.0) <= 1e-12);
  CHECK((reduced.entries - rho_sym(2, 2).entries).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK_THROWS_AS(partial_trace_last(rho_sym(2, 1)), SizeError);
}

TEST_CASE("tensor utilities") {
  Eigen::VectorXcd v(2);
  v << 1.0, complex<double>(0, 1);
  const Eigen::VectorXcd vv = tensor_power(v, 2);
  CHECK(vv[0] == complex<double>(1, 0));
  CHECK(vv[1] == complex<double>(0, 1));
  CHECK(vv[2] == complex<double>(0, 1));
  CHECK(vv[3] == complex<double>(-1, 0));
  const Eigen::MatrixXcd pauli_x = (Eigen::MatrixXcd(2, 2) << 0, 1, 1, 0).finished();
  const Eigen::MatrixXcd xx = kron_power(pauli_x, 2);
  CHECK(xx(0, 3) == complex<double>(1, 0));
  CHECK(xx(3, 0) == complex<double>(1, 0));
  CHECK(xx.cwiseAbs().sum() == doctest::Approx(4.0));
}
