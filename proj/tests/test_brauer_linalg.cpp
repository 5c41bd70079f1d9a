#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <map>
#include <set>

#include "brauer/brauer_linalg.hpp"
#include "brauer/errors.hpp"

using namespace brauer;

TEST_CASE("p_factor") {
  CHECK(p_factor(2, 1) == BigInt(2));
  CHECK(p_factor(2, 3) == BigInt(24));  // 2*3*4
  CHECK(p_factor(4, 2) == BigInt(20));  // 4*5
  CHECK(p_factor(1000000, 8).to_string() == "1000028000322001960006769013132013068005040000000");
  CHECK_THROWS_AS(p_factor(0, 1), SizeError);
}

TEST_CASE("z_factor") {
  CHECK(z_factor(2, 2) == BigInt(8));    // 2*4
  CHECK(z_factor(2, 3) == BigInt(48));   // 2*4*6
  CHECK(z_factor(1, 1) == BigInt(1));
  CHECK(z_factor(5, 4) == BigInt(5 * 7 * 9 * 11));
  CHECK_THROWS_AS(z_factor(2, 0), SizeError);
}

TEST_CASE("gram matrix structure at t=2") {
  for (int d : {2, 3, 5}) {
    const GramMatrix gram = gram_matrix(2, d);
    REQUIRE(gram.size() == 3);
    const BigInt diag(static_cast<std::int64_t>(d) * d);
    const BigInt off(d);
    for (Eigen::Index i = 0; i < 3; ++i) {
      for (Eigen::Index j = 0; j < 3; ++j) {
        CHECK(gram.entry(i, j) == (i == j ? diag : off));
      }
    }
  }
}

TEST_CASE("gram matrix t=1") {
  const GramMatrix gram = gram_matrix(1, 3);
  REQUIRE(gram.size() == 1);
  CHECK(gram.entry(0, 0) == BigInt(3));
}

TEST_CASE("gram row sums equal Z(d,t)") {
  for (int t : {1, 2, 3, 4}) {
    for (int d : {1, 2, 3, 6}) {
      const GramMatrix gram = gram_matrix(t, d);
      const BigInt z = z_factor(d, t);
      for (Eigen::Index i = 0; i < gram.size(); ++i) CHECK(gram.row_sum(i) == z);
    }
  }
  CHECK(gram_matrix(2, 2).row_sum(0) == BigInt(8));
}

TEST_CASE("gram entries are symmetric powers of d between d and d^t") {
  const GramMatrix gram = gram_matrix(3, 2);
  std::set<int> seen;
  for (Eigen::Index i = 0; i < gram.size(); ++i) {
    CHECK(gram.cycle_count(i, i) == 3);
    for (Eigen::Index j = 0; j < gram.size(); ++j) {
      CHECK(gram.cycle_count(i, j) == gram.cycle_count(j, i));
      CHECK(gram.cycle_count(i, j) >= 1);
      CHECK(gram.cycle_count(i, j) <= 3);
      seen.insert(gram.cycle_count(i, j));
    }
  }
  CHECK(seen == std::set<int>{1, 2, 3});
}

TEST_CASE("row entry multisets coincide across rows") {
  // The same value appears in every row the same number of times; this is
  // the reshuffling argument behind the all-ones eigenvector.
  const GramMatrix gram = gram_matrix(4, 3);
  std::map<int, int> reference;
  for (Eigen::Index j = 0; j < gram.size(); ++j) ++reference[gram.cycle_count(0, j)];
  for (Eigen::Index i = 1; i < gram.size(); ++i) {
    std::map<int, int> histogram;
    for (Eigen::Index j = 0; j < gram.size(); ++j) ++histogram[gram.cycle_count(i, j)];
    CHECK(histogram == reference);
  }
}

TEST_CASE("gram cap") {
  CHECK_THROWS_AS(gram_matrix(kMaxGramT + 1, 2), SizeError);
  CHECK_THROWS_AS(gram_matrix(2, 0), SizeError);
}

TEST_CASE("weingarten t=1 is 1/d") {
  for (int d : {1, 2, 7}) {
    const WeingartenMatrix w = weingarten_matrix(1, d);
    REQUIRE(w.entries.rows() == 1);
    CHECK(w.entries(0, 0) == doctest::Approx(1.0 / d).epsilon(1e-12));
    CHECK(w.rank == 1);
  }
}

TEST_CASE("weingarten t=2 analytic inverse") {
  // G = (d^2-d) I + d J inverts to (d+1)/(d(d-1)(d+2)) on the diagonal and
  // -1/(d(d-1)(d+2)) off it.
  const int d = 3;
  const WeingartenMatrix w = weingarten_matrix(2, d);
  const double denom = static_cast<double>(d) * (d - 1) * (d + 2);
  for (Eigen::Index i = 0; i < 3; ++i) {
    for (Eigen::Index j = 0; j < 3; ++j) {
      const double expected = (i == j ? (d + 1) / denom : -1.0 / denom);
      CHECK(w.entries(i, j) == doctest::Approx(expected).epsilon(1e-10));
    }
  }
  CHECK(w.rank == 3);
  CHECK(w.entries(0, 0) == doctest::Approx(4.0 / 30.0));
  CHECK(w.entries(0, 1) == doctest::Approx(-1.0 / 30.0));
}

TEST_CASE("weingarten at d=1 is rank one") {
  const WeingartenMatrix w = weingarten_matrix(2, 1);
  CHECK(w.rank == 1);
  // All Gram entries are 1, so W is J/9.
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j)
      CHECK(w.entries(i, j) == doctest::Approx(1.0 / 9.0).epsilon(1e-10));
}

TEST_CASE("pseudo-inverse identities") {
  for (int t : {1, 2, 3}) {
    for (int d : {1, 2, 3, 5}) {
      const GramMatrix gram = gram_matrix(t, d);
      const WeingartenMatrix w = weingarten_from_gram(gram);
      const Eigen::MatrixXd g = gram.to_dense();
      const double scale = std::pow(static_cast<double>(d), t) * 1e-10;
      CHECK((w.entries * g * w.entries - w.entries).cwiseAbs().maxCoeff() <= scale);
      CHECK((g * w.entries * g - g).cwiseAbs().maxCoeff() <= scale);
      CHECK((w.entries - w.entries.transpose()).cwiseAbs().maxCoeff() == 0.0);
      if (d >= t) CHECK(w.rank == gram.size());
    }
  }
}

TEST_CASE("all-ones maps to 1/Z") {
  for (int t : {1, 2, 3}) {
    for (int d : {2, 3, 4, 6}) {
      const WeingartenMatrix w = weingarten_matrix(t, d);
      const Eigen::VectorXd image =
          w.entries * Eigen::VectorXd::Ones(w.entries.cols());
      const double expected = 1.0 / z_factor(d, t).to_double();
      for (Eigen::Index i = 0; i < image.size(); ++i)
        CHECK(image[i] == doctest::Approx(expected).epsilon(1e-10));
    }
  }
}

TEST_CASE("twirl_coefficients") {
  SUBCASE("all-ones input gives the flat 1/Z vector") {
    const WeingartenMatrix w = weingarten_matrix(2, 2);
    const CoefficientVector b{2, Eigen::VectorXd::Ones(3)};
    const CoefficientVector c = twirl_coefficients(w, b);
    for (Eigen::Index i = 0; i < 3; ++i)
      CHECK(c.values[i] == doctest::Approx(1.0 / 8.0).epsilon(1e-10));
  }
  SUBCASE("round-trips G x for d >= t") {
    const int t = 2, d = 4;
    const GramMatrix gram = gram_matrix(t, d);
    const WeingartenMatrix w = weingarten_from_gram(gram);
    Eigen::VectorXd x(3);
    x << 0.3, -1.25, 2.0;
    const CoefficientVector b{t, gram.to_dense() * x};
    const CoefficientVector c = twirl_coefficients(w, b);
    CHECK((c.values - x).cwiseAbs().maxCoeff() <= 1e-10);
  }
  SUBCASE("design target vector at t=2") {
    // b = (value at gamma, 1, 1) in basis order (gamma, identity, swap);
    // with the gamma slot at 2/(d+1) the coefficients are supported on the
    // permutations with weight 1/(d(d+1)).
    const int d = 5;
    const WeingartenMatrix w = weingarten_matrix(2, d);
    Eigen::VectorXd b(3);
    b << 2.0 / (d + 1), 1.0, 1.0;
    const CoefficientVector c = twirl_coefficients(w, {2, b});
    CHECK(c.values[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c.values[1] == doctest::Approx(1.0 / (d * (d + 1.0))).epsilon(1e-10));
    CHECK(c.values[2] == doctest::Approx(1.0 / (d * (d + 1.0))).epsilon(1e-10));
  }
  SUBCASE("length mismatch") {
    const WeingartenMatrix w = weingarten_matrix(2, 2);
    CHECK_THROWS_AS(twirl_coefficients(w, {2, Eigen::VectorXd::Ones(4)}), SizeError);
  }
}
