#include "brauer/brauer_linalg.hpp"

#include <Eigen/Eigenvalues>
#include <string>

#include "brauer/errors.hpp"

namespace brauer {

GramMatrix::GramMatrix(int t, int d,
                       Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> cycles,
                       std::vector<BigInt> powers_of_d)
    : t_(t), d_(d), cycles_(std::move(cycles)), powers_of_d_(std::move(powers_of_d)) {}

const BigInt& GramMatrix::entry(Eigen::Index i, Eigen::Index j) const {
  return powers_of_d_[cycles_(i, j)];
}

BigInt GramMatrix::row_sum(Eigen::Index i) const {
  BigInt sum;
  for (Eigen::Index j = 0; j < cycles_.cols(); ++j) sum += powers_of_d_[cycles_(i, j)];
  return sum;
}

Eigen::MatrixXd GramMatrix::to_dense() const {
  const Eigen::Index n = size();
  std::vector<double> powers(t_ + 1);
  for (int k = 0; k <= t_; ++k) powers[k] = powers_of_d_[k].to_double();
  Eigen::MatrixXd dense(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) dense(i, j) = powers[cycles_(i, j)];
  return dense;
}

BigInt p_factor(int d, int t) {
  if (d < 1 || t < 1) throw SizeError("p_factor: d and t must be positive");
  BigInt product(1);
  for (int j = 0; j < t; ++j) product *= BigInt(static_cast<std::int64_t>(d) + j);
  return product;
}

BigInt z_factor(int d, int t) {
  if (d < 1 || t < 1) throw SizeError("z_factor: d and t must be positive");
  BigInt product(1);
  for (int j = 0; j < t; ++j) product *= BigInt(static_cast<std::int64_t>(d) + 2 * j);
  return product;
}

GramMatrix gram_matrix(int t, int d) {
  if (d < 1) throw SizeError("gram_matrix: d must be positive");
  if (t < 1 || t > kMaxGramT)
    throw SizeError("gram_matrix: t must be in [1, " + std::to_string(kMaxGramT) + "], got " +
                    std::to_string(t));
  const std::vector<PairPartition> basis = enumerate_pairings(t);
  const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
  std::vector<std::vector<int>> partners(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) partners[i] = basis[i].partner_table();

  Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> cycles(n, n);
  const int points = 2 * t;
  std::vector<int> visited(points);
  for (Eigen::Index i = 0; i < n; ++i) {
    cycles(i, i) = static_cast<std::uint8_t>(t);
    const std::vector<int>& pm = partners[i];
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const std::vector<int>& pn = partners[j];
      std::fill(visited.begin(), visited.end(), 0);
      int count = 0;
      for (int start = 0; start < points; ++start) {
        if (visited[start]) continue;
        ++count;
        int cur = start;
        do {
          visited[cur] = 1;
          int via = pm[cur];
          visited[via] = 1;
          cur = pn[via];
        } while (cur != start);
      }
      cycles(i, j) = static_cast<std::uint8_t>(count);
      cycles(j, i) = static_cast<std::uint8_t>(count);
    }
  }

  std::vector<BigInt> powers(t + 1);
  powers[0] = BigInt(1);
  for (int k = 1; k <= t; ++k) powers[k] = powers[k - 1] * BigInt(d);
  return GramMatrix(t, d, std::move(cycles), std::move(powers));
}

WeingartenMatrix weingarten_from_gram(const GramMatrix& gram) {
  const Eigen::MatrixXd dense = gram.to_dense();
  // The Gram matrix is symmetric positive semidefinite, so its eigensystem is
  // its singular value decomposition; this keeps the pseudo-inverse exactly
  // symmetric.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
  if (solver.info() != Eigen::Success)
    throw ComputationError("eigendecomposition of Gram matrix failed", gram.t(), gram.d());
  const Eigen::VectorXd eigenvalues = solver.eigenvalues();
  const double sigma_max = eigenvalues.cwiseAbs().maxCoeff();
  const double cutoff = sigma_max * 1e-12 * static_cast<double>(gram.size());

  Eigen::VectorXd inverted = Eigen::VectorXd::Zero(eigenvalues.size());
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
    if (std::abs(eigenvalues[k]) > cutoff) {
      inverted[k] = 1.0 / eigenvalues[k];
      ++rank;
    }
  }
  Eigen::MatrixXd w =
      solver.eigenvectors() * inverted.asDiagonal() * solver.eigenvectors().transpose();
  w = ((w + w.transpose()) / 2.0).eval();
  return WeingartenMatrix{gram.t(), gram.d(), std::move(w), rank, cutoff};
}

WeingartenMatrix weingarten_matrix(int t, int d) { return weingarten_from_gram(gram_matrix(t, d)); }

CoefficientVector twirl_coefficients(const WeingartenMatrix& w, const CoefficientVector& b) {
  if (w.t != b.t || w.entries.cols() != b.values.size())
    throw SizeError("twirl_coefficients: coefficient vector length " +
                    std::to_string(b.values.size()) + " does not match Weingarten size " +
                    std::to_string(w.entries.cols()));
  return CoefficientVector{b.t, w.entries * b.values};
}

}  // namespace brauer
