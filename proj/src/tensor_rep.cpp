#include "brauer/tensor_rep.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "brauer/brauer_linalg.hpp"
#include "brauer/errors.hpp"

namespace brauer {

std::size_t tensor_dim(int d, int t, std::size_t cap) {
  if (d < 1 || t < 1) throw SizeError("tensor_dim: d and t must be positive");
  const auto base = static_cast<std::size_t>(d);
  std::size_t dim = 1;
  for (int k = 0; k < t; ++k) {
    if (dim > cap / base) {
      std::size_t required =
          dim > std::numeric_limits<std::size_t>::max() / base ? std::numeric_limits<std::size_t>::max()
                                                               : dim * base;
      throw CapError(required, cap);
    }
    dim *= base;
  }
  if (dim > cap) throw CapError(dim, cap);
  return dim;
}

StateVector StateVector::make(Eigen::VectorXcd amplitudes) {
  const double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > 1e-12)
    throw ContractError("state vector norm " + std::to_string(norm) + " is not 1 within 1e-12");
  const int d = static_cast<int>(amplitudes.size());
  return StateVector{d, std::move(amplitudes)};
}

StateVector StateVector::normalized(Eigen::VectorXcd amplitudes) {
  const double norm = amplitudes.norm();
  if (norm == 0.0) throw ContractError("cannot normalize the zero vector");
  amplitudes /= norm;
  const int d = static_cast<int>(amplitudes.size());
  return StateVector{d, std::move(amplitudes)};
}

namespace {

// Calls f(row, col) for every nonzero (unit) entry of rep(m). One value per
// pair of the matching determines all 2t tensor indices, so the d^t
// assignments enumerate the nonzero entries bijectively.
template <typename F>
void for_each_rep_entry(const PairPartition& m, int d, F&& f) {
  const int t = m.t();
  const std::vector<int> partner = m.partner_table();
  std::vector<int> pair_of_point(2 * t);
  const auto& pairs = m.pairs();
  for (int p = 0; p < t; ++p) {
    pair_of_point[pairs[p].first - 1] = p;
    pair_of_point[pairs[p].second - 1] = p;
  }
  std::vector<int> value(t, 0);  // value assigned to each pair
  while (true) {
    std::size_t row = 0, col = 0;
    for (int k = 0; k < t; ++k) {
      row = row * d + static_cast<std::size_t>(value[pair_of_point[k]]);
      col = col * d + static_cast<std::size_t>(value[pair_of_point[t + k]]);
    }
    f(row, col);
    int p = t - 1;
    while (p >= 0 && ++value[p] == d) value[p--] = 0;
    if (p < 0) break;
  }
}

Eigen::VectorXd hermitian_eigenvalues(const DenseOperator& a, const char* caller) {
  if (hermiticity_gap(a) > kHermitianTol)
    throw ContractError(std::string(caller) + ": operator is not Hermitian within 1e-10");
  Eigen::MatrixXcd herm = (a.entries + a.entries.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
  if (solver.info() != Eigen::Success)
    throw ComputationError(std::string(caller) + ": eigendecomposition failed", a.t, a.d);
  return solver.eigenvalues();
}

}  // namespace

Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> rep_pairing_exact(
    const PairPartition& m, int d, std::size_t cap) {
  const auto dim = static_cast<Eigen::Index>(tensor_dim(d, m.t(), cap));
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> mat =
      Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>::Zero(dim, dim);
  for_each_rep_entry(m, d, [&](std::size_t row, std::size_t col) {
    mat(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = 1;
  });
  return mat;
}

DenseOperator rep_pairing(const PairPartition& m, int d, std::size_t cap) {
  const auto dim = static_cast<Eigen::Index>(tensor_dim(d, m.t(), cap));
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim, dim);
  for_each_rep_entry(m, d, [&](std::size_t row, std::size_t col) {
    mat(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = 1.0;
  });
  return DenseOperator{m.t(), d, std::move(mat)};
}

std::int64_t rep_pairing_trace(const PairPartition& m, int d, std::size_t cap) {
  tensor_dim(d, m.t(), cap);
  std::int64_t trace = 0;
  for_each_rep_entry(m, d, [&](std::size_t row, std::size_t col) {
    if (row == col) ++trace;
  });
  return trace;
}

void accumulate_pairing(Eigen::MatrixXcd& acc, const PairPartition& m, int d,
                        std::complex<double> coeff) {
  for_each_rep_entry(m, d, [&](std::size_t row, std::size_t col) {
    acc(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += coeff;
  });
}

DenseOperator rep_permutation(const std::vector<int>& s, int d, std::size_t cap) {
  const int t = static_cast<int>(s.size());
  const auto dim = tensor_dim(d, t, cap);
  std::vector<int> s_inv(t);
  for (int i = 0; i < t; ++i) {
    if (s[i] < 0 || s[i] >= t) throw ContractError("rep_permutation: not a permutation");
    s_inv[s[i]] = i;
  }
  Eigen::MatrixXcd mat =
      Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  std::vector<int> digits(t);
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t rest = col;
    for (int k = t - 1; k >= 0; --k) {
      digits[k] = static_cast<int>(rest % d);
      rest /= d;
    }
    std::size_t row = 0;
    for (int i = 0; i < t; ++i) row = row * d + static_cast<std::size_t>(digits[s_inv[i]]);
    mat(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = 1.0;
  }
  return DenseOperator{t, d, std::move(mat)};
}

namespace {

// Accumulates coeff * rep(permutation) for each permutation into acc.
void accumulate_permutations(Eigen::MatrixXcd& acc, int d, int t, double coeff) {
  const std::size_t dim = static_cast<std::size_t>(acc.rows());
  std::vector<int> digits(t);
  for (const std::vector<int>& s : enumerate_permutations(t)) {
    std::vector<int> s_inv(t);
    for (int i = 0; i < t; ++i) s_inv[s[i]] = i;
    for (std::size_t col = 0; col < dim; ++col) {
      std::size_t rest = col;
      for (int k = t - 1; k >= 0; --k) {
        digits[k] = static_cast<int>(rest % d);
        rest /= d;
      }
      std::size_t row = 0;
      for (int i = 0; i < t; ++i) row = row * d + static_cast<std::size_t>(digits[s_inv[i]]);
      acc(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += coeff;
    }
  }
}

}  // namespace

DenseOperator rho_sym(int d, int t, std::size_t cap) {
  const auto dim = static_cast<Eigen::Index>(tensor_dim(d, t, cap));
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  accumulate_permutations(acc, d, t, 1.0 / p_factor(d, t).to_double());
  return DenseOperator{t, d, std::move(acc)};
}

DenseOperator symmetric_projector(int d, int t, std::size_t cap) {
  const auto dim = static_cast<Eigen::Index>(tensor_dim(d, t, cap));
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  double t_factorial = 1.0;
  for (int k = 2; k <= t; ++k) t_factorial *= k;
  accumulate_permutations(acc, d, t, 1.0 / t_factorial);
  return DenseOperator{t, d, std::move(acc)};
}

DenseOperator rho_br(int d, int t, std::size_t cap) {
  const auto dim = static_cast<Eigen::Index>(tensor_dim(d, t, cap));
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  const double inv_z = 1.0 / z_factor(d, t).to_double();
  for (const PairPartition& m : enumerate_pairings(t)) accumulate_pairing(acc, m, d, inv_z);
  return DenseOperator{t, d, std::move(acc)};
}

double hermiticity_gap(const DenseOperator& a) {
  return (a.entries - a.entries.adjoint()).cwiseAbs().maxCoeff();
}

double trace_distance(const DenseOperator& a, const DenseOperator& b) {
  if (a.t != b.t || a.d != b.d)
    throw SizeError("trace_distance: operators live on different spaces");
  if (hermiticity_gap(a) > kHermitianTol || hermiticity_gap(b) > kHermitianTol)
    throw ContractError("trace_distance: inputs must be Hermitian within 1e-10");
  DenseOperator diff{a.t, a.d, a.entries - b.entries};
  const Eigen::VectorXd eigenvalues = hermitian_eigenvalues(diff, "trace_distance");
  return eigenvalues.cwiseAbs().sum() / 2.0;
}

Rational closed_form_distance(int d, int t) {
  if (d < 1 || t < 1) throw SizeError("closed_form_distance: d and t must be positive");
  // The j = 0 factors of P and Z cancel, leaving prod_{j=1}^{t-1}(d+j)/(d+2j).
  return Rational(1) - Rational(p_factor(d, t), z_factor(d, t));
}

double min_eigenvalue(const DenseOperator& a) {
  return hermitian_eigenvalues(a, "min_eigenvalue").minCoeff();
}

double overlap_trace(const PairPartition& m, const StateVector& psi) {
  std::complex<double> bilinear = 0.0;
  for (Eigen::Index k = 0; k < psi.amplitudes.size(); ++k)
    bilinear += psi.amplitudes[k] * psi.amplitudes[k];
  const double r = std::abs(bilinear);
  return std::pow(r, m.t() - propagating_number(m));
}

Eigen::VectorXcd tensor_power(const Eigen::VectorXcd& v, int t, std::size_t cap) {
  tensor_dim(static_cast<int>(v.size()), t, cap);
  Eigen::VectorXcd out = v;
  for (int k = 1; k < t; ++k) {
    Eigen::VectorXcd next(out.size() * v.size());
    for (Eigen::Index i = 0; i < out.size(); ++i)
      next.segment(i * v.size(), v.size()) = out[i] * v;
    out = std::move(next);
  }
  return out;
}

Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd& m, int t, std::size_t cap) {
  tensor_dim(static_cast<int>(m.rows()), t, cap);
  Eigen::MatrixXcd out = m;
  for (int k = 1; k < t; ++k) {
    Eigen::MatrixXcd next(out.rows() * m.rows(), out.cols() * m.cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i)
      for (Eigen::Index j = 0; j < out.cols(); ++j)
        next.block(i * m.rows(), j * m.cols(), m.rows(), m.cols()) = out(i, j) * m;
    out = std::move(next);
  }
  return out;
}

DenseOperator partial_trace_last(const DenseOperator& a) {
  if (a.t < 2) throw SizeError("partial_trace_last: need at least two tensor factors");
  const Eigen::Index d = a.d;
  const Eigen::Index reduced = a.side() / d;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(reduced, reduced);
  for (Eigen::Index i = 0; i < reduced; ++i)
    for (Eigen::Index j = 0; j < reduced; ++j)
      for (Eigen::Index k = 0; k < d; ++k) out(i, j) += a.entries(i * d + k, j * d + k);
  return DenseOperator{a.t - 1, a.d, std::move(out)};
}

}  // namespace brauer
