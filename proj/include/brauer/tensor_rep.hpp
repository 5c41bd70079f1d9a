#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "brauer/bigint.hpp"
#include "brauer/pairings.hpp"

namespace brauer {

/// Default cap on the dense tensor dimension d^t; adjustable per call and via
/// the CLI --cap flag / BRAUER_CAP environment variable.
inline constexpr std::size_t kDefaultTensorCap = 4096;

/// Hermiticity tolerance for spectral routines.
inline constexpr double kHermitianTol = 1e-10;

/// d^t, guarded against overflow and against the configured cap.
std::size_t tensor_dim(int d, int t, std::size_t cap = kDefaultTensorCap);

/// A complex operator on (C^d)^{(x)t}, side d^t. Multi-index convention is
/// row-major with tensor factor 1 most significant.
struct DenseOperator {
  int t;
  int d;
  Eigen::MatrixXcd entries;

  Eigen::Index side() const noexcept { return entries.rows(); }
};

/// A pure state on C^d.
struct StateVector {
  int d;
  Eigen::VectorXcd amplitudes;

  /// Validates unit norm within 1e-12.
  static StateVector make(Eigen::VectorXcd amplitudes);
  /// Scales to unit norm (throws on the zero vector).
  static StateVector normalized(Eigen::VectorXcd amplitudes);
};

/// Exact 0/1 representation of a diagram: entry (i_1..i_t, i_{t+1}..i_{2t})
/// is the product of Kronecker deltas over the diagram's pairs.
Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> rep_pairing_exact(
    const PairPartition& m, int d, std::size_t cap = kDefaultTensorCap);

DenseOperator rep_pairing(const PairPartition& m, int d, std::size_t cap = kDefaultTensorCap);

/// Trace of rep_pairing(m, d), exact, without materializing the matrix.
std::int64_t rep_pairing_trace(const PairPartition& m, int d,
                               std::size_t cap = kDefaultTensorCap);

/// acc += coeff * rep(m), touching only the d^t nonzero entries. acc must
/// already have side d^t.
void accumulate_pairing(Eigen::MatrixXcd& acc, const PairPartition& m, int d,
                        std::complex<double> coeff);

/// Permutation action on tensor factors: factor i of the output carries
/// factor s^{-1}(i) of the input, so rep(s u) = rep(s) rep(u). s is one-line,
/// 0-indexed. Coincides with rep_pairing(pairing_from_permutation(s)).
DenseOperator rep_permutation(const std::vector<int>& s, int d,
                              std::size_t cap = kDefaultTensorCap);

/// Moment operator of t copies of a Haar-random complex state: the
/// normalized projector onto the symmetric subspace, (1/P(d,t)) sum of all
/// permutation operators.
DenseOperator rho_sym(int d, int t, std::size_t cap = kDefaultTensorCap);

/// Moment operator of t copies of a Haar-random real state:
/// (1/Z(d,t)) sum of all diagram operators.
DenseOperator rho_br(int d, int t, std::size_t cap = kDefaultTensorCap);

/// (1/t!) sum of all permutation operators; idempotent with trace
/// binomial(d+t-1, t).
DenseOperator symmetric_projector(int d, int t, std::size_t cap = kDefaultTensorCap);

/// max_ij |A - A^dagger|.
double hermiticity_gap(const DenseOperator& a);

/// Half the 1-norm of a - b (sum of absolute eigenvalues of the Hermitian
/// difference over two). Inputs must be Hermitian within 1e-10 and share
/// (t, d).
double trace_distance(const DenseOperator& a, const DenseOperator& b);

/// Exact rational 1 - P(d,t)/Z(d,t) = 1 - prod_{j=1}^{t-1} (d+j)/(d+2j).
/// This is the trace of the non-permutation component of rho_br and an upper
/// bound on trace_distance(rho_br, rho_sym). The bound is not tight: the
/// non-permutation component overlaps the symmetric subspace, so splitting
/// off the permutation part is not a Jordan decomposition (at d=2, t=2 the
/// spectral distance is 1/6 while this product gives 1/4).
Rational closed_form_distance(int d, int t);

/// Smallest eigenvalue of the Hermitian part; input must be Hermitian
/// within 1e-10.
double min_eigenvalue(const DenseOperator& a);

/// Tr[rep(m) |psi><psi|^{(x)t}] = r^(t - pr(m)) with r = |sum_k psi_k^2|.
double overlap_trace(const PairPartition& m, const StateVector& psi);

/// |v>^{(x)t} as a vector of length d^t.
Eigen::VectorXcd tensor_power(const Eigen::VectorXcd& v, int t,
                              std::size_t cap = kDefaultTensorCap);

/// M^{(x)t} as a matrix of side d^t.
Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd& m, int t,
                            std::size_t cap = kDefaultTensorCap);

/// Partial trace over the last tensor factor: (t, d) -> (t-1, d).
DenseOperator partial_trace_last(const DenseOperator& a);

}  // namespace brauer
