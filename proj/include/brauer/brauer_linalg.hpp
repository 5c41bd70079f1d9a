#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "brauer/bigint.hpp"
#include "brauer/pairings.hpp"

namespace brauer {

/// Largest t for which the dense (2t-1)!!^2 Gram matrix is materialized
/// (10395^2 entries at t = 6).
inline constexpr int kMaxGramT = 6;

/// Exact Gram matrix of the diagram basis under Tr[X^T Y]: entry (i, j) is
/// d^union_cycle_count(m_i, m_j), stored as the cycle-count exponent plus a
/// table of exact powers of d. Basis order is the global lexicographic one.
class GramMatrix {
 public:
  GramMatrix(int t, int d, Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> cycles,
             std::vector<BigInt> powers_of_d);

  int t() const noexcept { return t_; }
  int d() const noexcept { return d_; }
  Eigen::Index size() const noexcept { return cycles_.rows(); }

  /// Exact integer entry d^cycles(i, j).
  const BigInt& entry(Eigen::Index i, Eigen::Index j) const;
  int cycle_count(Eigen::Index i, Eigen::Index j) const { return cycles_(i, j); }

  /// Exact row sum; equals Z(d, t) for every row.
  BigInt row_sum(Eigen::Index i) const;

  /// Floating-point copy for the pseudo-inverse.
  Eigen::MatrixXd to_dense() const;

 private:
  int t_;
  int d_;
  Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> cycles_;
  std::vector<BigInt> powers_of_d_;  // powers_of_d_[k] = d^k, k = 0..t
};

/// Weingarten matrix: Moore-Penrose pseudo-inverse of the Gram matrix, with
/// the singular-value cutoff and resulting rank recorded.
struct WeingartenMatrix {
  int t;
  int d;
  Eigen::MatrixXd entries;
  Eigen::Index rank;
  double cutoff;
};

/// Coefficient vector over the diagram basis, global pairing order.
struct CoefficientVector {
  int t;
  Eigen::VectorXd values;
};

/// P(d,t) = d (d+1) ... (d+t-1), exact.
BigInt p_factor(int d, int t);

/// Z(d,t) = d (d+2) ... (d+2t-2), exact. Row sum of the Gram matrix and
/// normalization of the real-orbit moment operator.
BigInt z_factor(int d, int t);

GramMatrix gram_matrix(int t, int d);

/// Pseudo-inverse of gram_matrix(t, d). Cutoff is
/// (largest singular value) * 1e-12 * size; rank deficiency is expected for
/// d < t and handled by the pseudo-inverse.
WeingartenMatrix weingarten_matrix(int t, int d);
WeingartenMatrix weingarten_from_gram(const GramMatrix& gram);

/// c = W b, mapping diagram overlaps to commutant expansion coefficients.
CoefficientVector twirl_coefficients(const WeingartenMatrix& w, const CoefficientVector& b);

}  // namespace brauer
