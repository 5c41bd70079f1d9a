#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brauer/bigint.hpp"
#include "brauer/tensor_rep.hpp"

namespace brauer {

/// One polynomial constraint r^exponent = required_value on the conjugate
/// overlap r = |<psi*|psi>| of a seed state.
struct DesignConstraint {
  int exponent;             // t - pr, positive and even
  Rational required_value;  // exact
};

/// The constraints a seed state must satisfy for its orthogonal orbit to be
/// an exact t-design, one per propagating-number class below t.
struct DesignConstraintSet {
  int t;
  int d;
  std::vector<DesignConstraint> constraints;  // sorted by exponent
  bool consistent;
  std::optional<double> witness_r_squared;  // implied r^2 when consistent
};

/// Summary of how close an orbit moment operator is to the Haar moment.
struct MomentReport {
  int t;
  int d;
  double trace_distance_numeric;
  std::optional<Rational> trace_distance_closed_form;  // real-valued seeds only
  double one_norm;                                     // 2 * trace distance
  double min_eigenvalue_check;
  std::string notes;
};

/// r = |sum_k psi_k^2|, the single orbit invariant used throughout.
double conjugate_overlap(const StateVector& psi);

/// Moment operator of the orthogonal orbit of psi: coefficients c = W b with
/// b_m = r^(t - pr(m)), assembled over the diagram basis. Equals the Haar
/// average of (O |psi><psi| O^T)^{(x)t}.
DenseOperator orbit_moment(const StateVector& psi, int t, std::size_t cap = kDefaultTensorCap);

/// The two-amplitude state sqrt((1-s)/2)|0> + i sqrt((1+s)/2)|1> with
/// s = sqrt(2/(d+1)), embedded in dimension d. Satisfies r^2 = 2/(d+1), the
/// exact-design constraint for t <= 3.
StateVector construct_design_state(int d);

/// Derives the constraint set exactly: target coefficients 1/P(d,t) on the
/// permutation diagrams, v = G c, one constraint per propagating-number
/// class. Consistency is decided by exact cross-powering.
DesignConstraintSet design_constraints(int t, int d);

/// Trace distance of orbit_moment(psi, t) from rho_sym, with the closed form
/// attached when psi is real-valued.
MomentReport exact_design_check(const StateVector& psi, int t,
                                std::size_t cap = kDefaultTensorCap);

/// design_constraints for t >= 4, with the guaranteed outcome checked:
/// inconsistent for every d >= 2 and consistent at d = 1.
DesignConstraintSet impossibility_report(int t, int d);

}  // namespace brauer
