#include "brauer/designs.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>

#include "brauer/brauer_linalg.hpp"
#include "brauer/errors.hpp"

namespace brauer {

double conjugate_overlap(const StateVector& psi) {
  std::complex<double> bilinear = 0.0;
  for (Eigen::Index k = 0; k < psi.amplitudes.size(); ++k)
    bilinear += psi.amplitudes[k] * psi.amplitudes[k];
  return std::abs(bilinear);
}

DenseOperator orbit_moment(const StateVector& psi, int t, std::size_t cap) {
  const int d = psi.d;
  const auto dim = static_cast<Eigen::Index>(tensor_dim(d, t, cap));
  const std::vector<PairPartition> basis = enumerate_pairings(t);
  const double r = conjugate_overlap(psi);

  Eigen::VectorXd b(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    b[static_cast<Eigen::Index>(i)] = std::pow(r, t - propagating_number(basis[i]));

  const WeingartenMatrix w = weingarten_matrix(t, d);
  const Eigen::VectorXd c = w.entries * b;

  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t i = 0; i < basis.size(); ++i)
    accumulate_pairing(acc, basis[i], d, c[static_cast<Eigen::Index>(i)]);
  return DenseOperator{t, d, std::move(acc)};
}

StateVector construct_design_state(int d) {
  if (d < 2) throw std::domain_error("construct_design_state: d must be at least 2");
  const double s = std::sqrt(2.0 / (d + 1));
  Eigen::VectorXcd amplitudes = Eigen::VectorXcd::Zero(d);
  amplitudes[0] = std::sqrt((1.0 - s) / 2.0);
  amplitudes[1] = std::complex<double>(0.0, std::sqrt((1.0 + s) / 2.0));
  return StateVector::make(std::move(amplitudes));
}

DesignConstraintSet design_constraints(int t, int d) {
  if (d < 1) throw SizeError("design_constraints: d must be positive");
  const std::vector<PairPartition> basis = enumerate_pairings(t);

  // v = G c with c = (1/P) on the permutation diagrams: for each diagram m,
  // v_m = (1/P) sum_{s in S_t} d^{union_cycle_count(m, s)}. Only the columns
  // at permutation diagrams are needed, never the full Gram matrix.
  std::vector<PairPartition> permutation_diagrams;
  for (const std::vector<int>& s : enumerate_permutations(t))
    permutation_diagrams.push_back(pairing_from_permutation(s));

  std::vector<BigInt> powers(t + 1);
  powers[0] = BigInt(1);
  for (int k = 1; k <= t; ++k) powers[k] = powers[k - 1] * BigInt(d);

  const BigInt p = p_factor(d, t);
  // Propagating-number class -> exact numerator sum, checked for agreement.
  std::map<int, BigInt> class_value;
  for (const PairPartition& m : basis) {
    BigInt sum;
    for (const PairPartition& s : permutation_diagrams)
      sum += powers[static_cast<std::size_t>(union_cycle_count(m, s))];
    const int pr = propagating_number(m);
    auto [it, inserted] = class_value.emplace(pr, sum);
    if (!inserted && !(it->second == sum))
      throw StructuralError("design_constraints: diagrams with propagating number " +
                            std::to_string(pr) + " disagree; implementation bug");
  }

  if (!(class_value.at(t) == p))
    throw StructuralError("design_constraints: permutation class must produce value 1");

  DesignConstraintSet result;
  result.t = t;
  result.d = d;
  for (const auto& [pr, numerator] : class_value) {
    if (pr == t) continue;
    result.constraints.push_back(DesignConstraint{t - pr, Rational(numerator, p)});
  }
  std::sort(result.constraints.begin(), result.constraints.end(),
            [](const DesignConstraint& a, const DesignConstraint& b) {
              return a.exponent < b.exponent;
            });

  // Consistent iff a single r in [0, 1] satisfies every r^k = v: all values
  // must lie in [0, 1] and agree under exact cross-powering.
  const Rational zero(0), one(1);
  bool consistent = true;
  for (const DesignConstraint& c : result.constraints)
    if (c.required_value < zero || c.required_value > one) consistent = false;
  for (std::size_t i = 0; consistent && i < result.constraints.size(); ++i) {
    for (std::size_t j = i + 1; consistent && j < result.constraints.size(); ++j) {
      const auto& ci = result.constraints[i];
      const auto& cj = result.constraints[j];
      if (Rational::pow(ci.required_value, static_cast<unsigned>(cj.exponent)) !=
          Rational::pow(cj.required_value, static_cast<unsigned>(ci.exponent)))
        consistent = false;
    }
  }
  result.consistent = consistent;
  if (consistent && !result.constraints.empty()) {
    const auto& c0 = result.constraints.front();
    result.witness_r_squared =
        std::pow(c0.required_value.to_double(), 2.0 / static_cast<double>(c0.exponent));
  }
  return result;
}

MomentReport exact_design_check(const StateVector& psi, int t, std::size_t cap) {
  const int d = psi.d;
  const DenseOperator orbit = orbit_moment(psi, t, cap);
  const DenseOperator sym = rho_sym(d, t, cap);
  const double td = trace_distance(orbit, sym);

  MomentReport report;
  report.t = t;
  report.d = d;
  report.trace_distance_numeric = td;
  report.one_norm = 2.0 * td;
  report.min_eigenvalue_check = min_eigenvalue(orbit);
  const bool real_valued = psi.amplitudes.imag().cwiseAbs().maxCoeff() <= 1e-12;
  if (real_valued) report.trace_distance_closed_form = closed_form_distance(d, t);
  if (d == 1)
    report.notes = "d=1: every state is |0> up to phase, the orbit moment is trivial";
  return report;
}

DesignConstraintSet impossibility_report(int t, int d) {
  if (t < 4) throw SizeError("impossibility_report: t must be at least 4");
  DesignConstraintSet set = design_constraints(t, d);
  const bool expected = d == 1;
  if (set.consistent != expected)
    throw StructuralError("impossibility_report: constraint set for t=" + std::to_string(t) +
                          ", d=" + std::to_string(d) + " has unexpected consistency");
  return set;
}

}  // namespace brauer
