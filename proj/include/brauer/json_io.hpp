#pragma once

#include <json.hpp>
#include <string>

#include "brauer/brauer_linalg.hpp"
#include "brauer/designs.hpp"
#include "brauer/pairings.hpp"
#include "brauer/sampling.hpp"

namespace brauer {

using Json = nlohmann::ordered_json;

/// PairPartition <-> [[1,3],[2,4]], always canonical order, 1-indexed.
inline Json pairing_to_json(const PairPartition& m) {
  Json out = Json::array();
  for (const auto& [a, b] : m.pairs()) out.push_back(Json::array({a, b}));
  return out;
}

inline PairPartition pairing_from_json(const Json& j) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& entry : j) pairs.emplace_back(entry.at(0).get<int>(), entry.at(1).get<int>());
  const int t = static_cast<int>(pairs.size());
  return PairPartition(t, std::move(pairs));
}

/// Exact rationals as numerator/denominator decimal strings.
inline Json rational_to_json(const Rational& r) {
  return Json{{"num", r.num().to_string()}, {"den", r.den().to_string()}};
}

/// Gram dump with integer entries as decimal strings (they outgrow 64 bits
/// at large t, d).
inline Json gram_to_json(const GramMatrix& gram) {
  Json basis = Json::array();
  for (const PairPartition& m : enumerate_pairings(gram.t())) basis.push_back(pairing_to_json(m));
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < gram.size(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < gram.size(); ++j) row.push_back(gram.entry(i, j).to_string());
    entries.push_back(std::move(row));
  }
  return Json{{"t", gram.t()}, {"d", gram.d()}, {"basis", std::move(basis)},
              {"entries", std::move(entries)}};
}

inline Json weingarten_to_json(const WeingartenMatrix& w) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < w.entries.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < w.entries.cols(); ++j) row.push_back(w.entries(i, j));
    entries.push_back(std::move(row));
  }
  return Json{{"t", w.t},       {"d", w.d},           {"rank", w.rank},
              {"cutoff", w.cutoff}, {"entries", std::move(entries)}};
}

inline Json constraint_set_to_json(const DesignConstraintSet& set) {
  Json constraints = Json::array();
  for (const DesignConstraint& c : set.constraints)
    constraints.push_back(Json{{"exponent", c.exponent},
                               {"required_value", rational_to_json(c.required_value)}});
  Json out{{"t", set.t},
           {"d", set.d},
           {"constraints", std::move(constraints)},
           {"consistent", set.consistent}};
  if (set.witness_r_squared) out["witness_r_squared"] = *set.witness_r_squared;
  return out;
}

inline Json moment_report_to_json(const MomentReport& report) {
  Json out{{"t", report.t},
           {"d", report.d},
           {"trace_distance_numeric", report.trace_distance_numeric},
           {"one_norm", report.one_norm},
           {"min_eigenvalue_check", report.min_eigenvalue_check}};
  if (report.trace_distance_closed_form)
    out["trace_distance_closed_form"] = rational_to_json(*report.trace_distance_closed_form);
  out["notes"] = report.notes;
  return out;
}

inline Json experiment_result_to_json(const ExperimentResult& result) {
  return Json{{"n_samples", result.n_samples},
              {"empirical_success", result.empirical_success},
              {"predicted_success", result.predicted_success},
              {"std_error", result.std_error},
              {"seed", result.seed},
              {"workers", result.workers},
              {"elapsed_seconds", result.elapsed_seconds}};
}

/// Complex dense operator as nested [re, im] pairs.
inline Json operator_to_json(const DenseOperator& op) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < op.entries.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < op.entries.cols(); ++j)
      row.push_back(Json::array({op.entries(i, j).real(), op.entries(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return Json{{"t", op.t}, {"d", op.d}, {"entries", std::move(rows)}};
}

}  // namespace brauer
