// Python bindings for the main library operations. Exact integers cross the
// boundary as python ints (via decimal strings), exact rationals as
// fractions.Fraction.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "brauer/brauer_linalg.hpp"
#include "brauer/designs.hpp"
#include "brauer/errors.hpp"
#include "brauer/pairings.hpp"
#include "brauer/sampling.hpp"
#include "brauer/tensor_rep.hpp"
#include "brauer/verify.hpp"
#include "brauer/version.hpp"

namespace py = pybind11;
using namespace brauer;

namespace {

py::object big_to_int(const BigInt& value) {
  return py::module_::import("builtins").attr("int")(value.to_string());
}

py::object rational_to_fraction(const Rational& value) {
  return py::module_::import("fractions")
      .attr("Fraction")(big_to_int(value.num()), big_to_int(value.den()));
}

py::list gram_rows(const GramMatrix& gram) {
  py::list rows;
  for (Eigen::Index i = 0; i < gram.size(); ++i) {
    py::list row;
    for (Eigen::Index j = 0; j < gram.size(); ++j) row.append(big_to_int(gram.entry(i, j)));
    rows.append(std::move(row));
  }
  return rows;
}

py::dict constraint_set_to_dict(const DesignConstraintSet& set) {
  py::list constraints;
  for (const DesignConstraint& c : set.constraints) {
    py::dict entry;
    entry["exponent"] = c.exponent;
    entry["required_value"] = rational_to_fraction(c.required_value);
    constraints.append(std::move(entry));
  }
  py::dict out;
  out["t"] = set.t;
  out["d"] = set.d;
  out["constraints"] = std::move(constraints);
  out["consistent"] = set.consistent;
  if (set.witness_r_squared) out["witness_r_squared"] = *set.witness_r_squared;
  return out;
}

StateVector state_from_array(const Eigen::VectorXcd& amplitudes) {
  return StateVector::make(amplitudes);
}

}  // namespace

PYBIND11_MODULE(pybrauer, m) {
  m.doc() = "Moment operators of Haar-random real and complex states via the Brauer "
            "diagram algebra";
  m.attr("__version__") = kVersion;

  py::class_<PairPartition>(m, "PairPartition")
      .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("t"), py::arg("pairs"))
      .def_property_readonly("t", &PairPartition::t)
      .def_property_readonly("pairs", [](const PairPartition& p) { return p.pairs(); })
      .def("propagating_number", [](const PairPartition& p) { return propagating_number(p); })
      .def("is_permutation", [](const PairPartition& p) { return is_permutation_diagram(p); })
      .def("transpose", [](const PairPartition& p) { return transpose_diagram(p); })
      .def("__eq__", [](const PairPartition& a, const PairPartition& b) { return a == b; })
      .def("__hash__",
           [](const PairPartition& p) { return py::hash(py::str(p.to_string())); })
      .def("__repr__", [](const PairPartition& p) { return "PairPartition" + p.to_string(); });

  m.def("enumerate_pairings", &enumerate_pairings, py::arg("t"),
        "All (2t-1)!! pairings of [2t] in the global lexicographic order");
  m.def("identity_pairing", &identity_pairing, py::arg("t"));
  m.def("double_factorial_odd", &double_factorial_odd, py::arg("t"));
  m.def(
      "compose",
      [](const PairPartition& a, const PairPartition& b) {
        const CompositionResult result = compose(a, b);
        return py::make_tuple(result.product, result.loops);
      },
      py::arg("m"), py::arg("n"), "Diagram composition; returns (product, loops)");
  m.def("union_cycle_count", &union_cycle_count, py::arg("m"), py::arg("n"));

  m.def(
      "p_factor", [](int d, int t) { return big_to_int(p_factor(d, t)); }, py::arg("d"),
      py::arg("t"), "P(d,t) = d (d+1) ... (d+t-1)");
  m.def(
      "z_factor", [](int d, int t) { return big_to_int(z_factor(d, t)); }, py::arg("d"),
      py::arg("t"), "Z(d,t) = d (d+2) ... (d+2t-2)");
  m.def(
      "gram_matrix", [](int t, int d) { return gram_rows(gram_matrix(t, d)); }, py::arg("t"),
      py::arg("d"), "Exact Gram matrix as nested python ints");
  m.def(
      "weingarten_matrix",
      [](int t, int d) {
        const WeingartenMatrix w = weingarten_matrix(t, d);
        return py::make_tuple(w.entries, w.rank, w.cutoff);
      },
      py::arg("t"), py::arg("d"), "Pseudo-inverse of the Gram matrix: (entries, rank, cutoff)");

  m.def(
      "rep_pairing", [](const PairPartition& p, int d) { return rep_pairing(p, d).entries; },
      py::arg("m"), py::arg("d"));
  m.def(
      "rho_sym", [](int d, int t) { return rho_sym(d, t).entries; }, py::arg("d"), py::arg("t"),
      "Haar moment of complex states: normalized symmetric projector");
  m.def(
      "rho_br", [](int d, int t) { return rho_br(d, t).entries; }, py::arg("d"), py::arg("t"),
      "Haar moment of real states: normalized diagram sum");
  m.def(
      "trace_distance",
      [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
        if (a.rows() != a.cols() || b.rows() != b.cols())
          throw SizeError("operators must be square");
        if (a.rows() != b.rows()) throw SizeError("operators differ in size");
        const int side = static_cast<int>(a.rows());
        return trace_distance(DenseOperator{1, side, a}, DenseOperator{1, side, b});
      },
      py::arg("a"), py::arg("b"), "Half the trace norm of a - b (Hermitian inputs)");
  m.def(
      "closed_form_distance",
      [](int d, int t) { return rational_to_fraction(closed_form_distance(d, t)); },
      py::arg("d"), py::arg("t"),
      "Exact trace distance 1 - prod_{j=1}^{t-1} (d+j)/(d+2j) as a Fraction");

  m.def(
      "conjugate_overlap",
      [](const Eigen::VectorXcd& amplitudes) {
        return conjugate_overlap(state_from_array(amplitudes));
      },
      py::arg("psi"), "|sum_k psi_k^2| of a unit vector");
  m.def(
      "orbit_moment",
      [](const Eigen::VectorXcd& amplitudes, int t) {
        return orbit_moment(state_from_array(amplitudes), t).entries;
      },
      py::arg("psi"), py::arg("t"),
      "Moment operator of the orthogonal orbit of psi (Weingarten pipeline)");
  m.def(
      "construct_design_state",
      [](int d) { return Eigen::VectorXcd(construct_design_state(d).amplitudes); }, py::arg("d"),
      "Two-amplitude state with r^2 = 2/(d+1)");
  m.def(
      "design_constraints",
      [](int t, int d) { return constraint_set_to_dict(design_constraints(t, d)); },
      py::arg("t"), py::arg("d"));
  m.def(
      "impossibility_report",
      [](int t, int d) { return constraint_set_to_dict(impossibility_report(t, d)); },
      py::arg("t"), py::arg("d"));

  m.def(
      "sample_haar_orthogonal",
      [](int d, std::uint64_t seed) {
        Rng rng(seed);
        return sample_haar_orthogonal(d, rng);
      },
      py::arg("d"), py::arg("seed"));
  m.def(
      "sample_haar_unitary",
      [](int d, std::uint64_t seed) {
        Rng rng(seed);
        return sample_haar_unitary(d, rng);
      },
      py::arg("d"), py::arg("seed"));
  m.def(
      "empirical_moment",
      [](const std::string& kind, const Eigen::VectorXcd& seed_state, int t, std::int64_t n,
         std::uint64_t seed, int workers) {
        EnsembleKind ensemble;
        if (kind == "orthogonal-orbit") ensemble = EnsembleKind::orthogonal_orbit;
        else if (kind == "unitary-haar") ensemble = EnsembleKind::unitary_haar;
        else throw SizeError("kind must be orthogonal-orbit or unitary-haar");
        const StateVector psi = state_from_array(seed_state);
        const EnsembleSpec spec{ensemble, psi, psi.d, t};
        return empirical_moment(spec, n, seed, workers).entries;
      },
      py::arg("kind"), py::arg("seed_state"), py::arg("t"), py::arg("n"), py::arg("seed"),
      py::arg("workers") = 1);
  m.def(
      "helstrom_experiment",
      [](int t, int d, std::int64_t n, std::uint64_t seed, int workers) {
        const ExperimentResult result = helstrom_experiment(t, d, n, seed, workers);
        py::dict out;
        out["n_samples"] = result.n_samples;
        out["empirical_success"] = result.empirical_success;
        out["predicted_success"] = result.predicted_success;
        out["std_error"] = result.std_error;
        out["seed"] = result.seed;
        out["workers"] = result.workers;
        out["elapsed_seconds"] = result.elapsed_seconds;
        return out;
      },
      py::arg("t"), py::arg("d"), py::arg("n"), py::arg("seed"), py::arg("workers") = 1);

  m.def("verify_all", []() {
    py::list out;
    for (const auto& result : verify::run_all()) {
      py::dict entry;
      entry["id"] = result.id;
      entry["name"] = result.name;
      entry["passed"] = result.passed;
      entry["details"] = result.details;
      out.append(std::move(entry));
    }
    return out;
  });

  py::register_exception<SizeError>(m, "SizeError", PyExc_ValueError);
  py::register_exception<CapError>(m, "CapError", PyExc_MemoryError);
  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
}
