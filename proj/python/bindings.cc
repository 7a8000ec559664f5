// Copyright 2026 The qinv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qinv/error.h"
#include "qinv/invariants.h"
#include "qinv/orbit.h"
#include "qinv/pauli.h"
#include "qinv/state.h"
#include "qinv/state_file.h"

namespace py = pybind11;
using namespace qinv;

namespace {

py::dict report_dict(const InvariantReport &r) {
    py::dict d;
    for (const auto &e : r.entries()) {
        if (e.kind == ValueKind::kReal) {
            d[py::str(e.name)] = e.value.real();
        } else {
            d[py::str(e.name)] = e.value;
        }
    }
    return d;
}

Normalization policy_of(const std::string &s) {
    if (s == "strict") return Normalization::kStrict;
    if (s == "auto") return Normalization::kAuto;
    if (s == "raw") return Normalization::kRaw;
    throw Error(ErrorCode::kInvalidArgument, "normalization must be 'strict', 'auto' or 'raw'");
}

GroupKind group_of(const std::string &s) {
    if (s == "lu") return GroupKind::kLU;
    if (s == "sl") return GroupKind::kSL;
    throw Error(ErrorCode::kInvalidArgument, "group must be 'lu' or 'sl'");
}

}  // namespace

PYBIND11_MODULE(_qinv, m) {
    m.doc() = "Local-unitary and SLOCC invariants of multi-qubit pure states.";

    py::register_exception<Error>(m, "QinvError", PyExc_ValueError);

    py::class_<PureState>(m, "PureState")
        .def(py::init([](int n, std::vector<Complex> amps, const std::string &normalization) {
                 return PureState(n, std::move(amps), policy_of(normalization));
             }),
             py::arg("num_qubits"), py::arg("amplitudes"), py::arg("normalization") = "strict")
        .def_static("basis", &PureState::basis, py::arg("num_qubits"), py::arg("index"))
        .def_property_readonly("num_qubits", &PureState::num_qubits)
        .def_property_readonly("dim", &PureState::dim)
        .def_property_readonly("amplitudes",
                               [](const PureState &s) {
                                   auto a = s.amplitudes();
                                   return std::vector<Complex>(a.begin(), a.end());
                               })
        .def("norm_squared", &PureState::norm_squared)
        .def("is_normalized", &PureState::is_normalized)
        .def("normalized", &PureState::normalized)
        .def("__len__", &PureState::dim)
        .def("__getitem__", [](const PureState &s, std::size_t i) {
            if (i >= s.dim()) throw py::index_error();
            return s[i];
        });

    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def_property_readonly("kept_qubits", &DensityMatrix::kept_qubits)
        .def_property_readonly("matrix", &DensityMatrix::matrix)
        .def("eigenvalues", &DensityMatrix::eigenvalues);

    m.def("ghz_state", &ghz_state, py::arg("num_qubits"));
    m.def("w_state", &w_state, py::arg("num_qubits"));
    m.def("random_state", &random_state, py::arg("num_qubits"), py::arg("seed"));
    m.def("read_state_file", [](const std::string &path) { return read_state_file(path); });
    m.def("write_state_file", [](const std::string &path, const PureState &s) { write_state_file(path, s); });
    m.def("serialize_state", &serialize_state);

    m.def("partial_trace", [](const PureState &s, std::vector<int> keep) { return partial_trace(s, keep); },
          py::arg("state"), py::arg("keep"));
    m.def("purity", &purity);
    m.def("trace_power", &trace_power);

    m.def("expectation", [](const PureState &s, const std::string &p) { return expectation(s, PauliString::parse(p)); },
          py::arg("state"), py::arg("pauli"));
    m.def(
        "bilinear",
        [](const PureState &s, const std::vector<Eigen::Matrix2cd> &ops) {
            return bilinear(s, OperatorString(ops.begin(), ops.end()));
        },
        py::arg("state"), py::arg("ops"));
    m.def("adjoint_rotation", &adjoint_rotation);
    m.def("euler_unitary", &euler_unitary, py::arg("alpha"), py::arg("omega"), py::arg("beta"));

    m.def("inv_single", &inv_single, py::arg("state"), py::arg("qubit"));
    m.def("inv_pair", &inv_pair, py::arg("state"), py::arg("i"), py::arg("j"));
    m.def("pair_identity_residual", &pair_identity_residual, py::arg("state"), py::arg("i"), py::arg("j"));
    m.def("concurrence_even", &concurrence_even);
    m.def("z_odd", &z_odd);
    m.def(
        "i5",
        [](const PureState &s, const std::string &method) {
            if (method != "density" && method != "pauli") {
                throw Error(ErrorCode::kInvalidArgument, "method must be 'density' or 'pauli'");
            }
            return i5(s, method == "density" ? I5Method::kDensity : I5Method::kPauli);
        },
        py::arg("state"), py::arg("method") = "density");
    m.def(
        "c_pair",
        [](const PureState &s, const std::string &pair) {
            for (auto p : {QubitPair::kAB, QubitPair::kAC, QubitPair::kBC}) {
                if (qubit_pair_name(p) == pair) return c_pair(s, p);
            }
            throw Error(ErrorCode::kInvalidArgument, "pair must be 'AB', 'AC' or 'BC'");
        },
        py::arg("state"), py::arg("pair") = "AB");
    m.def("ckw_tangle", &ckw_tangle);
    m.def("sudbery_suite", [](const PureState &s) { return report_dict(sudbery_suite(s)); });
    m.def("invariant_report", [](const PureState &s) { return report_dict(invariant_report(s)); });
    m.def("invariant_report_json", [](const PureState &s) { return invariant_report(s).to_json(); });
    m.def("invariant_count", &invariant_count);

    py::class_<LocalOperator>(m, "LocalOperator")
        .def_property_readonly("num_qubits", &LocalOperator::num_qubits)
        .def_property_readonly("group", [](const LocalOperator &g) { return group_name(g.kind()); })
        .def_property_readonly("ops", [](const LocalOperator &g) {
            return std::vector<Eigen::Matrix2cd>(g.ops().begin(), g.ops().end());
        });
    m.def("random_lu", &random_lu, py::arg("num_qubits"), py::arg("seed"), py::arg("global_phase") = false);
    m.def("random_sl", &random_sl, py::arg("num_qubits"), py::arg("seed"), py::arg("spread") = 0.5);
    m.def(
        "apply_local",
        [](const PureState &s, const LocalOperator &g, bool raw) {
            auto image = apply_local(s, g);
            return raw ? image.raw : image.state;
        },
        py::arg("state"), py::arg("op"), py::arg("raw") = false);

    m.def(
        "verify_invariance",
        [](const PureState &s, const std::string &name, const std::string &group, int samples, double tol,
           std::uint64_t seed) {
            for (const auto &sel : applicable_invariants(s.num_qubits())) {
                if (sel.name(s.num_qubits()) != name) continue;
                auto r = verify_invariance(s, sel, group_of(group), samples, tol, seed);
                py::dict d;
                d["invariant"] = r.invariant;
                d["group"] = group_name(r.group);
                d["samples"] = r.samples;
                d["max_abs_deviation"] = r.max_abs_deviation;
                d["max_rel_deviation"] = r.max_rel_deviation;
                d["seed"] = r.seed;
                d["tolerance"] = r.tolerance;
                d["pass"] = r.pass;
                return d;
            }
            throw Error(ErrorCode::kInvariantNotApplicable, "no invariant named '" + name + "' for this state");
        },
        py::arg("state"), py::arg("invariant"), py::arg("group") = "lu", py::arg("samples") = 100,
        py::arg("tolerance") = 1e-9, py::arg("seed") = 0);
}
