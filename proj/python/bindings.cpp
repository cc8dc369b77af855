// Copyright 2026 The mpfkit Authors
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

#include "mpfkit/bch.hpp"
#include "mpfkit/bounds.hpp"
#include "mpfkit/commutators.hpp"
#include "mpfkit/errors.hpp"
#include "mpfkit/hamiltonian.hpp"
#include "mpfkit/mpf.hpp"
#include "mpfkit/trotter.hpp"

namespace py = pybind11;
using namespace mpfkit;

namespace {

std::map<std::string, Complex> terms_dict(const PauliSum &s) {
    std::map<std::string, Complex> out;
    for (const auto &[string, coeff] : s.terms()) {
        out.emplace(string.str(), coeff);
    }
    return out;
}

PauliSum sum_from_dict(std::size_t n, const std::map<std::string, Complex> &terms) {
    std::vector<std::pair<std::string, Complex>> list(terms.begin(), terms.end());
    return PauliSum::from_terms(n, list);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Multi-product formula error and cost analysis";

    py::register_exception<DenseCapExceeded>(m, "DenseCapExceeded", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::class_<PauliString>(m, "PauliString")
        .def(py::init(&PauliString::parse), py::arg("text"))
        .def_property_readonly("n_sites", &PauliString::n_sites)
        .def_property_readonly("weight", &PauliString::weight)
        .def("commutes_with", &PauliString::commutes_with)
        .def("__str__", &PauliString::str)
        .def("__repr__", [](const PauliString &s) { return "PauliString('" + s.str() + "')"; });

    py::class_<PauliSum>(m, "PauliSum")
        .def(py::init(&sum_from_dict), py::arg("n_sites"), py::arg("terms"))
        .def_property_readonly("n_sites", &PauliSum::n_sites)
        .def_property_readonly("terms", &terms_dict)
        .def("one_norm", &PauliSum::one_norm)
        .def("adjoint", &PauliSum::adjoint)
        .def("is_hermitian", &PauliSum::is_hermitian, py::arg("tol") = 1e-10)
        .def("__len__", &PauliSum::size)
        .def("__add__", [](const PauliSum &a, const PauliSum &b) { return a + b; })
        .def("__sub__", [](const PauliSum &a, const PauliSum &b) { return a - b; })
        .def("__mul__", [](const PauliSum &a, const PauliSum &b) { return a * b; })
        .def("__mul__", [](const PauliSum &a, Complex c) { return a * c; })
        .def("__rmul__", [](const PauliSum &a, Complex c) { return a * c; })
        .def("__str__", &PauliSum::str);

    m.def("commutator", py::overload_cast<const PauliSum &, const PauliSum &>(&commutator));
    m.def(
        "operator_norm",
        [](const PauliSum &s, const std::string &mode, std::size_t cap) {
            return operator_norm(s, parse_norm_mode(mode), cap);
        },
        py::arg("op"), py::arg("mode") = "exact", py::arg("dense_cap") = kDefaultDenseCap);
    m.def("to_dense", &from_pauli_sum, py::arg("op"), py::arg("dense_cap") = kDefaultDenseCap);

    py::class_<HamiltonianSpec>(m, "HamiltonianSpec")
        .def_property_readonly("n_sites", &HamiltonianSpec::n_sites)
        .def_property_readonly("gamma_count", &HamiltonianSpec::gamma_count)
        .def_property_readonly("locality", &HamiltonianSpec::locality)
        .def_property_readonly("extensiveness", &HamiltonianSpec::extensiveness)
        .def_property_readonly("total_one_norm", &HamiltonianSpec::total_one_norm)
        .def("group_sum", &HamiltonianSpec::group_sum)
        .def("full_sum", &HamiltonianSpec::full_sum)
        .def("to_json", [](const HamiltonianSpec &s) { return s.to_json().dump(); });
    m.def("_load_spec_json", [](const std::string &text) { return load_spec(nlohmann::json::parse(text)); });
    m.def(
        "heisenberg_chain", &heisenberg_chain, py::arg("n"), py::arg("coupling") = 1.0, py::arg("field") = 0.0,
        py::arg("open_boundary") = true);
    m.def("long_range_chain", &long_range_chain, py::arg("n"), py::arg("exponent"), py::arg("base") = 1.0);

    py::class_<ProductFormulaPlan>(m, "ProductFormulaPlan")
        .def_readonly("order", &ProductFormulaPlan::order)
        .def_readonly("c_p", &ProductFormulaPlan::c_p)
        .def_readonly("symmetric", &ProductFormulaPlan::symmetric)
        .def_property_readonly("stages", [](const ProductFormulaPlan &plan) {
            std::vector<std::pair<std::size_t, double>> out;
            for (const auto &s : plan.stages) {
                out.emplace_back(s.group, s.alpha);
            }
            return out;
        });
    m.def("build_plan", py::overload_cast<const HamiltonianSpec &, int>(&build_plan), py::arg("spec"), py::arg("p"));

    py::class_<DenseModel>(m, "DenseModel")
        .def(py::init<const HamiltonianSpec &, std::size_t>(), py::arg("spec"), py::arg("dense_cap") = kDefaultDenseCap)
        .def("exact", &DenseModel::exact)
        .def("evaluate", &DenseModel::evaluate);
    m.def("trotter_error", &trotter_error);

    m.def(
        "alpha_com",
        [](const HamiltonianSpec &spec, int q, const std::string &mode, std::size_t cap) {
            return alpha_com(spec, q, parse_norm_mode(mode), cap);
        },
        py::arg("spec"), py::arg("q"), py::arg("mode") = "exact", py::arg("dense_cap") = kDefaultDenseCap);
    m.def("alpha_bound_factorial", &alpha_bound_factorial);
    m.def("alpha_bound_one_norm", &alpha_bound_one_norm);
    m.def(
        "mu_truncated",
        [](const std::map<int, double> &alpha, int p, int m, int p0, int n_max) {
            auto r = mu_truncated(alpha, p, m, p0, n_max);
            return py::dict(
                py::arg("value") = r.value, py::arg("q") = r.q, py::arg("n") = r.n,
                py::arg("converged") = r.converged, py::arg("empty") = r.empty);
        },
        py::arg("alpha"), py::arg("p"), py::arg("m"), py::arg("p0"), py::arg("n_max") = 8);

    m.def(
        "phi_operator", &phi_operator, py::arg("plan"), py::arg("spec"), py::arg("q"),
        py::arg("q_max") = kDefaultQMax);
    m.def(
        "truncated_bch_unitary", &truncated_bch_unitary, py::arg("plan"), py::arg("spec"), py::arg("tau"),
        py::arg("p0"), py::arg("q_max") = kDefaultQMax, py::arg("dense_cap") = kDefaultDenseCap);

    py::class_<MpfSpec>(m, "MpfSpec")
        .def_readonly("p", &MpfSpec::p)
        .def_readonly("k", &MpfSpec::k)
        .def_readonly("c", &MpfSpec::c)
        .def_readonly("m", &MpfSpec::m)
        .def_readonly("k_norm", &MpfSpec::k_norm)
        .def_readonly("c_norm", &MpfSpec::c_norm);
    m.def("richardson_coefficients", &richardson_coefficients);
    m.def("make_mpf", &make_mpf, py::arg("p"), py::arg("k"));
    m.def("mpf_error", &mpf_error);
    m.def("evaluate_mpf", &evaluate_mpf);

    m.def("truncation_order", &truncation_order, py::arg("n"), py::arg("eps"));
    m.def("select_m", &select_m, py::arg("n"), py::arg("g"), py::arg("t"), py::arg("eps"));
    m.def(
        "_bound_report_json",
        [](double n, double k, double g, double t, double eps, int p, std::size_t J, std::vector<int> k_list,
           std::size_t gamma) {
            auto mpf = k_list.empty() ? make_mpf_linear_scheme(p, J) : make_mpf(p, std::move(k_list));
            CostInputs in;
            in.n = n;
            in.k = k;
            in.g = g;
            in.t = t;
            in.eps = eps;
            in.p = p;
            in.c_p = build_plan(gamma, p).c_p;
            in.m = mpf.m;
            in.c_norm = mpf.c_norm;
            in.k_norm = mpf.k_norm;
            return bound_report(in, gamma, mpf.J()).to_json().dump();
        });
    m.def(
        "_table1_json",
        [](double n, double g, double t, double eps, double k, int p, double nu, double d, const std::string &range) {
            Table1Inputs in;
            in.n = n;
            in.g = g;
            in.t = t;
            in.eps = eps;
            in.k = k;
            in.p = p;
            in.nu = nu;
            in.d = d;
            in.range = parse_range_class(range);
            auto rows = nlohmann::json::array();
            for (const auto &row : table1_costs(in)) {
                rows.push_back(to_json(row));
            }
            return rows.dump();
        });
}
