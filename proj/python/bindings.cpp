// Copyright 2026 The wtype Authors
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
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

#include "wtype/error.hpp"
#include "wtype/numerics.hpp"
#include "wtype/oracle.hpp"
#include "wtype/qstate.hpp"
#include "wtype/reconstruct.hpp"
#include "wtype/wclass.hpp"

namespace py = pybind11;
using namespace wtype;

namespace {

using ComplexArray = py::array_t<complex, py::array::c_style | py::array::forcecast>;

py::array_t<complex> to_numpy(std::span<const complex> values) {
    py::array_t<complex> out(std::vector<py::ssize_t>{static_cast<py::ssize_t>(values.size())});
    auto view = out.mutable_unchecked<1>();
    for (py::ssize_t i = 0; i < view.shape(0); ++i) {
        view(i) = values[static_cast<std::size_t>(i)];
    }
    return out;
}

py::array_t<complex> to_numpy(const LocalOperator &op) {
    py::array_t<complex> out({2, 2});
    auto view = out.mutable_unchecked<2>();
    for (py::ssize_t r = 0; r < 2; ++r) {
        for (py::ssize_t c = 0; c < 2; ++c) {
            view(r, c) = op(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        }
    }
    return out;
}

LocalOperator operator_from_numpy(const ComplexArray &a) {
    if (a.ndim() != 2 || a.shape(0) != 2 || a.shape(1) != 2) {
        throw py::value_error("local operators must be 2x2 arrays");
    }
    auto v = a.unchecked<2>();
    return {v(0, 0), v(0, 1), v(1, 0), v(1, 1)};
}

PureState state_from_numpy(const ComplexArray &a) {
    if (a.ndim() != 1) {
        throw py::value_error("amplitudes must be a 1-d array");
    }
    return PureState::from_amplitudes(std::vector<complex>(a.data(), a.data() + a.size()));
}

py::list witness_to_list(const WitnessLU &witness) {
    py::list out;
    for (const auto &op : witness.ops()) {
        out.append(to_numpy(op));
    }
    return out;
}

ReconstructionTargets targets_from(const std::vector<double> &values, bool scaled) {
    return scaled ? ReconstructionTargets::from_scaled(values) : ReconstructionTargets::from_determinants(values);
}

py::dict report_to_dict(const TrialReport &r) {
    py::dict d;
    d["name"] = r.name;
    d["n"] = r.parties;
    d["trials"] = r.trials;
    d["failures"] = r.failures;
    d["worst_error"] = r.worst_error;
    d["seed"] = r.seed;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Canonical forms, marginal invariants, LU equivalence and marginal reconstruction of W-class states.";

    py::register_exception<Error>(m, "WTypeError", PyExc_RuntimeError);

    py::class_<WCanonical>(m, "WCanonical")
        .def(py::init([](double u, std::vector<double> c) { return WCanonical::make(u, std::move(c)); }),
             py::arg("u"), py::arg("c"))
        .def_property_readonly("n", &WCanonical::parties)
        .def_property_readonly("u", &WCanonical::u)
        .def_property_readonly("c", [](const WCanonical &w) { return std::vector<double>(w.c().begin(), w.c().end()); })
        .def("amplitudes", [](const WCanonical &w) { return to_numpy(w.to_state().amplitudes()); })
        .def("max_difference", &WCanonical::max_difference)
        .def("__repr__", [](const WCanonical &w) {
            std::string s = "WCanonical(u=" + std::to_string(w.u()) + ", c=[";
            for (int k = 0; k < w.parties(); ++k) {
                s += (k ? ", " : "") + std::to_string(w.c(k));
            }
            return s + "])";
        });

    m.def("build_w_state", [](int n) { return to_numpy(build_w_state(n).amplitudes()); }, py::arg("n"));

    m.def("apply_local",
          [](const ComplexArray &amplitudes, const std::vector<ComplexArray> &ops) {
              std::vector<LocalOperator> parsed;
              for (const auto &op : ops) {
                  parsed.push_back(operator_from_numpy(op));
              }
              return to_numpy(apply_local(state_from_numpy(amplitudes), parsed).amplitudes());
          },
          py::arg("amplitudes"), py::arg("ops"));

    m.def("reduced_density",
          [](const ComplexArray &amplitudes, int party) {
              return to_numpy(reduced_density(state_from_numpy(amplitudes), party).matrix());
          },
          py::arg("amplitudes"), py::arg("party"), "Single-qubit marginal of a party (0-based).");

    m.def("spectrum_from_det",
          [](double det) {
              const auto s = spectrum_from_det(det);
              return py::make_tuple(s.lambda_min, s.lambda_max, s.det);
          },
          py::arg("det"));

    m.def("qr_2x2",
          [](const ComplexArray &a) {
              const auto f = qr_2x2(operator_from_numpy(a));
              return py::make_tuple(to_numpy(f.unitary), to_numpy(f.upper));
          },
          py::arg("a"));

    m.def("canonicalize_slocc",
          [](const std::vector<ComplexArray> &ops) {
              std::vector<LocalOperator> parsed;
              for (const auto &op : ops) {
                  parsed.push_back(operator_from_numpy(op));
              }
              const auto result = canonicalize_slocc(SloccForm::make(std::move(parsed)));
              return py::make_tuple(result.canonical, witness_to_list(result.witness));
          },
          py::arg("ops"), "Canonical form of (A_1 x ... x A_n)|W>_n and witness unitaries.");

    m.def("canonicalize_excitation",
          [](const ComplexArray &amplitudes) {
              const auto result = canonicalize_excitation(state_from_numpy(amplitudes));
              return py::make_tuple(result.canonical, witness_to_list(result.witness));
          },
          py::arg("amplitudes"));

    m.def("invariant_profile", [](const WCanonical &w) { return invariant_profile(w).dets; }, py::arg("w"));
    m.def("invariant_profile_from_state",
          [](const ComplexArray &amplitudes) { return invariant_profile_from_state(state_from_numpy(amplitudes)).dets; },
          py::arg("amplitudes"));

    m.def("lu_equivalent",
          [](const WCanonical &a, const WCanonical &b, double tol) {
              const auto d = lu_equivalent(a, b, tol);
              return py::make_tuple(d.equivalent, d.max_profile_gap);
          },
          py::arg("a"), py::arg("b"), py::arg("tol") = default_tolerances().equivalence);

    m.def("f_eval", [](double y, const std::vector<double> &x) { return f_eval(y, ReconstructionTargets::from_scaled(x)); },
          py::arg("y"), py::arg("x"));
    m.def("g_eval",
          [](double y, const std::vector<double> &x, int pivot) {
              return g_eval(y, ReconstructionTargets::from_scaled(x), pivot);
          },
          py::arg("y"), py::arg("x"), py::arg("pivot"));

    m.def("reconstruct",
          [](const std::vector<double> &values, bool scaled) -> py::object {
              const auto r = reconstruct_detailed(targets_from(values, scaled));
              if (!r) {
                  return py::none();
              }
              py::dict d;
              d["canonical"] = r->canonical;
              d["branch"] = r->solution.branch == Branch::G ? "G" : "F";
              d["A"] = r->solution.total;
              d["pivot"] = r->solution.pivot ? py::cast(*r->solution.pivot) : py::none();
              d["residual"] = r->forward_residual;
              return std::move(d);
          },
          py::arg("values"), py::kw_only(), py::arg("scaled"),
          "Recover the canonical state from x_k = 4 det rho_k (scaled=True) or det rho_k (scaled=False); "
          "None when no W-class state has these marginals.");

    m.def("uniqueness_scan",
          [](const std::vector<double> &values, bool scaled, int grid_points) {
              return uniqueness_scan(targets_from(values, scaled), grid_points);
          },
          py::arg("values"), py::kw_only(), py::arg("scaled"), py::arg("grid_points") = kDefaultScanPoints);

    m.def("random_canonical", py::overload_cast<int, std::uint64_t>(&random_canonical), py::arg("n"), py::arg("seed"));
    m.def("random_unitary_2", [](std::uint64_t seed) { return to_numpy(random_unitary_2(seed)); }, py::arg("seed"));

    m.def("verify_theorem1", [](int n, int trials, std::uint64_t seed) { return report_to_dict(verify_theorem1(n, trials, seed)); },
          py::arg("n"), py::arg("trials"), py::arg("seed"));
    m.def("verify_lemma2",
          [](int n, int trials, int grid_points, std::uint64_t seed) {
              return report_to_dict(verify_lemma2(n, trials, grid_points, seed));
          },
          py::arg("n"), py::arg("trials"), py::arg("grid_points"), py::arg("seed"));
}
