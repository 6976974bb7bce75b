// Copyright 2026 The curvlab Authors
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

// Python bindings: frames, curvature, projection jets, comparison, scans.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "curvlab/cli.hpp"
#include "curvlab/curvature.hpp"
#include "curvlab/errors.hpp"
#include "curvlab/framespec.hpp"
#include "curvlab/invariants.hpp"
#include "curvlab/nc.hpp"
#include "curvlab/projection.hpp"

namespace py = pybind11;
using namespace curvlab;

namespace {

CovariantPath parse_path(const std::string& s) {
  if (s == "zbar-first") return CovariantPath::kZbarFirst;
  if (s == "z-first") return CovariantPath::kZFirst;
  throw InputError("path must be zbar-first or z-first, got " + s);
}

nc::Path nc_path(const std::string& s) {
  return parse_path(s) == CovariantPath::kZbarFirst ? nc::Path::kZbarFirst
                                                     : nc::Path::kZFirst;
}

py::dict verdict_dict(const ContactVerdict& v) {
  py::dict d;
  d["status"] = to_string(v.status);
  d["order"] = v.order;
  d["method"] = v.method;
  d["point"] = v.point;
  d["words_checked"] = v.words_checked;
  if (v.witness) {
    py::dict w;
    w["word"] = v.witness->word;
    w["value_p"] = v.witness->value_p;
    w["value_q"] = v.witness->value_q;
    w["tolerance"] = v.witness->tolerance;
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  d["unitary_residual"] = v.unitary_residual ? py::cast(*v.unitary_residual) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Curvature of holomorphic frames and projection-valued curves.";

  auto base = py::register_exception<Error>(m, "CurvlabError");
  py::register_exception<SingularityError>(m, "SingularityError", base.ptr());
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());

  py::class_<HolomorphicFrame>(m, "Frame")
      .def_property_readonly("rank", &HolomorphicFrame::rank)
      .def_property_readonly("dim", &HolomorphicFrame::dim)
      .def_property_readonly("radius", &HolomorphicFrame::radius)
      .def("value", &HolomorphicFrame::value, py::arg("z"))
      .def("to_json", [](const HolomorphicFrame& f) { return frame_to_json(f).dump(); })
      .def("__repr__", [](const HolomorphicFrame& f) {
        std::ostringstream os;
        os << "Frame(dim=" << f.dim() << ", rank=" << f.rank() << ", radius=" << f.radius()
           << ")";
        return os.str();
      });

  m.def("constant_frame", &constant_frame, py::arg("N"), py::arg("n") = 1);
  m.def("bott_frame", &bott_frame);
  m.def("hardy_frame", &hardy_frame, py::arg("N"));
  m.def("bergman_frame", &bergman_frame, py::arg("N"));
  m.def("weighted_shift_frame", &weighted_shift_frame, py::arg("weights"), py::arg("N"));
  m.def("direct_sum", &direct_sum, py::arg("f"), py::arg("g"));
  m.def("left_multiply", &left_multiply, py::arg("u"), py::arg("f"));
  m.def("load_frame", &load_frame_file, py::arg("path"));
  m.def("save_frame", &save_frame_file, py::arg("frame"), py::arg("path"));
  m.def("frame_from_json", [](const std::string& text) {
    return frame_from_json(nlohmann::json::parse(text));
  }, py::arg("text"));

  m.def("curvature", [](const HolomorphicFrame& f, Complex z) {
    return curvature(metric_jet(f, z, 1));
  }, py::arg("frame"), py::arg("z"));

  m.def("curvature_table", [](const HolomorphicFrame& f, Complex z, int k,
                              const std::string& path) {
    const CurvatureTable t = covariant_table(metric_jet(f, z, k + 1), k, parse_path(path));
    std::vector<std::vector<CMatrix>> rows(k + 1);
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) rows[i].push_back(t.at(i, j));
    }
    return rows;
  }, py::arg("frame"), py::arg("z"), py::arg("k"), py::arg("path") = "zbar-first",
     "Nested list t[i][j] = K with i z-derivatives and j zbar-derivatives.");

  m.def("projection", [](const HolomorphicFrame& f, Complex z) {
    return projection_jet(f, z, 0, 0).value();
  }, py::arg("frame"), py::arg("z"));

  m.def("projection_derivative", [](const HolomorphicFrame& f, Complex z, int dbar, int d) {
    return projection_jet(f, z, dbar, d).jet.at(dbar, d);
  }, py::arg("frame"), py::arg("z"), py::arg("dbar"), py::arg("d"));

  m.def("f_expr", [](int i, int j, const std::string& path) {
    return nc::to_string(nc::f_expr(i, j, nc_path(path)));
  }, py::arg("i"), py::arg("j"), py::arg("path") = "zbar-first");

  m.def("f_value", [](const HolomorphicFrame& f, Complex z, int i, int j,
                      const std::string& path) {
    const nc::Expr& e = nc::f_expr(i, j, nc_path(path));
    const auto [a, b] = nc::max_orders(e);
    return nc::evaluate(e, projection_jet(f, z, a, b));
  }, py::arg("frame"), py::arg("z"), py::arg("i"), py::arg("j"),
     py::arg("path") = "zbar-first");

  m.def("curvature_formula_residual", [](const HolomorphicFrame& f, Complex z, int i, int j,
                                          const std::string& path) {
    return nc::curvature_formula_residual(f, z, i, j, nc_path(path));
  }, py::arg("frame"), py::arg("z"), py::arg("i"), py::arg("j"),
     py::arg("path") = "zbar-first");

  m.def("contact_compare", [](const HolomorphicFrame& p, const HolomorphicFrame& q, Complex z,
                              int order, const std::string& method, int word_len,
                              bool unitary_search, std::uint64_t seed) {
    CompareOptions opts;
    opts.word_len = word_len;
    opts.unitary_search = unitary_search;
    opts.seed = seed;
    if (method == "contact") return verdict_dict(contact_compare(p, q, z, order, opts));
    if (method == "theorem29") return verdict_dict(theorem29_compare(p, q, z, order, opts));
    throw InputError("method must be contact or theorem29, got " + method);
  }, py::arg("p"), py::arg("q"), py::arg("z"), py::arg("order") = 2,
     py::arg("method") = "contact", py::arg("word_len") = 4, py::arg("unitary_search") = true,
     py::arg("seed") = 0x5eed);

  m.def("kwon_treil_scan", [](const HolomorphicFrame& f, double radius, double step,
                              double multiplier) {
    const KTScan s = kwon_treil_scan(f, radius, step, multiplier);
    py::dict d;
    std::vector<Complex> z;
    std::vector<double> g;
    for (const KTPoint& p : s.points) {
      z.push_back(p.z);
      g.push_back(p.g);
    }
    d["z"] = z;
    d["g"] = g;
    d["max_g"] = s.max_g;
    d["min_g"] = s.min_g;
    d["max_abs_g"] = s.max_abs_g;
    return d;
  }, py::arg("frame"), py::arg("radius") = 0.6, py::arg("step") = 0.05,
     py::arg("multiplier") = 1.0);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run a command line in-process; returns (exit_code, stdout, stderr).");
}
