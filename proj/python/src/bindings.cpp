#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinlie/clifford.hpp"
#include "spinlie/diracrep.hpp"
#include "spinlie/dispatch.hpp"
#include "spinlie/errors.hpp"
#include "spinlie/scene.hpp"
#include "spinlie/symexpr.hpp"
#include "spinlie/verify.hpp"

namespace py = pybind11;
using namespace spinlie;

namespace {

Multivector from_dict(const std::map<std::string, double>& d) {
  Multivector m;
  for (const auto& [k, v] : d) m.mutable_components()[parse_blade_key(k)] += v;
  return Multivector(m.components());  // rejects non-finite input
}

py::dict to_dict(const Multivector& m) {
  py::dict d;
  for (BladeMask b : blades_by_grade())
    if (m[b] != 0.0) d[py::str(blade_key(b))] = m[b];
  return d;
}

std::vector<std::vector<double>> rows(const Mat4& M) {
  std::vector<std::vector<double>> r(4, std::vector<double>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = M(i, j);
  return r;
}

std::vector<std::vector<std::complex<double>>> rows(const Mat4c& M) {
  std::vector<std::vector<std::complex<double>>> r(4, std::vector<std::complex<double>>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = M(i, j);
  return r;
}

}  // namespace

PYBIND11_MODULE(_spinlie, m) {
  m.doc() = "spinor Lie derivatives on Lorentzian tetrads";
  m.attr("__version__") = kToolVersion;

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto input = py::register_exception<InputError>(m, "InputError", error.ptr());
  auto math = py::register_exception<MathError>(m, "MathError", error.ptr());
  py::register_exception<SyntaxError>(m, "SyntaxError", input.ptr());
  py::register_exception<UnknownIdentifier>(m, "UnknownIdentifier", input.ptr());
  py::register_exception<SceneError>(m, "SceneError", input.ptr());
  py::register_exception<DomainError>(m, "DomainError", math.ptr());
  py::register_exception<SingularMetric>(m, "SingularMetric", math.ptr());
  py::register_exception<SignatureError>(m, "SignatureError", math.ptr());
  py::register_exception<TetradMismatch>(m, "TetradMismatch", math.ptr());
  py::register_exception<SingularSpinor>(m, "SingularSpinor", math.ptr());
  py::register_exception<KillingViolation>(m, "KillingViolation", math.ptr());
  py::register_exception<FlowEscape>(m, "FlowEscape", math.ptr());

  py::class_<Multivector>(m, "Multivector")
      .def(py::init<>())
      .def(py::init(&from_dict), py::arg("components"))
      .def_static("scalar", &Multivector::scalar)
      .def_static("basis", &Multivector::basis, py::arg("a"))
      .def_static("blade", [](const std::string& key, double c) { return Multivector::blade(parse_blade_key(key), c); },
                  py::arg("key"), py::arg("coeff") = 1.0)
      .def("__getitem__", [](const Multivector& v, const std::string& key) { return v[parse_blade_key(key)]; })
      .def("components", &to_dict)
      .def("to_list", [](const Multivector& v) { return std::vector<double>(v.components().begin(), v.components().end()); })
      .def("grade", [](const Multivector& v, int k) { return grade(v, k); })
      .def("reversion", [](const Multivector& v) { return reversion(v); })
      .def("is_even", &Multivector::is_even, py::arg("tol") = 0.0)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * double())
      .def(double() * py::self)
      .def(py::self / double())
      .def(-py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const Multivector& v) { return "Multivector(" + to_string(v) + ")"; })
      .def("__str__", [](const Multivector& v) { return to_string(v); });

  m.def("wedge", &wedge);
  m.def("left_contraction", &left_contraction);
  m.def("scalar_product", &scalar_product);
  m.def("commutator", &commutator);
  m.def("max_norm", &max_norm);
  m.def("exp_bivector", &exp_bivector, py::arg("F"), py::arg("tol") = 1e-15);

  py::class_<PolarForm>(m, "PolarForm")
      .def_readonly("rho", &PolarForm::rho)
      .def_readonly("beta", &PolarForm::beta)
      .def_readonly("rotor", &PolarForm::rotor);
  m.def("polar_decompose", &polar_decompose, py::arg("psi"), py::arg("zero_tol") = 1e-14);
  m.def("polar_reconstruct", &polar_reconstruct);

  m.def("represent", [](const Multivector& v) { return rows(represent(v)); });
  m.def("gamma_matrices", [] {
    std::vector<decltype(rows(Mat4c()))> out;
    for (const auto& g : gamma_matrices()) out.push_back(rows(g));
    return out;
  });

  py::class_<ScalarExpr>(m, "Expression")
      .def("eval", &ScalarExpr::eval, py::arg("point"))
      .def("jet",
           [](const ScalarExpr& e, const Point& p) {
             const Jet2 j = e.eval_jet(p);
             std::vector<std::vector<double>> h(4, std::vector<double>(4));
             for (int a = 0; a < 4; ++a)
               for (int b = 0; b < 4; ++b) h[a][b] = j.hess(a, b);
             return py::make_tuple(j.value, std::vector<double>(j.grad.begin(), j.grad.end()), h);
           },
           py::arg("point"))
      .def("__str__", &ScalarExpr::to_string)
      .def("__repr__", [](const ScalarExpr& e) { return "Expression(" + e.to_string() + ")"; });
  m.def("parse_expression",
        [](const std::string& src, const CoordinateNames& names) { return parse(src, names); }, py::arg("source"),
        py::arg("coordinates") = CoordinateNames{"t", "x", "y", "z"});

  py::class_<Scene>(m, "Scene")
      .def_readonly("name", &Scene::name)
      .def_readonly("seed", &Scene::seed)
      .def_readonly("count", &Scene::count)
      .def_property_readonly("coordinates", [](const Scene& s) { return s.geometry.chart().names; })
      .def_property_readonly("vectors", [](const Scene& s) {
        std::vector<std::string> r;
        for (const auto& [k, v] : s.vectors) r.push_back(k);
        return r;
      })
      .def_property_readonly("fields", [](const Scene& s) {
        std::vector<std::string> r;
        for (const auto& [k, v] : s.fields) r.push_back(k);
        return r;
      })
      .def_property_readonly("box", [](const Scene& s) {
        std::vector<std::pair<double, double>> r;
        for (const auto& iv : s.box) r.emplace_back(iv.lo, iv.hi);
        return r;
      })
      .def("metric_at", [](const Scene& s, const Point& p) { return rows(s.geometry.at(p).g); }, py::arg("point"))
      .def("tetrad_at", [](const Scene& s, const Point& p) { return rows(s.geometry.at(p).h); }, py::arg("point"))
      .def("__repr__", [](const Scene& s) { return "Scene(" + s.name + ")"; });
  m.def("load_scene", &load_scene, py::arg("path"));
  m.def("parse_scene", &parse_scene, py::arg("text"), py::arg("name") = "scene");

  m.def(
      "lie",
      [](const Scene& s, const std::string& xi, const std::string& target, const Point& p,
         const std::string& mode) -> py::object {
        const LieMode lm = parse_lie_mode(mode);
        if (lm != LieMode::Dirac) return py::cast(lie_at(s, xi, target, p, lm));
        std::vector<std::vector<std::complex<double>>> cols;
        for (const Col4& c : dirac_lie_at(s, xi, target, p)) cols.push_back({c(0), c(1), c(2), c(3)});
        return py::cast(cols);
      },
      py::arg("scene"), py::arg("xi"), py::arg("target"), py::arg("point"), py::arg("mode") = "spinor");

  m.def(
      "lift",
      [](const Scene& s, const std::string& xi, const Point& p, double t) {
        const LiftResult r = lift_at(s, xi, p, t);
        py::dict d;
        d["u"] = r.u;
        d["checked_frame"] = std::vector<Multivector>(r.checked_frame.begin(), r.checked_frame.end());
        d["gram_residual"] = r.gram_residual;
        d["lambda"] = rows(r.lambda);
        return d;
      },
      py::arg("scene"), py::arg("xi"), py::arg("point"), py::arg("t"));

  m.def(
      "verify_json",
      [](const Scene& s, std::optional<std::uint64_t> seed, std::optional<int> samples, std::optional<double> tol,
         unsigned threads) {
        VerifyOptions o;
        o.seed = seed;
        o.samples = samples;
        o.tol = tol;
        o.threads = threads;
        Report r;
        {
          py::gil_scoped_release release;
          r = verify_scene(s, o);
        }
        return report_json(r);
      },
      py::arg("scene"), py::arg("seed") = py::none(), py::arg("samples") = py::none(), py::arg("tol") = py::none(),
      py::arg("threads") = 0);
}
