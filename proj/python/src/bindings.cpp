#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lieball/acceptance.hpp"
#include "lieball/classify.hpp"
#include "lieball/error.hpp"
#include "lieball/groups.hpp"
#include "lieball/hforms.hpp"
#include "lieball/jets.hpp"
#include "lieball/json_io.hpp"
#include "lieball/linalg.hpp"
#include "lieball/maps.hpp"
#include "lieball/metrics.hpp"
#include "lieball/version.hpp"

namespace py = pybind11;
using namespace lieball;

namespace {

// Reports cross the boundary as JSON text and are decoded on the Python side.
std::string dump(const Json& j) { return j.dump(); }

HoloMap load_map(const std::string& key) {
  if (key.rfind("heis-", 0) == 0) return jet_catalog_build(key);
  return catalog_build(key);
}

DomainSpec domain_of(const std::string& kind, int n, int l, int m) {
  Json j{{"kind", kind}, {"n", n}, {"l", l}, {"m", m}};
  return domain_from_json(j);
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Holomorphic isometries from the unit ball into type IV domains";
  mod.attr("__version__") = std::string(kVersion);

  static py::handle error_type = py::exception<Error>(mod, "LieballError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<DomainSpec>(mod, "Domain")
      .def_static("unit_ball", &DomainSpec::unit_ball, py::arg("n"))
      .def_static("generalized_ball", &DomainSpec::generalized_ball, py::arg("n"), py::arg("l"))
      .def_static("type_iv", &DomainSpec::type_iv, py::arg("m"))
      .def_static("heisenberg", &DomainSpec::heisenberg, py::arg("n"))
      .def_static("heisenberg_sig1", &DomainSpec::heisenberg_sig1, py::arg("N"))
      .def_property_readonly("dimension", &DomainSpec::dimension)
      .def("__eq__", [](const DomainSpec& a, const DomainSpec& b) { return a == b; })
      .def("__repr__", &DomainSpec::to_string);

  mod.def("domain", &domain_of, py::arg("kind"), py::arg("n") = 0, py::arg("l") = 0, py::arg("m") = 0);
  mod.def("defining_values", &defining_values, py::arg("domain"), py::arg("point"));
  mod.def(
      "classify_point",
      [](const DomainSpec& d, const Point& p, double tol) { return std::string(to_string(classify_point(d, p, tol).tag)); },
      py::arg("domain"), py::arg("point"), py::arg("tol") = kDefaultTol);
  mod.def("cayley", [](const DomainSpec& d, const Point& p) { return cayley(d, p); }, py::arg("heisenberg"), py::arg("point"));

  mod.def(
      "takagi",
      [](const ComplexMatrix& s, double tol) {
        auto r = takagi(s, tol);
        return py::make_tuple(r.v, r.lambdas);
      },
      py::arg("s"), py::arg("tol") = kDefaultTol);

  mod.def("catalog_families", &catalog_families);
  mod.def("catalog_eval", [](const std::string& key, const Point& z) { return eval(load_map(key), z); },
          py::arg("key"), py::arg("z"));
  mod.def("jacobian", [](const std::string& key, const Point& z) { return jacobian(load_map(key), z); },
          py::arg("key"), py::arg("z"));
  mod.def("kernel_identity_residual",
          [](const std::string& key, const Point& z, int p) { return kernel_identity_residual(load_map(key), z, p); },
          py::arg("key"), py::arg("z"), py::arg("p") = 1);

  mod.def("metric_matrix", [](const DomainSpec& d, const Point& z) { return metric_matrix(d, z).g; },
          py::arg("domain"), py::arg("z"));
  mod.def("pullback_metric", [](const std::string& key, const Point& z) { return pullback_metric(load_map(key), z).g; },
          py::arg("key"), py::arg("z"));
  mod.def("expected_lambda", &expected_lambda, py::arg("n"), py::arg("m"));
  mod.def(
      "_isometry_check",
      [](const std::string& key, double lambda, int samples, std::uint64_t seed, double tol, double radius) {
        IsometryOptions opt{samples, seed, tol, radius};
        return dump(to_json(isometry_check(load_map(key), lambda, opt)));
      },
      py::arg("key"), py::arg("lam"), py::arg("samples"), py::arg("seed"), py::arg("tol"), py::arg("radius"));
  mod.def(
      "_proper_check",
      [](const std::string& key, int samples, std::uint64_t seed, double tol) {
        return dump(to_json(proper_check(load_map(key), ProperOptions{samples, seed, tol})));
      },
      py::arg("key"), py::arg("samples"), py::arg("seed"), py::arg("tol"));

  mod.def(
      "apply",
      [](const DomainSpec& d, const ComplexMatrix& m, const Point& p) {
        return apply_automorphism(Automorphism::for_domain(d, m), p);
      },
      py::arg("domain"), py::arg("matrix"), py::arg("point"));
  mod.def("lift", [](const Point& z) { return lift(z).lift; }, py::arg("z"));
  mod.def("ball_aut_to_origin", [](const Point& p) { return ball_aut_to_origin(p).matrix(); }, py::arg("p"));
  mod.def("typeiv_aut_to_origin", [](const Point& p) { return typeiv_aut_to_origin(p).matrix(); }, py::arg("p"));
  mod.def(
      "is_member",
      [](const DomainSpec& d, const ComplexMatrix& m, double tol) {
        try {
          Automorphism::for_domain(d, m, tol);
          return true;
        } catch (const Error& e) {
          if (e.code() == ErrorCode::InvalidElement) return false;
          throw;
        }
      },
      py::arg("domain"), py::arg("matrix"), py::arg("tol") = 1e-10);

  mod.def(
      "power_signature",
      [](int n, int p) {
        auto s = power_signature(n, p);
        return py::make_tuple(s.positives, s.negatives, s.zeros);
      },
      py::arg("n"), py::arg("p"));
  mod.def(
      "kernel_signature",
      [](const std::string& key) {
        auto s = signature(form_from_map(load_map(key), FormMode::TypeIVKernel));
        return py::make_tuple(s.positives, s.negatives, s.zeros);
      },
      py::arg("key"));

  mod.def("canonical_unitary", &canonical_unitary, py::arg("n"), py::arg("theta"));
  mod.def("_normalize_unitary", [](const ComplexMatrix& u) { return dump(to_json(normalize_unitary(u))); },
          py::arg("u"));
  mod.def("_classify", [](const std::string& key) { return dump(to_json(classify_map(load_map(key)))); },
          py::arg("key"));
  mod.def(
      "equivalence_witness",
      [](int n, double theta) {
        auto w = equivalence_witness(n, theta);
        return py::make_tuple(w.b, w.t);
      },
      py::arg("n"), py::arg("theta"));

  mod.def("_mapping_residual",
          [](const std::string& key, int order) {
            const auto f = load_map(key);
            return dump(to_json(mapping_residual(f, order), f.source.n));
          },
          py::arg("key"), py::arg("order") = 8);
  mod.def("_normal_form",
          [](const std::string& key, int order) {
            const auto f = load_map(key);
            return dump(to_json(normal_form_check(f, order), f.source.n));
          },
          py::arg("key"), py::arg("order") = 8);

  mod.def(
      "run_acceptance",
      [](std::uint64_t seed) {
        py::list out;
        for (const auto& r : run_acceptance(AcceptanceConfig{seed})) {
          py::dict d;
          d["id"] = r.id;
          d["name"] = r.name;
          d["pass"] = r.pass;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = 0);
}
