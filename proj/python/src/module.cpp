#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hessjac/bench.hpp"
#include "hessjac/oracles.hpp"

namespace py = pybind11;
using namespace hessjac;

namespace {

// pybind11 holders cannot be shared_ptr<const T>; the library never mutates
// fields or places after construction, so Python sees non-const handles.
using PyField = std::shared_ptr<FunctionField>;
using PyPlace = std::shared_ptr<Place>;

PyField mut(const FieldPtr& f) { return std::const_pointer_cast<FunctionField>(f); }
PyPlace mut(const PlacePtr& p) { return std::const_pointer_cast<Place>(p); }

std::vector<PyPlace> mut(const std::vector<PlacePtr>& v) {
  std::vector<PyPlace> out;
  for (const auto& p : v) out.push_back(mut(p));
  return out;
}

PyField make_field(u32 p, const std::vector<std::vector<i64>>& coeffs) {
  std::vector<Poly> a;
  for (const auto& c : coeffs) a.push_back(Poly::from_ints(p, c));
  return mut(FunctionField::make(p, std::move(a)));
}

std::vector<std::vector<i64>> coeff_lists(const FunctionField& f) {
  std::vector<std::vector<i64>> out;
  for (const auto& a : f.coeffs()) {
    std::vector<i64> v;
    for (int i = 0; i <= a.deg(); ++i) v.push_back(a[i]);
    out.push_back(std::move(v));
  }
  return out;
}

py::dict counters_dict(const OpCounters& c) {
  py::dict d;
  d["ssrr_calls"] = c.ssrr_calls;
  d["partial_additions"] = c.partial_additions;
  d["infinite_cache_hits"] = c.infinite_cache_hits;
  d["infinite_cache_misses"] = c.infinite_cache_misses;
  d["ssrr_cache_hits"] = c.ssrr_cache_hits;
  d["ssrr_cache_misses"] = c.ssrr_cache_misses;
  return d;
}

Strategy parse_strategy(const std::string& s) {
  if (s == "linear") return Strategy::Linear;
  if (s == "binary") return Strategy::Binary;
  throw py::value_error("strategy must be 'linear' or 'binary'");
}

py::tuple generated(const GeneratedField& g) {
  return py::make_tuple(mut(g.field), py::module_::import("json").attr("loads")(g.metadata_json()));
}

}  // namespace

PYBIND11_MODULE(_hessjac, m) {
  m.doc() = "Jacobian arithmetic of global function fields with Hess-reduced divisors";
  m.attr("__version__") = HESSJAC_VERSION;

  py::register_exception<Error>(m, "HessjacError", PyExc_RuntimeError);

  py::class_<Place, PyPlace>(m, "Place")
      .def_property_readonly("key", &Place::key)
      .def_property_readonly("degree", &Place::degree)
      .def_property_readonly("ramification", &Place::ramification)
      .def_property_readonly("inertia", &Place::inertia)
      .def_property_readonly("is_infinite", [](const Place& p) { return p.side() == Side::Infinite; })
      .def("__repr__", [](const Place& p) { return "<Place " + p.key() + ">"; });

  py::class_<FunctionField, PyField>(m, "FunctionField")
      .def(py::init(&make_field), py::arg("p"), py::arg("coeffs"),
           "t^n + a_{n-1} t^{n-1} + ... + a_0 with a_i given as coefficient lists, lowest degree first")
      .def_static("load", [](const std::string& path) { return mut(FunctionField::load(path)); })
      .def_static("from_json", [](const std::string& text) { return mut(FunctionField::from_json(text)); })
      .def("to_json", &FunctionField::to_json, py::arg("metadata_json") = "")
      .def("save", &FunctionField::save, py::arg("path"), py::arg("metadata_json") = "")
      .def_property_readonly("p", &FunctionField::p)
      .def_property_readonly("n", &FunctionField::n)
      .def_property_readonly("cf", &FunctionField::cf)
      .def_property_readonly("coeffs", [](const FunctionField& f) { return coeff_lists(f); })
      .def("genus", &FunctionField::genus)
      .def("genus_bound", &FunctionField::genus_bound)
      .def("infinite_places", [](const FunctionField& f) { return mut(f.infinite_places()); })
      .def(
          "places_above", [](const FunctionField& f, const std::vector<i64>& q) {
            return mut(f.places_above(Poly::from_ints(f.p(), q)));
          },
          py::arg("prime"))
      .def("__repr__", [](const FunctionField& f) { return "<FunctionField " + f.defpoly_str() + " over F_" + std::to_string(f.p()) + ">"; });

  py::class_<Divisor>(m, "Divisor")
      .def(py::init([](PyField f) { return Divisor(std::move(f)); }))
      .def_static(
          "of_place", [](PyField f, PyPlace p, int k) { return Divisor::of_place(f, p, k); }, py::arg("field"),
          py::arg("place"), py::arg("coefficient") = 1)
      .def_static("from_json", [](PyField f, const std::string& text) { return Divisor::from_json(f, text); })
      .def("to_json", &Divisor::to_json)
      .def_property_readonly("degree", &Divisor::degree)
      .def_property_readonly("height", &Divisor::height)
      .def("is_effective", &Divisor::is_effective)
      .def("coefficient", [](const Divisor& d, PyPlace p) { return d.coefficient(p); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &Divisor::str)
      .def("__repr__", [](const Divisor& d) { return "<Divisor " + d.str() + ">"; });

  py::class_<ReducedClassRep>(m, "ReducedClassRep")
      .def_readonly("r", &ReducedClassRep::r)
      .def("key", [](const ReducedClassRep& c) { return py::bytes(c.key()); })
      .def(py::self == py::self)
      .def("__hash__", [](const ReducedClassRep& c) { return py::hash(py::bytes(c.key())); });

  py::class_<JacobianCtx>(m, "Jacobian")
      .def(py::init([](PyField f, const std::string& strategy, bool caching, bool verify) {
             JacobianOptions o;
             o.strategy = parse_strategy(strategy);
             o.caching = caching;
             o.verify = verify;
             return std::make_unique<JacobianCtx>(std::move(f), o);
           }),
           py::arg("field"), py::arg("strategy") = "linear", py::arg("caching") = true, py::arg("verify") = false)
      .def_property_readonly("genus", &JacobianCtx::genus)
      .def_property_readonly("base_place", [](const JacobianCtx& c) { return mut(c.base_place()); })
      .def("reduce", &JacobianCtx::reduce)
      .def("zero", &JacobianCtx::zero)
      .def("add", &JacobianCtx::add)
      .def("neg", &JacobianCtx::neg)
      .def("scalar_mul", &JacobianCtx::scalar_mul, py::arg("k"), py::arg("c"))
      .def("dtilde", &JacobianCtx::dtilde)
      .def("divisor", &JacobianCtx::divisor)
      .def(
          "random_class", [](JacobianCtx& ctx, u64 seed) {
            Rng rng(seed);
            return ctx.random_class(rng);
          },
          py::arg("seed"))
      .def("counters", [](const JacobianCtx& ctx) { return counters_dict(ctx.counters()); })
      .def("reset_counters", &JacobianCtx::reset_counters)
      .def_property_readonly("infinite_cache_size", &JacobianCtx::infinite_cache_size)
      .def_property_readonly("ssrr_cache_size", &JacobianCtx::ssrr_cache_size);

  m.def("gen_tang", [](u32 p, int n, int cf, u64 seed) { return generated(gen_tang(p, n, cf, seed)); },
        py::arg("p"), py::arg("n"), py::arg("cf"), py::arg("seed"));
  m.def(
      "gen_adhoc",
      [](u32 p, int n, int cf_max, u64 seed, std::optional<int> genus) {
        return generated(gen_adhoc(p, n, cf_max, seed, genus));
      },
      py::arg("p"), py::arg("n"), py::arg("cf_max"), py::arg("seed"), py::arg("genus") = py::none());

  m.def("count_degree_one_places", [](PyField f, int m) { return count_degree_one_places(*f, m); });
  m.def("l_polynomial", [](PyField f) { return l_polynomial(*f); });
  m.def("jacobian_order", [](PyField f) { return jacobian_order(*f); });

  m.def(
      "run_chains",
      [](PyField f, const std::string& strategy, bool caching, int chains, int length, u64 seed) {
        ChainStats st;
        {
          py::gil_scoped_release release;
          st = run_chains(f, {parse_strategy(strategy), caching}, chains, length, seed);
        }
        py::dict d;
        d["cpu_ms"] = st.cpu_ms;
        d["additions"] = st.additions;
        d["counters"] = counters_dict(st.counters);
        d["infinite_cache_size"] = st.infinite_cache_size;
        d["ssrr_cache_size"] = st.ssrr_cache_size;
        py::list finals;
        for (const auto& k : st.finals) finals.append(py::bytes(k));
        d["finals"] = finals;
        return d;
      },
      py::arg("field"), py::arg("strategy") = "linear", py::arg("caching") = true, py::arg("chains") = 5,
      py::arg("length") = 1000, py::arg("seed") = 1);
}
