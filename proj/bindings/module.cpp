// pybind11 bindings. Rationals cross the boundary as exact "num/den"
// strings; structured data crosses as JSON strings so the Python side can
// hand them to json.loads or fractions.Fraction without float loss.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "hh/cyclotomic.hpp"
#include "hh/depth.hpp"
#include "hh/errors.hpp"
#include "hh/json_io.hpp"
#include "hh/verify.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

hh::ExtensionSpec spec_from_text(const std::string& text) {
  try {
    return hh::spec_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    throw hh::ParseError(std::string("invalid JSON: ") + e.what());
  }
}

py::list intervals_to_py(const std::vector<hh::Interval>& intervals) {
  py::list out;
  for (const auto& iv : intervals) {
    py::object hi = iv.hi.has_value() ? py::cast(hh::to_string(*iv.hi))
                                      : py::object(py::none());
    out.append(py::make_tuple(hh::to_string(iv.lo), hi));
  }
  return out;
}

py::dict report_to_py(const hh::DepthReport& report) {
  py::dict d;
  d["character_depth"] = hh::to_string(report.character_depth);
  d["parameter_depth"] = hh::to_string(report.parameter_depth);
  d["preserved"] = report.preserved;
  d["gap"] = hh::to_string(report.gap);
  return d;
}

}  // namespace

PYBIND11_MODULE(_hherbrand, m) {
  m.doc() =
      "Exact Hasse-Herbrand functions and depth transport for local-field "
      "extensions";

  py::register_exception<hh::ParseError>(m, "SpecParseError",
                                         PyExc_ValueError);
  py::register_exception<hh::DomainError>(m, "SpecDomainError",
                                          PyExc_ValueError);

  py::class_<hh::PwlFunction>(m, "PwlFunction")
      .def_static("identity", &hh::PwlFunction::identity)
      .def_static(
          "from_json",
          [](const std::string& text) {
            try {
              return hh::pwl_from_json(json::parse(text));
            } catch (const json::parse_error& e) {
              throw hh::ParseError(std::string("invalid JSON: ") + e.what());
            }
          },
          py::arg("text"))
      .def("to_json",
           [](const hh::PwlFunction& f) { return hh::pwl_to_json(f).dump(); })
      .def(
          "evaluate",
          [](const hh::PwlFunction& f, const std::string& x) {
            return hh::to_string(f(hh::parse_rational(x)));
          },
          py::arg("x"))
      .def("inverse", &hh::PwlFunction::inverse)
      .def("compose",
           [](const hh::PwlFunction& f, const hh::PwlFunction& g) {
             return hh::compose(f, g);
           })
      .def("vertices",
           [](const hh::PwlFunction& f) {
             py::list out;
             for (const auto& v : f.vertices()) {
               out.append(py::make_tuple(hh::to_string(v.x),
                                         hh::to_string(v.y)));
             }
             return out;
           })
      .def("final_slope",
           [](const hh::PwlFunction& f) {
             return hh::to_string(f.final_slope());
           })
      .def("is_concave", &hh::PwlFunction::is_concave)
      .def("__eq__", [](const hh::PwlFunction& a, const hh::PwlFunction& b) {
        return a == b;
      });

  m.def(
      "resolve_phi",
      [](const std::string& spec) { return hh::resolve_phi(spec_from_text(spec)); },
      py::arg("spec_json"));

  m.def(
      "ramification_index",
      [](const std::string& spec) {
        return hh::ramification_index(spec_from_text(spec)).str();
      },
      py::arg("spec_json"));

  m.def(
      "transport_upper_index",
      [](const std::string& r, const std::string& spec) {
        return hh::to_string(
            hh::transport_upper_index(hh::parse_rational(r),
                                      spec_from_text(spec)));
      },
      py::arg("r"), py::arg("base_spec_json"));

  m.def(
      "cyclotomic_filtration",
      [](long long p, int n) {
        const auto filt =
            hh::cyclotomic_filtration(hh::CyclotomicParams{hh::Int(p), n});
        py::list out;
        for (const auto& j : filt.jumps) {
          out.append(py::make_tuple(j.u.str(), j.order.str()));
        }
        return out;
      },
      py::arg("p"), py::arg("n"));

  m.def(
      "phi_cyclotomic_over_K",
      [](long long p, int n) {
        return hh::phi_cyclotomic_over_K(hh::CyclotomicParams{hh::Int(p), n});
      },
      py::arg("p"), py::arg("n"));

  m.def(
      "phi_cyclotomic_over_F",
      [](long long p, int n) {
        return hh::phi_cyclotomic_over_F_closed_form(
            hh::CyclotomicParams{hh::Int(p), n});
      },
      py::arg("p"), py::arg("n"));

  m.def(
      "parameter_depth",
      [](const std::string& spec, const std::string& depth) {
        return hh::to_string(hh::parameter_depth(spec_from_text(spec),
                                                 hh::parse_rational(depth)));
      },
      py::arg("spec_json"), py::arg("character_depth"));

  m.def(
      "character_depth_from_parameter",
      [](const std::string& spec, const std::string& depth) {
        return hh::to_string(hh::character_depth_from_parameter(
            spec_from_text(spec), hh::parse_rational(depth)));
      },
      py::arg("spec_json"), py::arg("parameter_depth"));

  m.def(
      "depth_shapiro",
      [](const std::string& spec, const std::string& depth) {
        return hh::to_string(hh::depth_shapiro(spec_from_text(spec),
                                               hh::parse_rational(depth)));
      },
      py::arg("base_spec_json"), py::arg("dep_h"));

  m.def(
      "depth_report",
      [](const std::string& spec, const std::string& depth) {
        return report_to_py(hh::depth_report(spec_from_text(spec),
                                             hh::parse_rational(depth)));
      },
      py::arg("spec_json"), py::arg("character_depth"));

  m.def(
      "inflation_locus",
      [](const std::string& spec) {
        return intervals_to_py(hh::inflation_locus(spec_from_text(spec)));
      },
      py::arg("spec_json"));

  m.def(
      "induced_torus_depth",
      [](const std::vector<std::string>& factor_specs,
         const std::vector<std::string>& depths) {
        hh::InducedTorusSpec torus;
        for (const auto& s : factor_specs) {
          torus.factors.push_back({spec_from_text(s), ""});
        }
        std::vector<hh::Rat> rats;
        for (const auto& d : depths) rats.push_back(hh::parse_rational(d));
        return report_to_py(hh::induced_torus_depth(torus, rats));
      },
      py::arg("factor_specs"), py::arg("factor_depths"));

  m.def(
      "verify",
      [](const std::string& scope, std::uint64_t seed, int cases) {
        py::list out;
        for (const auto& r : hh::verify::run(scope, seed, cases)) {
          py::dict d;
          d["property"] = r.name;
          d["cases"] = r.cases;
          d["passed"] = r.passed;
          if (!r.passed) d["counterexample"] = r.counterexample;
          out.append(d);
        }
        return out;
      },
      py::arg("scope") = "all", py::arg("seed") = 0, py::arg("cases") = 200);
}
