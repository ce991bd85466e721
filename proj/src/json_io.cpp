#include "hh/json_io.hpp"

#include <cstdint>
#include <limits>

#include "hh/errors.hpp"

namespace hh {

using nlohmann::json;

json int_to_json(const Int& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("invalid integer: " + j.dump());
    }
  }
  throw ParseError("expected integer, got " + j.dump());
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected rational string, got " + j.dump());
}

json pwl_to_json(const PwlFunction& f) {
  json verts = json::array();
  for (const auto& v : f.vertices()) {
    verts.push_back({to_string(v.x), to_string(v.y)});
  }
  return json{{"vertices", verts}, {"final_slope", to_string(f.final_slope())}};
}

PwlFunction pwl_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("final_slope")) {
    throw ParseError("piecewise function needs 'vertices' and 'final_slope'");
  }
  std::vector<PwlFunction::Vertex> verts;
  for (const auto& entry : j.at("vertices")) {
    if (!entry.is_array() || entry.size() != 2) {
      throw ParseError("vertex must be a pair: " + entry.dump());
    }
    verts.push_back({rat_from_json(entry[0]), rat_from_json(entry[1])});
  }
  try {
    return PwlFunction(std::move(verts), rat_from_json(j.at("final_slope")));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid piecewise function: ") + e.what());
  }
}

namespace {

struct SpecToJson {
  json operator()(const RamificationFiltration& f) const {
    json jumps = json::array();
    for (const auto& jump : f.jumps) {
      jumps.push_back({int_to_json(jump.u), int_to_json(jump.order)});
    }
    return json{{"kind", "filtration"}, {"jumps", jumps}};
  }
  json operator()(const TameSpec& t) const {
    return json{{"kind", "tame"}, {"e", int_to_json(t.e)}};
  }
  json operator()(const UnramifiedSpec&) const {
    return json{{"kind", "unramified"}};
  }
  json operator()(const CyclotomicSpec& c) const {
    return json{{"kind", "cyclotomic"},
                {"p", int_to_json(c.p)},
                {"n", c.n},
                {"base", c.base == CyclotomicBase::Qp ? "Qp" : "Qp(zeta_p)"}};
  }
  json operator()(const TowerSpec& t) const {
    json steps = json::array();
    for (const auto& s : t.steps) steps.push_back(spec_to_json(s));
    return json{{"kind", "tower"}, {"steps", steps}};
  }
};

}  // namespace

json spec_to_json(const ExtensionSpec& spec) {
  return std::visit(SpecToJson{}, spec.value);
}

ExtensionSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ParseError("extension spec needs a 'kind' field");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "filtration") {
    RamificationFiltration filt;
    if (!j.contains("jumps") || !j.at("jumps").is_array()) {
      throw ParseError("filtration needs a 'jumps' array");
    }
    for (const auto& entry : j.at("jumps")) {
      if (!entry.is_array() || entry.size() != 2) {
        throw ParseError("jump must be a [u, order] pair: " + entry.dump());
      }
      filt.jumps.push_back({int_from_json(entry[0]), int_from_json(entry[1])});
    }
    return ExtensionSpec{filt};
  }
  if (kind == "tame") {
    if (!j.contains("e")) throw ParseError("tame spec needs 'e'");
    return ExtensionSpec{TameSpec{int_from_json(j.at("e"))}};
  }
  if (kind == "unramified") {
    return ExtensionSpec{UnramifiedSpec{}};
  }
  if (kind == "cyclotomic") {
    if (!j.contains("p") || !j.contains("n")) {
      throw ParseError("cyclotomic spec needs 'p' and 'n'");
    }
    CyclotomicSpec c;
    c.p = int_from_json(j.at("p"));
    const Int n = int_from_json(j.at("n"));
    if (n < 1 || n > 1000000) throw ParseError("cyclotomic 'n' out of range");
    c.n = n.convert_to<int>();
    if (j.contains("base")) {
      const std::string base = j.at("base").get<std::string>();
      if (base == "Qp") {
        c.base = CyclotomicBase::Qp;
      } else if (base == "Qp(zeta_p)") {
        c.base = CyclotomicBase::QpZetaP;
      } else {
        throw ParseError("unknown cyclotomic base: '" + base + "'");
      }
    }
    return ExtensionSpec{c};
  }
  if (kind == "tower") {
    if (!j.contains("steps") || !j.at("steps").is_array()) {
      throw ParseError("tower needs a 'steps' array");
    }
    TowerSpec t;
    for (const auto& step : j.at("steps")) t.steps.push_back(spec_from_json(step));
    return ExtensionSpec{t};
  }
  throw ParseError("unknown extension kind: '" + kind + "'");
}

json depth_report_to_json(const DepthReport& report) {
  return json{{"character_depth", to_string(report.character_depth)},
              {"parameter_depth", to_string(report.parameter_depth)},
              {"preserved", report.preserved},
              {"gap", to_string(report.gap)}};
}

json intervals_to_json(const std::vector<Interval>& intervals) {
  json out = json::array();
  for (const auto& iv : intervals) {
    out.push_back({to_string(iv.lo),
                   iv.hi.has_value() ? to_string(*iv.hi) : std::string("inf")});
  }
  return out;
}

}  // namespace hh
