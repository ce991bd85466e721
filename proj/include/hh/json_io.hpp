#pragma once

#include <nlohmann/json.hpp>

#include "hh/depth.hpp"
#include "hh/pwl.hpp"
#include "hh/ramification.hpp"

namespace hh {

// JSON schemas (rationals serialized exactly as "num/den" strings, plain
// integers without "/1"):
//
//   PwlFunction   {"vertices": [["0","0"],["2","1"]], "final_slope": "1/6"}
//   ExtensionSpec {"kind":"filtration","jumps":[[0,6],[1,3],[3,1]]}
//                 {"kind":"tame","e":4}
//                 {"kind":"unramified"}
//                 {"kind":"cyclotomic","p":3,"n":2,"base":"Qp"}
//                 {"kind":"tower","steps":[ <spec>, ... ]}
//   DepthReport   {"character_depth":"1","parameter_depth":"7/3",
//                  "preserved":false,"gap":"4/3"}
//
// The cyclotomic "base" field is optional on input (default "Qp"; the
// alternative is "Qp(zeta_p)"). Parsing failures throw ParseError.

nlohmann::json pwl_to_json(const PwlFunction& f);
PwlFunction pwl_from_json(const nlohmann::json& j);

nlohmann::json spec_to_json(const ExtensionSpec& spec);
ExtensionSpec spec_from_json(const nlohmann::json& j);

nlohmann::json depth_report_to_json(const DepthReport& report);

// [["0","4/3"]], unbounded upper endpoints serialized as "inf".
nlohmann::json intervals_to_json(const std::vector<Interval>& intervals);

nlohmann::json int_to_json(const Int& value);
Int int_from_json(const nlohmann::json& j);

Rat rat_from_json(const nlohmann::json& j);

}  // namespace hh
