// Command-line front end for exact Hasse-Herbrand computations and depth
// transport reports.
//
// Exit codes: 0 success, 1 verification failure, 2 input parse error,
// 3 domain/usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hh/cyclotomic.hpp"
#include "hh/depth.hpp"
#include "hh/errors.hpp"
#include "hh/json_io.hpp"
#include "hh/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitDomainError = 3;

struct GlobalOptions {
  std::string format = "json";
  std::string output;  // empty -> stdout
  std::uint64_t seed = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hh::ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

hh::ExtensionSpec load_spec(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw hh::ParseError(std::string("invalid JSON in ") + path + ": " +
                         e.what());
  }
  return hh::spec_from_json(j);
}

std::vector<hh::Rat> parse_rationals(const std::vector<std::string>& strs) {
  std::vector<hh::Rat> out;
  out.reserve(strs.size());
  for (const auto& s : strs) out.push_back(hh::parse_rational(s));
  return out;
}

// CSV mirrors the JSON results field-by-field with identical rational
// strings; nested structures are flattened to key,value rows.
void write_csv(std::ostream& os, const json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      write_csv(os, value, prefix.empty() ? key : prefix + "." + key);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      write_csv(os, j[i], prefix + "[" + std::to_string(i) + "]");
    }
  } else if (j.is_string()) {
    os << prefix << "," << j.get<std::string>() << "\n";
  } else {
    os << prefix << "," << j.dump() << "\n";
  }
}

void emit(const GlobalOptions& opts, const json& record) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!opts.output.empty()) {
    file.open(opts.output);
    if (!file) throw hh::DomainError("cannot write to: " + opts.output);
    os = &file;
  }
  if (opts.format == "json") {
    *os << record.dump(2) << "\n";
  } else {
    write_csv(*os, record, "");
  }
}

int cmd_hh(const GlobalOptions& opts, const std::string& spec_file,
           const std::string& action, const std::vector<std::string>& points,
           const std::vector<std::string>& range) {
  const hh::ExtensionSpec spec = load_spec(spec_file);
  const hh::PwlFunction phi = hh::resolve_phi(spec);
  json record{{"command", "hh"},
              {"inputs", {{"spec", hh::spec_to_json(spec)}, {"action", action}}}};
  json results;
  if (action == "eval") {
    json values = json::array();
    for (const hh::Rat& x : parse_rationals(points)) {
      values.push_back(hh::to_string(phi(x)));
    }
    results["values"] = values;
  } else if (action == "breaks") {
    results["phi"] = hh::pwl_to_json(phi);
    if (const auto* filt =
            std::get_if<hh::RamificationFiltration>(&spec.value)) {
      json upper = json::array();
      for (const auto& [v, order] : hh::upper_breaks(*filt)) {
        upper.push_back({hh::to_string(v), hh::int_to_json(order)});
      }
      results["upper_breaks"] = upper;
    }
  } else if (action == "invert") {
    results["psi"] = hh::pwl_to_json(phi.inverse());
  } else if (action == "table") {
    if (range.size() != 3) {
      throw hh::DomainError("table action needs --range START STOP STEP");
    }
    const hh::Rat start = hh::parse_rational(range[0]);
    const hh::Rat stop = hh::parse_rational(range[1]);
    const hh::Rat step = hh::parse_rational(range[2]);
    if (start < 0 || step <= 0 || stop < start) {
      throw hh::DomainError("invalid table range");
    }
    json rows = json::array();
    for (hh::Rat x = start; x <= stop; x += step) {
      rows.push_back({hh::to_string(x), hh::to_string(phi(x))});
    }
    results["table"] = rows;
  } else {
    throw hh::DomainError("unknown action: '" + action + "'");
  }
  record["results"] = results;
  emit(opts, record);
  return 0;
}

int cmd_depth(const GlobalOptions& opts, const std::string& spec_file,
              const std::vector<std::string>& depth_strs, bool induced) {
  const std::vector<hh::Rat> depths = parse_rationals(depth_strs);
  json record{{"command", "depth"}};
  json results;
  if (induced) {
    // The file holds {"factors":[{"label":..., "spec": <spec>}, ...]} and
    // --depths supplies one depth per factor.
    json j;
    try {
      j = json::parse(read_file(spec_file));
    } catch (const json::parse_error& e) {
      throw hh::ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("factors") ||
        !j.at("factors").is_array() || j.at("factors").empty()) {
      throw hh::ParseError("induced torus file needs a nonempty 'factors' array");
    }
    hh::InducedTorusSpec torus;
    for (const auto& factor : j.at("factors")) {
      if (!factor.is_object() || !factor.contains("spec")) {
        throw hh::ParseError("each factor needs a 'spec'");
      }
      torus.factors.push_back(
          {hh::spec_from_json(factor.at("spec")),
           factor.value("label", std::string())});
    }
    record["inputs"] = {{"factors", j.at("factors")}, {"depths", depth_strs}};
    results["report"] =
        hh::depth_report_to_json(hh::induced_torus_depth(torus, depths));
  } else {
    const hh::ExtensionSpec spec = load_spec(spec_file);
    record["inputs"] = {{"spec", hh::spec_to_json(spec)},
                        {"depths", depth_strs}};
    json reports = json::array();
    for (const hh::Rat& d : depths) {
      reports.push_back(hh::depth_report_to_json(hh::depth_report(spec, d)));
    }
    results["reports"] = reports;
    results["inflation_locus"] =
        hh::intervals_to_json(hh::inflation_locus(spec));
  }
  record["results"] = results;
  emit(opts, record);
  return 0;
}

int cmd_cyclo(const GlobalOptions& opts, long long p, int n) {
  const hh::CyclotomicParams params{hh::Int(p), n};
  const hh::RamificationFiltration filt = hh::cyclotomic_filtration(params);
  json record{{"command", "cyclo"},
              {"inputs", {{"p", p}, {"n", n}}}};
  json results;
  results["filtration"] =
      hh::spec_to_json(hh::ExtensionSpec{filt}).at("jumps");
  json upper = json::array();
  for (const auto& [v, order] : hh::upper_breaks(filt)) {
    upper.push_back({hh::to_string(v), hh::int_to_json(order)});
  }
  results["upper_breaks"] = upper;
  results["phi_over_Qp"] = hh::pwl_to_json(hh::phi_cyclotomic_over_K(params));
  if (n >= 2) {
    results["phi_over_Qp_zeta_p"] =
        hh::pwl_to_json(hh::phi_cyclotomic_over_F_closed_form(params));
  }
  json samples = json::array();
  const hh::PwlFunction phi = hh::phi_cyclotomic_over_K(params);
  for (int r = 0; r <= 2 * n + 2; ++r) {
    samples.push_back({std::to_string(r), hh::to_string(phi(hh::Rat(r)))});
  }
  results["phi_over_Qp_samples"] = samples;
  record["results"] = results;
  emit(opts, record);
  return 0;
}

int cmd_verify(const GlobalOptions& opts, const std::string& scope, int cases,
               const std::string& fixture) {
  std::vector<hh::verify::PropertyResult> results;
  if (!fixture.empty()) {
    results.push_back(hh::verify::check_spec_json(read_file(fixture)));
  }
  const auto suite = hh::verify::run(scope, opts.seed, cases);
  results.insert(results.end(), suite.begin(), suite.end());
  bool all_passed = true;
  json entries = json::array();
  for (const auto& r : results) {
    json entry{{"property", r.name}, {"cases", r.cases}, {"passed", r.passed}};
    if (!r.passed) {
      entry["counterexample"] = r.counterexample;
      all_passed = false;
    }
    entries.push_back(entry);
  }
  const json record{{"command", "verify"},
                    {"inputs",
                     {{"scope", scope},
                      {"seed", opts.seed},
                      {"cases", cases}}},
                    {"results", {{"properties", entries},
                                 {"all_passed", all_passed}}}};
  emit(opts, record);
  return all_passed ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hasse-Herbrand functions and depth transport for "
               "local-field extensions"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--output", opts.output, "Write output to a file");
  app.add_option("--seed", opts.seed, "Seed for randomized verification")
      ->capture_default_str();

  std::string spec_file, action = "eval";
  std::vector<std::string> points, range;
  auto* hh_cmd = app.add_subcommand(
      "hh", "Evaluate or serialize the Hasse-Herbrand function of a spec");
  // Global flags may appear after any subcommand.
  hh_cmd->fallthrough();
  hh_cmd->add_option("spec", spec_file, "Extension spec JSON file")->required();
  hh_cmd->add_option("action", action, "eval | breaks | invert | table")
      ->check(CLI::IsMember({"eval", "breaks", "invert", "table"}));
  hh_cmd->add_option("--points", points,
                     "Rational points (a/b or integer) for eval");
  hh_cmd->add_option("--range", range, "START STOP STEP for table")
      ->expected(3);

  std::string depth_spec_file;
  std::vector<std::string> depth_strs;
  bool induced = false;
  auto* depth_cmd =
      app.add_subcommand("depth", "Depth transport reports under the LLC");
  depth_cmd->fallthrough();
  depth_cmd->add_option("spec", depth_spec_file, "Extension spec JSON file")
      ->required();
  depth_cmd->add_option("--depths", depth_strs, "Character depths")
      ->required();
  depth_cmd->add_flag("--induced", induced,
                      "Treat the file as an induced torus (factors array) "
                      "with one depth per factor");

  long long cyclo_p = 3;
  int cyclo_n = 2;
  auto* cyclo_cmd = app.add_subcommand(
      "cyclo", "Ramification table of Q_p(zeta_{p^n}) over Q_p");
  cyclo_cmd->fallthrough();
  cyclo_cmd->add_option("-p", cyclo_p, "Prime p")->required();
  cyclo_cmd->add_option("-n", cyclo_n, "Exponent n >= 1")->required();

  std::string scope = "all", fixture;
  int cases = 1000;
  auto* verify_cmd =
      app.add_subcommand("verify", "Run the seeded property suites");
  verify_cmd->fallthrough();
  verify_cmd->add_option("scope", scope,
                         "all | pwl | ramification | cyclotomic | depth")
      ->check(CLI::IsMember({"all", "pwl", "ramification", "cyclotomic",
                             "depth"}));
  verify_cmd->add_option("--cases", cases, "Randomized case count")
      ->capture_default_str();
  verify_cmd->add_option("--spec", fixture,
                         "Also validate this extension spec file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (hh_cmd->parsed()) return cmd_hh(opts, spec_file, action, points, range);
    if (depth_cmd->parsed()) {
      return cmd_depth(opts, depth_spec_file, depth_strs, induced);
    }
    if (cyclo_cmd->parsed()) return cmd_cyclo(opts, cyclo_p, cyclo_n);
    if (verify_cmd->parsed()) return cmd_verify(opts, scope, cases, fixture);
  } catch (const hh::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const hh::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return 0;
}
