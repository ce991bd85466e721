#include <doctest.h>

#include "hh/depth.hpp"
#include "hh/errors.hpp"
#include "hh/json_io.hpp"
#include "hh/verify.hpp"

using hh::ExtensionSpec;
using hh::Int;
using hh::Rat;

namespace {

Rat rat(const std::string& s) { return hh::parse_rational(s); }

const ExtensionSpec kCycZeta{
    hh::CyclotomicSpec{Int(3), 2, hh::CyclotomicBase::QpZetaP}};
const ExtensionSpec kCycQp{
    hh::CyclotomicSpec{Int(3), 2, hh::CyclotomicBase::Qp}};

}  // namespace

TEST_CASE("parameter_depth") {
  for (const long long e : {1LL, 2LL, 7LL, 50LL}) {
    CHECK(parameter_depth(ExtensionSpec{hh::TameSpec{Int(e)}}, rat("5/3")) ==
          rat("5/3"));
  }
  CHECK(parameter_depth(kCycZeta, Rat(1)) == rat("7/3"));
  CHECK(parameter_depth(kCycZeta, Rat(0)) == 0);
  CHECK_THROWS_AS(parameter_depth(kCycZeta, Rat(-1)), hh::DomainError);
}

TEST_CASE("character_depth_from_parameter inverts parameter_depth") {
  CHECK(character_depth_from_parameter(kCycZeta, rat("7/3")) == 1);
  hh::verify::Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const ExtensionSpec spec = hh::verify::random_spec(rng, 1);
    const Rat r = hh::verify::random_nonneg_rational(rng);
    CHECK(character_depth_from_parameter(spec, parameter_depth(spec, r)) == r);
  }
}

TEST_CASE("depth_shapiro") {
  CHECK(depth_shapiro(ExtensionSpec{hh::TameSpec{Int(4)}}, Rat(2)) ==
        rat("1/2"));
  CHECK(depth_shapiro(kCycQp, Rat(0)) == 0);
  hh::verify::Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const ExtensionSpec spec = hh::verify::random_spec(rng, 1);
    const Rat r = hh::verify::random_nonneg_rational(rng);
    CHECK(transport_upper_index(depth_shapiro(spec, r), spec) == r);
  }
}

TEST_CASE("depth_report") {
  const auto tame = depth_report(ExtensionSpec{hh::TameSpec{Int(7)}}, rat("3/2"));
  CHECK(tame.preserved);
  CHECK(tame.gap == 0);

  const auto wild = depth_report(kCycZeta, Rat(1));
  CHECK_FALSE(wild.preserved);
  CHECK(wild.parameter_depth == rat("7/3"));
  CHECK(wild.gap == rat("4/3"));

  CHECK(depth_report(kCycZeta, Rat(0)).preserved);

  CHECK(hh::depth_report_to_json(wild).dump() ==
        R"({"character_depth":"1","gap":"4/3","parameter_depth":"7/3","preserved":false})");
}

TEST_CASE("inflation_locus") {
  CHECK(inflation_locus(ExtensionSpec{hh::TameSpec{Int(5)}}).empty());
  CHECK(inflation_locus(ExtensionSpec{hh::UnramifiedSpec{}}).empty());

  const auto whole = inflation_locus(kCycZeta);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].lo == 0);
  CHECK_FALSE(whole[0].hi.has_value());

  // The L/K counterexample to the literal inflation statement: the gap of
  // phi_{L/K}(p^{n-1} r) closes at r = 4/3 for p = 3, n = 2 (root of
  // 2/3 + r/2 = r on the final segment).
  const auto bounded = inflation_locus(kCycQp);
  REQUIRE(bounded.size() == 1);
  CHECK(bounded[0].lo == 0);
  REQUIRE(bounded[0].hi.has_value());
  CHECK(*bounded[0].hi == rat("4/3"));
}

TEST_CASE("induced_torus_depth") {
  hh::InducedTorusSpec torus;
  torus.factors.push_back({ExtensionSpec{hh::TameSpec{Int(2)}}, "T1"});
  torus.factors.push_back({kCycZeta, "T2"});
  const auto report = induced_torus_depth(torus, {Rat(1), Rat(1)});
  CHECK(report.character_depth == 1);
  CHECK(report.parameter_depth == rat("7/3"));
  CHECK_FALSE(report.preserved);

  hh::InducedTorusSpec single;
  single.factors.push_back({kCycZeta, "T"});
  CHECK(induced_torus_depth(single, {Rat(1)}) == depth_report(kCycZeta, Rat(1)));

  hh::InducedTorusSpec all_tame;
  all_tame.factors.push_back({ExtensionSpec{hh::TameSpec{Int(3)}}, "a"});
  all_tame.factors.push_back({ExtensionSpec{hh::TameSpec{Int(8)}}, "b"});
  CHECK(induced_torus_depth(all_tame, {rat("5/2"), rat("1/3")}).preserved);

  CHECK_THROWS_AS(induced_torus_depth(all_tame, {Rat(1)}), hh::DomainError);
  CHECK_THROWS_AS(induced_torus_depth(hh::InducedTorusSpec{}, {}),
                  hh::DomainError);
}

TEST_CASE("gap is nonnegative for concave extension specs") {
  hh::verify::Rng rng(19);
  for (int i = 0; i < 200; ++i) {
    const ExtensionSpec spec = hh::verify::random_spec(rng, 1);
    const Rat r = hh::verify::random_nonneg_rational(rng);
    CHECK(parameter_depth(spec, r) >= r);
  }
}
