#include <doctest.h>

#include "hh/cyclotomic.hpp"
#include "hh/errors.hpp"
#include "hh/ramification.hpp"

using hh::CyclotomicParams;
using hh::Int;
using hh::PwlFunction;
using hh::Rat;
using hh::cyclotomic_filtration;
using hh::phi_cyclotomic_over_F_closed_form;
using hh::phi_cyclotomic_over_F_derived;
using hh::phi_cyclotomic_over_K;

namespace {

Rat rat(const std::string& s) { return hh::parse_rational(s); }

std::vector<std::pair<long long, long long>> jump_table(
    const hh::RamificationFiltration& f) {
  std::vector<std::pair<long long, long long>> out;
  for (const auto& j : f.jumps) {
    out.emplace_back(j.u.convert_to<long long>(),
                     j.order.convert_to<long long>());
  }
  return out;
}

}  // namespace

TEST_CASE("is_prime") {
  CHECK(hh::is_prime(Int(2)));
  CHECK(hh::is_prime(Int(3)));
  CHECK(hh::is_prime(Int(97)));
  CHECK_FALSE(hh::is_prime(Int(1)));
  CHECK_FALSE(hh::is_prime(Int(9)));
  CHECK_FALSE(hh::is_prime(Int(91)));
}

TEST_CASE("cyclotomic_filtration: break tables") {
  CHECK(jump_table(cyclotomic_filtration({Int(3), 1})) ==
        std::vector<std::pair<long long, long long>>{{0, 2}, {1, 1}});
  CHECK(jump_table(cyclotomic_filtration({Int(3), 2})) ==
        std::vector<std::pair<long long, long long>>{{0, 6}, {1, 3}, {3, 1}});
  // p = 2 collapse: p - 1 = 1 merges the u = 0 and u = 1 entries.
  CHECK(jump_table(cyclotomic_filtration({Int(2), 3})) ==
        std::vector<std::pair<long long, long long>>{{0, 4}, {2, 2}, {4, 1}});
  CHECK(jump_table(cyclotomic_filtration({Int(2), 1})) ==
        std::vector<std::pair<long long, long long>>{{0, 1}});
  CHECK_THROWS_AS(cyclotomic_filtration({Int(4), 2}), hh::DomainError);
  CHECK_THROWS_AS(cyclotomic_filtration({Int(3), 0}), hh::DomainError);
}

TEST_CASE("phi over K: frozen values") {
  const PwlFunction phi = phi_cyclotomic_over_K({Int(3), 2});
  CHECK(phi(Rat(2)) == Rat(1));
  CHECK(phi(Rat(5)) == rat("3/2"));
  CHECK(phi_cyclotomic_over_K({Int(5), 1}) == PwlFunction::linear(rat("1/4")));
}

TEST_CASE("phi over F closed form: frozen values") {
  const PwlFunction phi = phi_cyclotomic_over_F_closed_form({Int(3), 2});
  CHECK(phi(Rat(0)) == Rat(0));
  CHECK(phi(Rat(1)) == Rat(1));
  CHECK(phi(Rat(3)) == rat("7/3"));
  CHECK_THROWS_AS(phi_cyclotomic_over_F_closed_form({Int(3), 1}),
                  hh::DomainError);
  CHECK_THROWS_AS(phi_cyclotomic_over_F_derived({Int(3), 1}), hh::DomainError);
}

TEST_CASE("phi over F: derived route equals closed form") {
  for (const long long p : {2LL, 3LL, 5LL}) {
    for (int n = 2; n <= 4; ++n) {
      CHECK(phi_cyclotomic_over_F_derived({Int(p), n}) ==
            phi_cyclotomic_over_F_closed_form({Int(p), n}));
    }
  }
  CHECK(phi_cyclotomic_over_F_derived({Int(5), 4}) ==
        phi_cyclotomic_over_F_closed_form({Int(5), 4}));
  // p = 2 makes L/F = L/K.
  CHECK(phi_cyclotomic_over_F_derived({Int(2), 3}) ==
        phi_cyclotomic_over_K({Int(2), 3}));
}

TEST_CASE("relative phi identity, including [0, 1]") {
  for (const long long p : {3LL, 5LL}) {
    for (int n = 2; n <= 3; ++n) {
      const PwlFunction phi_lk = phi_cyclotomic_over_K({Int(p), n});
      const PwlFunction phi_lf = phi_cyclotomic_over_F_closed_form({Int(p), n});
      for (const char* r : {"0", "1/2", "1", "3/2", "7/3", "5", "26"}) {
        CHECK(phi_lf(rat(r)) == Rat(p - 1) * phi_lk(rat(r)));
      }
    }
  }
}

TEST_CASE("phi over K vertices sit at (p^k - 1, k)") {
  for (const long long p : {2LL, 3LL, 5LL, 7LL}) {
    for (int n = 1; n <= 4; ++n) {
      const PwlFunction phi = phi_cyclotomic_over_K({Int(p), n});
      REQUIRE(phi.vertices().size() == static_cast<std::size_t>(n));
      Int pk = 1;
      for (int k = 0; k < n; ++k) {
        CHECK(phi.vertices()[k] == PwlFunction::Vertex{Rat(pk - 1), Rat(k)});
        pk *= p;
      }
    }
  }
}

TEST_CASE("wild inflation of L/F: gap positive on (0, oo)") {
  for (const long long p : {2LL, 3LL, 5LL, 7LL}) {
    for (int n = 2; n <= 4; ++n) {
      const PwlFunction phi = phi_cyclotomic_over_F_closed_form({Int(p), n});
      const Rat e(boost::multiprecision::pow(Int(p), unsigned(n - 1)));
      // Gap g(r) = phi(e r) - r vanishes at 0 and is flat past the last
      // vertex, so strict positivity at the vertices settles (0, oo).
      CHECK(e * phi.final_slope() == 1);
      for (const auto& v : phi.vertices()) {
        if (v.x > 0) CHECK(v.y - v.x / e > 0);
      }
      CHECK(phi(e * 1) - 1 > 0);
    }
  }
}
