#include "hh/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include <nlohmann/json.hpp>

#include "hh/cyclotomic.hpp"
#include "hh/depth.hpp"
#include "hh/errors.hpp"
#include "hh/json_io.hpp"

namespace hh::verify {

using nlohmann::json;

namespace {

long long rand_ll(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

const Int kSmallPrimes[] = {Int(2), Int(3), Int(5), Int(7)};

// phi(r) recomputed by naive per-unit-interval accumulation, independent
// of the segment construction in phi_from_filtration.
Rat summation_oracle(const RamificationFiltration& filt, const Rat& r) {
  const Rat e(filt.e());
  const Int whole = floor_nonneg(r);
  Rat acc(0);
  for (Int i = 1; i <= whole; ++i) acc += Rat(filt.order_at(i)) / e;
  const Rat frac = r - Rat(whole);
  if (frac > 0) acc += frac * Rat(filt.order_at(whole + 1)) / e;
  return acc;
}

// f(x) recomputed by walking segments from the origin, independent of the
// binary-search evaluation path.
Rat segment_walk_oracle(const PwlFunction& f, const Rat& x) {
  const auto& verts = f.vertices();
  Rat cx = verts.front().x, cy = verts.front().y;
  for (std::size_t i = 1; i < verts.size(); ++i) {
    if (verts[i].x >= x) {
      return cy + (verts[i].y - cy) / (verts[i].x - cx) * (x - cx);
    }
    cx = verts[i].x;
    cy = verts[i].y;
  }
  return cy + f.final_slope() * (x - cx);
}

struct Suite {
  std::uint64_t seed;
  int cases;
  std::vector<PropertyResult> results;

  void property(const std::string& name, int n,
                const std::function<std::string(Rng&)>& one_case) {
    PropertyResult r;
    r.name = name;
    Rng rng(seed ^ std::hash<std::string>{}(name));
    for (int i = 0; i < n; ++i) {
      std::string counterexample = one_case(rng);
      ++r.cases;
      if (!counterexample.empty()) {
        r.passed = false;
        r.counterexample = counterexample;
        break;
      }
    }
    results.push_back(std::move(r));
  }
};

void run_pwl(Suite& s) {
  const int n = s.cases;
  s.property("pwl.canonical_idempotence", n, [](Rng& rng) -> std::string {
    const PwlFunction f = random_pwl(rng, false);
    const PwlFunction again(std::vector<PwlFunction::Vertex>(f.vertices()),
                            f.final_slope());
    if (!(again == f)) return pwl_to_json(f).dump();
    return {};
  });
  s.property("pwl.evaluate_matches_segment_walk", n,
             [](Rng& rng) -> std::string {
               const PwlFunction f = random_pwl(rng, false);
               const Rat x = random_nonneg_rational(rng);
               if (f(x) != segment_walk_oracle(f, x)) {
                 return pwl_to_json(f).dump() + " at x=" + to_string(x);
               }
               return {};
             });
  s.property("pwl.compose_evaluate", n, [](Rng& rng) -> std::string {
    const PwlFunction f = random_pwl(rng, false);
    const PwlFunction g = random_pwl(rng, false);
    const Rat x = random_nonneg_rational(rng);
    if (compose(f, g)(x) != f(g(x))) {
      return json{{"f", pwl_to_json(f)}, {"g", pwl_to_json(g)},
                  {"x", to_string(x)}}.dump();
    }
    return {};
  });
  s.property("pwl.compose_associative", std::max(1, s.cases / 4),
             [](Rng& rng) -> std::string {
               const PwlFunction f = random_pwl(rng, false);
               const PwlFunction g = random_pwl(rng, false);
               const PwlFunction h = random_pwl(rng, false);
               if (!(compose(f, compose(g, h)) == compose(compose(f, g), h))) {
                 return json{{"f", pwl_to_json(f)},
                             {"g", pwl_to_json(g)},
                             {"h", pwl_to_json(h)}}.dump();
               }
               return {};
             });
  s.property("pwl.inverse_roundtrip", n, [](Rng& rng) -> std::string {
    const PwlFunction f = random_pwl(rng, true);
    if (!(compose(f, f.inverse()) == PwlFunction::identity()) ||
        !(compose(f.inverse(), f) == PwlFunction::identity())) {
      return pwl_to_json(f).dump();
    }
    return {};
  });
  s.property("pwl.double_inverse", n, [](Rng& rng) -> std::string {
    const PwlFunction f = random_pwl(rng, true);
    if (!(f.inverse().inverse() == f)) return pwl_to_json(f).dump();
    return {};
  });
  s.property("pwl.json_roundtrip", n, [](Rng& rng) -> std::string {
    const PwlFunction f = random_pwl(rng, false);
    const json j = pwl_to_json(f);
    const PwlFunction back = pwl_from_json(j);
    if (!(back == f) || pwl_to_json(back).dump() != j.dump()) {
      return j.dump();
    }
    return {};
  });
}

void run_ramification(Suite& s) {
  const int n = std::max(s.cases, 1000);
  s.property("ramification.phi_psi_identity", n, [](Rng& rng) -> std::string {
    const RamificationFiltration filt = random_filtration(rng);
    const PwlFunction phi = phi_from_filtration(filt);
    const PwlFunction psi = psi_from_filtration(filt);
    if (!(compose(phi, psi) == PwlFunction::identity()) ||
        !(compose(psi, phi) == PwlFunction::identity())) {
      return spec_to_json(ExtensionSpec{filt}).dump();
    }
    return {};
  });
  s.property("ramification.concave_strictly_increasing", n,
             [](Rng& rng) -> std::string {
               const RamificationFiltration filt = random_filtration(rng);
               const PwlFunction phi = phi_from_filtration(filt);
               if (!phi.is_concave() || phi(Rat(0)) != 0) {
                 return spec_to_json(ExtensionSpec{filt}).dump();
               }
               for (std::size_t i = 0; i < phi.vertices().size(); ++i) {
                 if (phi.slope_after(i) <= 0) {
                   return spec_to_json(ExtensionSpec{filt}).dump();
                 }
               }
               return {};
             });
  s.property("ramification.summation_oracle", n, [](Rng& rng) -> std::string {
    const RamificationFiltration filt = random_filtration(rng);
    const PwlFunction phi = phi_from_filtration(filt);
    for (int k = 0; k < 10; ++k) {
      const Rat r = random_nonneg_rational(rng);
      if (phi(r) != summation_oracle(filt, r)) {
        return spec_to_json(ExtensionSpec{filt}).dump() + " at r=" +
               to_string(r);
      }
    }
    return {};
  });
  s.property("ramification.herbrand_roundtrip", n, [](Rng& rng) -> std::string {
    const RamificationFiltration filt = random_filtration(rng);
    const PwlFunction psi = psi_from_filtration(filt);
    const auto breaks = upper_breaks(filt);
    for (std::size_t i = 0; i < breaks.size(); ++i) {
      if (psi(breaks[i].first) != Rat(filt.jumps[i].u)) {
        return spec_to_json(ExtensionSpec{filt}).dump();
      }
    }
    return {};
  });
  s.property("ramification.tower_transitivity", std::max(1, s.cases / 5),
             [](Rng& rng) -> std::string {
               TowerSpec tower;
               const int steps = static_cast<int>(rand_ll(rng, 2, 3));
               for (int i = 0; i < steps; ++i) {
                 tower.steps.push_back(random_spec(rng, 0));
               }
               PwlFunction manual = resolve_phi(tower.steps.front());
               for (std::size_t i = 1; i < tower.steps.size(); ++i) {
                 manual = compose(manual, resolve_phi(tower.steps[i]));
               }
               if (!(resolve_phi(ExtensionSpec{tower}) == manual)) {
                 return spec_to_json(ExtensionSpec{tower}).dump();
               }
               return {};
             });
  s.property("ramification.cyclotomic_tower_identity", 1,
             [](Rng&) -> std::string {
               for (const Int& p : kSmallPrimes) {
                 for (int n = 2; n <= 4; ++n) {
                   const TowerSpec tower{
                       {ExtensionSpec{TameSpec{p - 1}},
                        ExtensionSpec{CyclotomicSpec{p, n,
                                                     CyclotomicBase::QpZetaP}}}};
                   const ExtensionSpec direct{
                       CyclotomicSpec{p, n, CyclotomicBase::Qp}};
                   if (!(resolve_phi(ExtensionSpec{tower}) ==
                         resolve_phi(direct))) {
                     return spec_to_json(ExtensionSpec{tower}).dump();
                   }
                 }
               }
               return {};
             });
  s.property("ramification.transport_monotone", std::max(1, s.cases / 5),
             [](Rng& rng) -> std::string {
               const ExtensionSpec spec = random_spec(rng, 1);
               const Rat a = random_nonneg_rational(rng);
               const Rat b = a + random_positive_rational(rng);
               if (transport_upper_index(a, spec) >=
                   transport_upper_index(b, spec)) {
                 return spec_to_json(spec).dump();
               }
               return {};
             });
}

void run_cyclotomic(Suite& s) {
  s.property("cyclotomic.closed_form_equals_derived", 1,
             [](Rng&) -> std::string {
               for (const Int& p : kSmallPrimes) {
                 for (int n = 2; n <= 4; ++n) {
                   const CyclotomicParams params{p, n};
                   if (!(phi_cyclotomic_over_F_derived(params) ==
                         phi_cyclotomic_over_F_closed_form(params))) {
                     return "p=" + p.str() + " n=" + std::to_string(n);
                   }
                 }
               }
               return {};
             });
  s.property("cyclotomic.relative_phi_identity", std::max(1, s.cases / 10),
             [](Rng& rng) -> std::string {
               const Int p = kSmallPrimes[rand_ll(rng, 0, 3)];
               const int n = static_cast<int>(rand_ll(rng, 2, 4));
               const CyclotomicParams params{p, n};
               const PwlFunction phi_lk = phi_cyclotomic_over_K(params);
               const PwlFunction phi_lf =
                   phi_cyclotomic_over_F_closed_form(params);
               // Holds on all of [0, oo) for these towers, not just r >= 1,
               // since phi_{F/K} is globally r/(p-1).
               const Rat r = random_nonneg_rational(rng);
               if (phi_lf(r) != Rat(p - 1) * phi_lk(r)) {
                 return "p=" + p.str() + " n=" + std::to_string(n) +
                        " r=" + to_string(r);
               }
               return {};
             });
  s.property("cyclotomic.vertex_positions", 1, [](Rng&) -> std::string {
    for (const Int& p : kSmallPrimes) {
      for (int n = 1; n <= 4; ++n) {
        const PwlFunction phi = phi_cyclotomic_over_K(CyclotomicParams{p, n});
        // Vertices at (p^k - 1, k); for p > 2 the k = 0 vertex is the
        // origin only (no slope break below r = 1 merges it away).
        std::vector<PwlFunction::Vertex> expected;
        for (int k = 0; k < n; ++k) {
          const Int pk = boost::multiprecision::pow(p, unsigned(k));
          expected.push_back({Rat(pk - 1), Rat(k)});
        }
        if (phi.vertices() != expected) {
          return "p=" + p.str() + " n=" + std::to_string(n);
        }
      }
    }
    return {};
  });
  s.property("cyclotomic.serre_table", 1, [](Rng&) -> std::string {
    for (const Int& p : kSmallPrimes) {
      for (int n = 1; n <= 4; ++n) {
        const RamificationFiltration filt =
            cyclotomic_filtration(CyclotomicParams{p, n});
        RamificationFiltration expected;
        expected.jumps.push_back(
            {Int(0), (p - 1) * boost::multiprecision::pow(p, unsigned(n - 1))});
        for (int k = 0; k < n; ++k) {
          const Int order = boost::multiprecision::pow(p, unsigned(n - 1 - k));
          if (order == expected.jumps.back().order) continue;
          expected.jumps.push_back(
              {boost::multiprecision::pow(p, unsigned(k)), order});
        }
        if (!(filt == expected)) {
          return "p=" + p.str() + " n=" + std::to_string(n);
        }
        filt.validate();
      }
    }
    return {};
  });
  s.property("cyclotomic.wild_inflation_positive", 1, [](Rng&) -> std::string {
    for (const Int& p : kSmallPrimes) {
      for (int n = 2; n <= 4; ++n) {
        const CyclotomicParams params{p, n};
        const PwlFunction phi_lf = phi_cyclotomic_over_F_closed_form(params);
        const Rat e(boost::multiprecision::pow(p, unsigned(n - 1)));
        // g(r) = phi_{L/F}(e r) - r: zero at 0, positive at every vertex,
        // and flat on the final ray (slope e * 1/p^{n-1} - 1 = 0), so
        // positivity at the vertices settles positivity on (0, oo).
        if (e * phi_lf.final_slope() - 1 != 0) {
          return "p=" + p.str() + " n=" + std::to_string(n);
        }
        for (const auto& v : phi_lf.vertices()) {
          const Rat r = v.x / e;
          if (r > 0 && phi_lf(v.x) - r <= 0) {
            return "p=" + p.str() + " n=" + std::to_string(n);
          }
        }
        const Rat last = phi_lf.vertices().back().x / e + 1;
        if (phi_lf(e * last) - last <= 0) {
          return "p=" + p.str() + " n=" + std::to_string(n);
        }
      }
    }
    return {};
  });
}

void run_depth(Suite& s) {
  const int n = std::max(1, s.cases / 2);
  s.property("depth.parameter_character_roundtrip", n,
             [](Rng& rng) -> std::string {
               const ExtensionSpec spec = random_spec(rng, 1);
               const Rat r = random_nonneg_rational(rng);
               if (character_depth_from_parameter(
                       spec, parameter_depth(spec, r)) != r) {
                 return spec_to_json(spec).dump() + " depth=" + to_string(r);
               }
               return {};
             });
  s.property("depth.tame_identity", n, [](Rng& rng) -> std::string {
    const Int e = rand_ll(rng, 1, 50);
    const Rat r = random_nonneg_rational(rng);
    if (parameter_depth(ExtensionSpec{TameSpec{e}}, r) != r) {
      return "e=" + e.str() + " r=" + to_string(r);
    }
    if (parameter_depth(ExtensionSpec{UnramifiedSpec{}}, r) != r) {
      return "unramified r=" + to_string(r);
    }
    return {};
  });
  s.property("depth.gap_nonnegative", n, [](Rng& rng) -> std::string {
    const ExtensionSpec spec = random_spec(rng, 1);
    const PwlFunction phi = resolve_phi(spec);
    const Rat e(ramification_index(spec));
    // phi(e r) >= r iff e r >= psi(r); checked at the vertices of
    // r -> phi(e r), on its final ray, and at a random sample point.
    for (const auto& v : phi.vertices()) {
      if (v.y < v.x / e) return spec_to_json(spec).dump();
    }
    if (e * phi.final_slope() < 1) return spec_to_json(spec).dump();
    const Rat r = random_nonneg_rational(rng);
    if (parameter_depth(spec, r) < r) {
      return spec_to_json(spec).dump() + " r=" + to_string(r);
    }
    return {};
  });
  s.property("depth.shapiro_transport_inverse", std::max(1, s.cases / 10),
             [](Rng& rng) -> std::string {
               const ExtensionSpec spec = random_spec(rng, 1);
               const Rat r = random_nonneg_rational(rng);
               if (transport_upper_index(depth_shapiro(spec, r), spec) != r) {
                 return spec_to_json(spec).dump() + " r=" + to_string(r);
               }
               return {};
             });
  s.property("depth.induced_permutation_invariant", std::max(1, s.cases / 5),
             [](Rng& rng) -> std::string {
               InducedTorusSpec torus;
               std::vector<Rat> depths;
               const int k = static_cast<int>(rand_ll(rng, 2, 4));
               for (int i = 0; i < k; ++i) {
                 torus.factors.push_back(
                     {random_spec(rng, 0), "T" + std::to_string(i)});
                 depths.push_back(random_nonneg_rational(rng));
               }
               const DepthReport base = induced_torus_depth(torus, depths);
               std::vector<std::size_t> perm(torus.factors.size());
               std::iota(perm.begin(), perm.end(), 0);
               std::shuffle(perm.begin(), perm.end(), rng);
               InducedTorusSpec shuffled;
               std::vector<Rat> shuffled_depths;
               for (std::size_t i : perm) {
                 shuffled.factors.push_back(torus.factors[i]);
                 shuffled_depths.push_back(depths[i]);
               }
               if (!(induced_torus_depth(shuffled, shuffled_depths) == base)) {
                 return "permutation changed the report";
               }
               return {};
             });
  s.property("depth.cyclotomic_inflation_grid", 1, [](Rng&) -> std::string {
    for (const Int& p : kSmallPrimes) {
      for (int n = 2; n <= 4; ++n) {
        const ExtensionSpec spec{CyclotomicSpec{p, n, CyclotomicBase::QpZetaP}};
        const auto locus = inflation_locus(spec);
        if (locus.size() != 1 || locus[0].lo != 0 || locus[0].hi.has_value()) {
          return "p=" + p.str() + " n=" + std::to_string(n);
        }
      }
    }
    return {};
  });
  s.property("depth.spec_json_roundtrip", n, [](Rng& rng) -> std::string {
    const ExtensionSpec spec = random_spec(rng, 2);
    const json j = spec_to_json(spec);
    const ExtensionSpec back = spec_from_json(j);
    if (!(back == spec) || spec_to_json(back).dump() != j.dump()) {
      return j.dump();
    }
    return {};
  });
}

}  // namespace

std::vector<PropertyResult> run(const std::string& scope, std::uint64_t seed,
                                int cases) {
  Suite s{seed, std::max(1, cases), {}};
  bool known = false;
  if (scope == "all" || scope == "pwl") {
    run_pwl(s);
    known = true;
  }
  if (scope == "all" || scope == "ramification") {
    run_ramification(s);
    known = true;
  }
  if (scope == "all" || scope == "cyclotomic") {
    run_cyclotomic(s);
    known = true;
  }
  if (scope == "all" || scope == "depth") {
    run_depth(s);
    known = true;
  }
  if (!known) throw DomainError("unknown verify scope: '" + scope + "'");
  return s.results;
}

PropertyResult check_spec_json(const std::string& text) {
  PropertyResult r;
  r.name = "spec.valid";
  r.cases = 1;
  try {
    const json j = json::parse(text);
    const ExtensionSpec spec = spec_from_json(j);
    const PwlFunction phi = resolve_phi(spec);
    if (phi(Rat(0)) != 0) throw DomainError("phi(0) != 0");
    if (const auto* filt = std::get_if<RamificationFiltration>(&spec.value)) {
      filt->validate();
      if (!phi.is_concave()) throw DomainError("phi not concave");
    }
  } catch (const std::exception& e) {
    r.passed = false;
    r.counterexample = e.what();
  }
  return r;
}

Rat random_nonneg_rational(Rng& rng) {
  return Rat(Int(rand_ll(rng, 0, 48)), Int(rand_ll(rng, 1, 12)));
}

Rat random_positive_rational(Rng& rng) {
  return Rat(Int(rand_ll(rng, 1, 48)), Int(rand_ll(rng, 1, 12)));
}

RamificationFiltration random_filtration(Rng& rng) {
  const int njumps = static_cast<int>(rand_ll(rng, 1, 5));
  std::vector<Int> orders(njumps);
  orders[njumps - 1] = 1;
  for (int i = njumps - 2; i >= 0; --i) {
    orders[i] = orders[i + 1] * rand_ll(rng, 2, 4);
  }
  RamificationFiltration filt;
  Int u = 0;
  for (int i = 0; i < njumps; ++i) {
    filt.jumps.push_back({u, orders[i]});
    u += rand_ll(rng, 1, 6);
  }
  return filt;
}

PwlFunction random_pwl(Rng& rng, bool zero_at_origin) {
  const Rat start = zero_at_origin ? Rat(0) : random_nonneg_rational(rng);
  std::vector<PwlFunction::Segment> segs;
  const int nfinite = static_cast<int>(rand_ll(rng, 0, 4));
  for (int i = 0; i < nfinite; ++i) {
    segs.push_back({random_positive_rational(rng),
                    random_positive_rational(rng)});
  }
  segs.push_back({std::nullopt, random_positive_rational(rng)});
  return PwlFunction::from_segments(start, segs);
}

ExtensionSpec random_spec(Rng& rng, int max_tower_depth) {
  const long long kind = rand_ll(rng, 0, max_tower_depth > 0 ? 4 : 3);
  switch (kind) {
    case 0:
      return ExtensionSpec{random_filtration(rng)};
    case 1:
      return ExtensionSpec{TameSpec{Int(rand_ll(rng, 1, 50))}};
    case 2:
      return ExtensionSpec{UnramifiedSpec{}};
    case 3: {
      CyclotomicSpec c;
      c.p = kSmallPrimes[rand_ll(rng, 0, 3)];
      c.n = static_cast<int>(rand_ll(rng, 1, 4));
      c.base = rand_ll(rng, 0, 1) == 0 ? CyclotomicBase::Qp
                                       : CyclotomicBase::QpZetaP;
      return ExtensionSpec{c};
    }
    default: {
      TowerSpec t;
      const int steps = static_cast<int>(rand_ll(rng, 1, 3));
      for (int i = 0; i < steps; ++i) {
        t.steps.push_back(random_spec(rng, max_tower_depth - 1));
      }
      return ExtensionSpec{t};
    }
  }
}

}  // namespace hh::verify
