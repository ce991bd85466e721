#include "hh/ramification.hpp"

#include "hh/cyclotomic.hpp"
#include "hh/errors.hpp"

namespace hh {

void RamificationFiltration::validate() const {
  if (jumps.empty()) throw DomainError("filtration must be nonempty");
  if (jumps.front().u != 0) throw DomainError("first jump must be at u = 0");
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    if (jumps[i].order <= 0) throw DomainError("orders must be positive");
    if (i > 0) {
      if (jumps[i].u <= jumps[i - 1].u) {
        throw DomainError("jump positions must be strictly increasing");
      }
      if (jumps[i].order >= jumps[i - 1].order) {
        throw DomainError("orders must be strictly decreasing");
      }
      if (jumps[i - 1].order % jumps[i].order != 0) {
        throw DomainError("each order must divide the previous one");
      }
    }
  }
  if (jumps.back().order != 1) throw DomainError("last order must be 1");
}

const Int& RamificationFiltration::order_at(const Int& v) const {
  // Largest jump position <= v; filtration entries are few, linear scan.
  std::size_t i = 0;
  while (i + 1 < jumps.size() && jumps[i + 1].u <= v) ++i;
  return jumps[i].order;
}

PwlFunction phi_from_filtration(const RamificationFiltration& filt) {
  filt.validate();
  const Rat e(filt.e());
  std::vector<PwlFunction::Segment> segs;
  // Slope on (i-1, i] is |G_i|/e. Between consecutive jumps the order is
  // constant, so each jump at u > 0 contributes a unit-length segment of
  // its own order preceded by a run at the previous order.
  for (std::size_t k = 1; k < filt.jumps.size(); ++k) {
    const Int run = filt.jumps[k].u - filt.jumps[k - 1].u - 1;
    if (run > 0) {
      segs.push_back({Rat(run), Rat(filt.jumps[k - 1].order) / e});
    }
    segs.push_back({Rat(1), Rat(filt.jumps[k].order) / e});
  }
  segs.push_back({std::nullopt, Rat(1) / e});
  return PwlFunction::from_segments(Rat(0), segs);
}

PwlFunction psi_from_filtration(const RamificationFiltration& filt) {
  return phi_from_filtration(filt).inverse();
}

std::vector<std::pair<Rat, Int>> upper_breaks(
    const RamificationFiltration& filt) {
  const PwlFunction phi = phi_from_filtration(filt);
  std::vector<std::pair<Rat, Int>> breaks;
  breaks.reserve(filt.jumps.size());
  for (const auto& j : filt.jumps) {
    breaks.emplace_back(phi(Rat(j.u)), j.order);
  }
  return breaks;
}

bool TowerSpec::operator==(const TowerSpec& other) const {
  return steps == other.steps;
}

namespace {

struct PhiVisitor {
  PwlFunction operator()(const RamificationFiltration& f) const {
    return phi_from_filtration(f);
  }
  PwlFunction operator()(const TameSpec& t) const {
    if (t.e <= 0) throw DomainError("tame ramification index must be positive");
    return PwlFunction::linear(Rat(1) / Rat(t.e));
  }
  PwlFunction operator()(const UnramifiedSpec&) const {
    return PwlFunction::identity();
  }
  PwlFunction operator()(const CyclotomicSpec& c) const {
    const CyclotomicParams params{c.p, c.n};
    if (c.base == CyclotomicBase::Qp) return phi_cyclotomic_over_K(params);
    // Over Q_p(zeta_p): trivial extension when n = 1.
    if (c.n == 1) return PwlFunction::identity();
    return phi_cyclotomic_over_F_closed_form(params);
  }
  PwlFunction operator()(const TowerSpec& t) const {
    if (t.steps.empty()) throw DomainError("tower must be nonempty");
    PwlFunction phi = resolve_phi(t.steps.front());
    for (std::size_t i = 1; i < t.steps.size(); ++i) {
      phi = compose(phi, resolve_phi(t.steps[i]));
    }
    return phi;
  }
};

struct IndexVisitor {
  Int operator()(const RamificationFiltration& f) const {
    f.validate();
    return f.e();
  }
  Int operator()(const TameSpec& t) const {
    if (t.e <= 0) throw DomainError("tame ramification index must be positive");
    return t.e;
  }
  Int operator()(const UnramifiedSpec&) const { return 1; }
  Int operator()(const CyclotomicSpec& c) const {
    const CyclotomicParams params{c.p, c.n};
    params.validate();
    const Int wild = boost::multiprecision::pow(c.p, unsigned(c.n - 1));
    return c.base == CyclotomicBase::Qp ? (c.p - 1) * wild : wild;
  }
  Int operator()(const TowerSpec& t) const {
    if (t.steps.empty()) throw DomainError("tower must be nonempty");
    Int e = 1;
    for (const auto& s : t.steps) e *= ramification_index(s);
    return e;
  }
};

struct WildVisitor {
  Int operator()(const RamificationFiltration& f) const {
    f.validate();
    return f.order_at(1);
  }
  Int operator()(const TameSpec&) const { return 1; }
  Int operator()(const UnramifiedSpec&) const { return 1; }
  Int operator()(const CyclotomicSpec& c) const {
    const CyclotomicParams params{c.p, c.n};
    params.validate();
    return boost::multiprecision::pow(c.p, unsigned(c.n - 1));
  }
  Int operator()(const TowerSpec& t) const {
    if (t.steps.empty()) throw DomainError("tower must be nonempty");
    Int w = 1;
    for (const auto& s : t.steps) w *= wild_index(s);
    return w;
  }
};

}  // namespace

PwlFunction resolve_phi(const ExtensionSpec& spec) {
  return std::visit(PhiVisitor{}, spec.value);
}

Int ramification_index(const ExtensionSpec& spec) {
  return std::visit(IndexVisitor{}, spec.value);
}

Int wild_index(const ExtensionSpec& spec) {
  return std::visit(WildVisitor{}, spec.value);
}

Rat transport_upper_index(const Rat& r, const ExtensionSpec& base_spec) {
  if (r < 0) throw DomainError("upper index must be nonnegative");
  return resolve_phi(base_spec).inverse()(r);
}

}  // namespace hh
