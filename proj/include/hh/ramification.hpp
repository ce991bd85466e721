#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "hh/pwl.hpp"
#include "hh/rational.hpp"

namespace hh {

// Lower-numbering ramification filtration of a totally ramified extension,
// stored as its break table: |G_v| is the order of the entry with the
// largest u <= v. Integer jump positions only; upper-numbering data is
// always derived, never stored.
struct RamificationFiltration {
  struct Jump {
    Int u;      // nonnegative, strictly increasing, first is 0
    Int order;  // strictly decreasing subgroup chain ending at 1
    bool operator==(const Jump&) const = default;
  };

  std::vector<Jump> jumps;

  // Throws DomainError on any violated invariant.
  void validate() const;

  // Ramification index e = |G_0|.
  const Int& e() const { return jumps.front().order; }

  // |G_v| for integer v >= 0.
  const Int& order_at(const Int& v) const;

  bool operator==(const RamificationFiltration&) const = default;
};

// phi(r) = integral_0^r dt / (G_0 : G_t), with the ceiling convention:
// the slope on (i-1, i] is |G_i| / |G_0|. Concave, strictly increasing,
// phi(0) = 0.
PwlFunction phi_from_filtration(const RamificationFiltration& filt);

// Inverse of phi_from_filtration.
PwlFunction psi_from_filtration(const RamificationFiltration& filt);

// Each lower jump (u, order) mapped to (phi(u), order).
std::vector<std::pair<Rat, Int>> upper_breaks(
    const RamificationFiltration& filt);

struct TameSpec {
  Int e;  // positive
  bool operator==(const TameSpec&) const = default;
};

struct UnramifiedSpec {
  bool operator==(const UnramifiedSpec&) const = default;
};

enum class CyclotomicBase { Qp, QpZetaP };

// Q_p(zeta_{p^n}) over Q_p (base Qp) or over Q_p(zeta_p) (base QpZetaP).
struct CyclotomicSpec {
  Int p;
  int n = 1;
  CyclotomicBase base = CyclotomicBase::Qp;
  bool operator==(const CyclotomicSpec&) const = default;
};

struct ExtensionSpec;

// Bottom-up tower of extensions: steps.front() is the step nearest the
// base field, so phi_total = phi_bottom o phi_top.
struct TowerSpec {
  std::vector<ExtensionSpec> steps;
  bool operator==(const TowerSpec&) const;
};

struct ExtensionSpec {
  std::variant<RamificationFiltration, TameSpec, UnramifiedSpec,
               CyclotomicSpec, TowerSpec>
      value;
  bool operator==(const ExtensionSpec&) const = default;
};

// The Hasse-Herbrand function phi of the extension described by the spec.
PwlFunction resolve_phi(const ExtensionSpec& spec);

// Ramification index e: |G_0| for filtrations, e for tame, 1 for
// unramified, (p-1)p^{n-1} / p^{n-1} for cyclotomic over Qp / Qp(zeta_p),
// product of step indices for towers.
Int ramification_index(const ExtensionSpec& spec);

// Wild ramification index |G_1| (order of the wild inertia subgroup):
// 1 for tame and unramified, p^{n-1} for both cyclotomic variants,
// product over tower steps.
Int wild_index(const ExtensionSpec& spec);

// psi_{F/K}(r), the upper-numbering index at which G^r meets the subgroup
// fixing F, where base_spec describes F/K. Throws DomainError for r < 0.
Rat transport_upper_index(const Rat& r, const ExtensionSpec& base_spec);

}  // namespace hh
