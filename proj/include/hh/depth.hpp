#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hh/ramification.hpp"

namespace hh {

// Depth comparison across the correspondence for one extension: character
// depth r on one side, phi(e * r) on the other.
struct DepthReport {
  Rat character_depth;
  Rat parameter_depth;
  bool preserved = false;
  Rat gap;  // parameter_depth - character_depth, always >= 0
  bool operator==(const DepthReport&) const = default;
};

// Product of Weil restrictions, one extension per factor.
struct InducedTorusSpec {
  struct Factor {
    ExtensionSpec spec;
    std::string label;
  };
  std::vector<Factor> factors;  // nonempty
};

// Open interval (lo, hi), hi == nullopt meaning unbounded.
struct Interval {
  Rat lo;
  std::optional<Rat> hi;
  bool operator==(const Interval&) const = default;
};

// Parameter depth phi(e * r) for character depth r, e the ramification
// index of the extension. Throws DomainError for r < 0.
Rat parameter_depth(const ExtensionSpec& spec, const Rat& character_depth);

// Exact inverse: psi(d) / e.
Rat character_depth_from_parameter(const ExtensionSpec& spec,
                                   const Rat& parameter_depth);

// Weil-group-side transport across a base change F/K: phi_{F/K}(dep_H).
// No e-multiplication here.
Rat depth_shapiro(const ExtensionSpec& base_spec, const Rat& dep_h);

DepthReport depth_report(const ExtensionSpec& spec,
                         const Rat& character_depth);

// Maximal open subintervals of (0, oo) on which phi(w * r) - r is strictly
// positive, where w is the wild ramification index of the spec. Endpoints
// are exact roots of the linear pieces. Empty for tame and unramified
// extensions.
std::vector<Interval> inflation_locus(const ExtensionSpec& spec);

// Depth report for a product torus: both depths are the sup over factors.
DepthReport induced_torus_depth(const InducedTorusSpec& torus,
                                const std::vector<Rat>& factor_depths);

}  // namespace hh
