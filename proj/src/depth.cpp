#include "hh/depth.hpp"

#include <algorithm>

#include "hh/errors.hpp"

namespace hh {

namespace {

void require_nonneg(const Rat& d) {
  if (d < 0) throw DomainError("depth must be nonnegative");
}

}  // namespace

Rat parameter_depth(const ExtensionSpec& spec, const Rat& character_depth) {
  require_nonneg(character_depth);
  return resolve_phi(spec)(Rat(ramification_index(spec)) * character_depth);
}

Rat character_depth_from_parameter(const ExtensionSpec& spec,
                                   const Rat& parameter_depth) {
  require_nonneg(parameter_depth);
  return resolve_phi(spec).inverse()(parameter_depth) /
         Rat(ramification_index(spec));
}

Rat depth_shapiro(const ExtensionSpec& base_spec, const Rat& dep_h) {
  require_nonneg(dep_h);
  return resolve_phi(base_spec)(dep_h);
}

DepthReport depth_report(const ExtensionSpec& spec,
                         const Rat& character_depth) {
  DepthReport report;
  report.character_depth = character_depth;
  report.parameter_depth = parameter_depth(spec, character_depth);
  report.gap = report.parameter_depth - report.character_depth;
  report.preserved = (report.gap == 0);
  return report;
}

std::vector<Interval> inflation_locus(const ExtensionSpec& spec) {
  const PwlFunction phi = resolve_phi(spec);
  const Rat w(wild_index(spec));
  const auto gap = [&](const Rat& r) { return phi(w * r) - r; };

  // Candidate boundary points: 0, the gap's breakpoints (phi vertices
  // pulled back through r -> w*r), and exact roots of each linear piece.
  std::vector<Rat> pts{Rat(0)};
  for (const auto& v : phi.vertices()) {
    if (v.x > 0) pts.push_back(v.x / w);
  }
  std::sort(pts.begin(), pts.end());
  std::vector<Rat> roots;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Rat ga = gap(pts[i]), gb = gap(pts[i + 1]);
    if ((ga > 0 && gb < 0) || (ga < 0 && gb > 0)) {
      roots.push_back(pts[i] + (pts[i + 1] - pts[i]) * ga / (ga - gb));
    }
  }
  // Final ray: gap slope is w * final_slope - 1.
  const Rat ray_slope = w * phi.final_slope() - 1;
  const Rat g_last = gap(pts.back());
  if ((g_last > 0 && ray_slope < 0) || (g_last < 0 && ray_slope > 0)) {
    roots.push_back(pts.back() - g_last / ray_slope);
  }
  pts.insert(pts.end(), roots.begin(), roots.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // Sign of the gap is constant between consecutive candidates and on the
  // final ray; sample interiors and merge across endpoints where the gap
  // itself is positive.
  struct Piece {
    Rat lo;
    std::optional<Rat> hi;
    bool positive;
  };
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Rat mid = (pts[i] + pts[i + 1]) / 2;
    pieces.push_back({pts[i], pts[i + 1], gap(mid) > 0});
  }
  pieces.push_back({pts.back(), std::nullopt, gap(pts.back() + 1) > 0});

  std::vector<Interval> result;
  for (const Piece& piece : pieces) {
    if (!piece.positive) continue;
    const bool mergeable = !result.empty() && result.back().hi.has_value() &&
                           *result.back().hi == piece.lo &&
                           gap(piece.lo) > 0;
    if (mergeable) {
      result.back().hi = piece.hi;
    } else {
      result.push_back({piece.lo, piece.hi});
    }
  }
  return result;
}

DepthReport induced_torus_depth(const InducedTorusSpec& torus,
                                const std::vector<Rat>& factor_depths) {
  if (torus.factors.empty()) throw DomainError("torus must have factors");
  if (torus.factors.size() != factor_depths.size()) {
    throw DomainError("one depth per factor required");
  }
  DepthReport report;
  report.character_depth = 0;
  report.parameter_depth = 0;
  for (std::size_t i = 0; i < torus.factors.size(); ++i) {
    require_nonneg(factor_depths[i]);
    report.character_depth = std::max(report.character_depth, factor_depths[i]);
    report.parameter_depth =
        std::max(report.parameter_depth,
                 parameter_depth(torus.factors[i].spec, factor_depths[i]));
  }
  report.gap = report.parameter_depth - report.character_depth;
  report.preserved = (report.gap == 0);
  return report;
}

}  // namespace hh
