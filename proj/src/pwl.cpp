#include "hh/pwl.hpp"

#include <algorithm>
#include <utility>

#include "hh/errors.hpp"

namespace hh {

namespace {

Rat slope_between(const PwlFunction::Vertex& a, const PwlFunction::Vertex& b) {
  return (b.y - a.y) / (b.x - a.x);
}

}  // namespace

PwlFunction::PwlFunction() : verts_{{Rat(0), Rat(0)}}, final_slope_(1) {}

PwlFunction::PwlFunction(std::vector<Vertex> vertices, Rat final_slope)
    : verts_(std::move(vertices)), final_slope_(std::move(final_slope)) {
  if (verts_.empty()) throw DomainError("at least one vertex required");
  if (verts_.front().x != 0) throw DomainError("first vertex must have x = 0");
  for (std::size_t i = 1; i < verts_.size(); ++i) {
    if (verts_[i].x <= verts_[i - 1].x) {
      throw DomainError("vertex x-coordinates must be strictly increasing");
    }
    if (slope_between(verts_[i - 1], verts_[i]) <= 0) {
      throw DomainError("segment slopes must be strictly positive");
    }
  }
  if (final_slope_ <= 0) throw DomainError("final slope must be positive");

  // Merge collinear vertices.
  std::vector<Vertex> out;
  out.reserve(verts_.size());
  out.push_back(verts_.front());
  for (std::size_t i = 1; i < verts_.size(); ++i) {
    const Rat incoming = slope_between(out.back(), verts_[i]);
    const Rat outgoing = (i + 1 < verts_.size())
                             ? slope_between(verts_[i], verts_[i + 1])
                             : final_slope_;
    if (incoming != outgoing) out.push_back(verts_[i]);
  }
  verts_ = std::move(out);
}

PwlFunction PwlFunction::identity() { return PwlFunction(); }

PwlFunction PwlFunction::linear(const Rat& slope) {
  return PwlFunction({{Rat(0), Rat(0)}}, slope);
}

PwlFunction PwlFunction::from_segments(const Rat& start_value,
                                       const std::vector<Segment>& segments) {
  if (segments.empty()) throw DomainError("segment list must be nonempty");
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment& s = segments[i];
    if (s.slope <= 0) throw DomainError("segment slope must be positive");
    const bool last = (i + 1 == segments.size());
    if (last && s.length.has_value()) {
      throw DomainError("last segment must have infinite length");
    }
    if (!last) {
      if (!s.length.has_value()) {
        throw DomainError("only the last segment may be infinite");
      }
      if (*s.length <= 0) throw DomainError("segment length must be positive");
    }
  }
  std::vector<Vertex> verts{{Rat(0), start_value}};
  Rat x(0), y = start_value;
  for (std::size_t i = 0; i + 1 < segments.size(); ++i) {
    x += *segments[i].length;
    y += *segments[i].length * segments[i].slope;
    verts.push_back({x, y});
  }
  return PwlFunction(std::move(verts), segments.back().slope);
}

Rat PwlFunction::operator()(const Rat& x) const {
  if (x < 0) throw DomainError("evaluation point must be nonnegative");
  auto it = std::upper_bound(
      verts_.begin(), verts_.end(), x,
      [](const Rat& v, const Vertex& a) { return v < a.x; });
  const std::size_t i = static_cast<std::size_t>(it - verts_.begin()) - 1;
  return verts_[i].y + slope_after(i) * (x - verts_[i].x);
}

Rat PwlFunction::preimage(const Rat& y) const {
  if (y < verts_.front().y) throw DomainError("value below range of function");
  auto it = std::upper_bound(
      verts_.begin(), verts_.end(), y,
      [](const Rat& v, const Vertex& a) { return v < a.y; });
  const std::size_t i = static_cast<std::size_t>(it - verts_.begin()) - 1;
  return verts_[i].x + (y - verts_[i].y) / slope_after(i);
}

PwlFunction PwlFunction::inverse() const {
  if (verts_.front().y != 0) {
    throw DomainError("inverse requires f(0) = 0");
  }
  std::vector<Vertex> out;
  out.reserve(verts_.size());
  for (const Vertex& v : verts_) out.push_back({v.y, v.x});
  return PwlFunction(std::move(out), Rat(1) / final_slope_);
}

Rat PwlFunction::slope_after(std::size_t i) const {
  if (i + 1 < verts_.size()) return slope_between(verts_[i], verts_[i + 1]);
  return final_slope_;
}

bool PwlFunction::is_concave() const {
  // slope_after(last) is the final slope, so the loop covers it.
  for (std::size_t i = 1; i < verts_.size(); ++i) {
    if (slope_after(i) > slope_after(i - 1)) return false;
  }
  return true;
}

PwlFunction compose(const PwlFunction& f, const PwlFunction& g) {
  const Rat g0 = g.vertices().front().y;
  if (g0 < 0) throw DomainError("compose requires g(0) >= 0");

  // Breakpoints of f(g(x)): vertices of g plus g-preimages of vertices of
  // f that g actually reaches. Each preimage is solved exactly on a single
  // linear segment of g.
  std::vector<Rat> xs;
  for (const auto& v : g.vertices()) xs.push_back(v.x);
  for (const auto& v : f.vertices()) {
    if (v.x >= g0) xs.push_back(g.preimage(v.x));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<PwlFunction::Vertex> verts;
  verts.reserve(xs.size());
  for (const Rat& x : xs) verts.push_back({x, f(g(x))});
  return PwlFunction(std::move(verts), f.final_slope() * g.final_slope());
}

}  // namespace hh
