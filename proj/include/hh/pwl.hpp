#pragma once

#include <optional>
#include <vector>

#include "hh/rational.hpp"

namespace hh {

// A strictly increasing, continuous piecewise-linear function on [0, oo)
// with rational vertices, stored in canonical form: vertex x-coordinates
// strictly increasing starting at 0, every segment slope strictly positive,
// and no vertex whose incoming and outgoing slopes coincide. The unbounded
// last segment is an explicit final slope, not a sentinel vertex.
//
// Canonical form makes operator== a decision procedure for pointwise
// equality of the represented functions.
class PwlFunction {
 public:
  struct Vertex {
    Rat x;
    Rat y;
    bool operator==(const Vertex&) const = default;
  };

  // length == nullopt means the unbounded final segment.
  struct Segment {
    std::optional<Rat> length;
    Rat slope;
  };

  // The identity function r -> r.
  PwlFunction();

  // Validates invariants and canonicalizes (merges collinear vertices).
  PwlFunction(std::vector<Vertex> vertices, Rat final_slope);

  static PwlFunction identity();

  // r -> slope * r, slope > 0.
  static PwlFunction linear(const Rat& slope);

  // Builds the function starting at (0, start_value) from consecutive
  // segments. Exactly the last segment must be infinite; all slopes must
  // be positive and all finite lengths positive. Throws DomainError.
  static PwlFunction from_segments(const Rat& start_value,
                                   const std::vector<Segment>& segments);

  // Exact evaluation; throws DomainError for x < 0.
  Rat operator()(const Rat& x) const;

  // Exact preimage: the unique x >= 0 with f(x) == y. Throws DomainError
  // when y is below f(0).
  Rat preimage(const Rat& y) const;

  // The inverse function. Requires f(0) == 0 so the inverse again lives
  // on [0, oo); throws DomainError otherwise.
  PwlFunction inverse() const;

  bool operator==(const PwlFunction&) const = default;

  const std::vector<Vertex>& vertices() const { return verts_; }
  const Rat& final_slope() const { return final_slope_; }

  // Slope of the segment starting at vertex i (final slope for the last).
  Rat slope_after(std::size_t i) const;

  // Segment slopes non-increasing left to right (including the final one).
  bool is_concave() const;

 private:
  std::vector<Vertex> verts_;
  Rat final_slope_;
};

// f after g: x -> f(g(x)). Requires g(0) >= 0.
PwlFunction compose(const PwlFunction& f, const PwlFunction& g);

}  // namespace hh
