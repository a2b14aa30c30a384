#pragma once

#include <string>
#include <vector>

#include "toricap/geometry.hpp"

namespace toricap {

struct IPoint {
  long x = 0, y = 0;
  bool operator==(const IPoint& o) const { return x == o.x && y == o.y; }
  bool operator<(const IPoint& o) const {
    return x != o.x ? x < o.x : y < o.y;
  }
};

/// A convex lattice polygon up to nothing (vertices are absolute), possibly
/// degenerate (a segment or a single point). Carries its boundary and total
/// lattice point counts.
class LatticePolygon {
 public:
  /// Convex hull of the given points, ccw; counts computed on construction.
  static LatticePolygon from_points(std::vector<IPoint> pts);

  const std::vector<IPoint>& vertices() const { return vertices_; }
  long boundary_count() const { return boundary_count_; }
  long total_count() const { return total_count_; }

  /// Twice the Euclidean area (0 for degenerate polygons).
  long area2() const { return area2_; }

  /// Omega-length of the directed ccw boundary cycle: the sum of clamped
  /// supports of the edge vectors. A segment is traversed once each way; a
  /// point has length 0. Translation invariant.
  Value omega_length(const ToricDomain& domain) const;

  /// Translate so the lexicographically smallest vertex sits at the origin.
  LatticePolygon normalized() const;

  bool operator==(const LatticePolygon& o) const {
    return vertices_ == o.vertices_;
  }
  bool operator<(const LatticePolygon& o) const {
    return vertices_ < o.vertices_;
  }

  std::string str() const;  // "(x1,y1);(x2,y2);..."

 private:
  LatticePolygon() = default;
  std::vector<IPoint> vertices_;  // ccw hull order; size 1 or 2 if degenerate
  long boundary_count_ = 0;
  long total_count_ = 0;
  long area2_ = 0;
};

}  // namespace toricap
