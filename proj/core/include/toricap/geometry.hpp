#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricap/errors.hpp"
#include "toricap/value.hpp"

namespace toricap {

struct RatPoint {
  Rat x, y;
  bool operator==(const RatPoint& o) const { return x == o.x && y == o.y; }
};

/// Integer direction / orbit label vector.
struct IVec {
  long x = 0, y = 0;
  bool operator==(const IVec& o) const { return x == o.x && y == o.y; }
};

enum class DomainKind { Polygon, Ellipsoid, Polydisk, Quadrilateral, LpBall };

/// Unvalidated description of a convex toric domain Omega in the closed
/// first quadrant. Pass it through ToricDomain::validate before use.
struct ToricDomainSpec {
  DomainKind kind = DomainKind::Polygon;
  std::vector<RatPoint> vertices;  // Polygon only
  Rat a, b, c;                     // family parameters
  Rat p = 2;                       // LpBall exponent (ignored if p_infinite)
  bool p_infinite = false;
  Rat scale = 1;  // LpBall only

  static ToricDomainSpec polygon(std::vector<RatPoint> vs);
  static ToricDomainSpec ellipsoid(Rat a, Rat b);
  static ToricDomainSpec polydisk(Rat a, Rat b);
  static ToricDomainSpec quadrilateral(Rat a, Rat b, Rat c);
  static ToricDomainSpec lp_ball(Rat p, Rat scale = 1);
  static ToricDomainSpec lp_ball_inf(Rat scale = 1);
};

/// "ellipsoid:A,B" | "polydisk:A,B" | "quad:A,B,C" | "lp:P[,SCALE]" |
/// "polygon:X1,Y1;X2,Y2;..."  with rationals written "n" or "n/d",
/// and P a rational or "inf".
ToricDomainSpec parse_domain_spec(const std::string& text);
std::string domain_spec_str(const ToricDomainSpec& spec);

/// A validated convex toric domain. Immutable; all queries are pure.
class ToricDomain {
 public:
  /// Checks every invariant (first quadrant, positive area, convex
  /// symmetrization, quadrilateral parameter conditions). Polygon input is
  /// hull-normalized first: duplicates and collinear vertices are dropped.
  static ToricDomain validate(ToricDomainSpec spec);

  const ToricDomainSpec& spec() const { return spec_; }
  DomainKind kind() const { return spec_.kind; }
  bool exact_mode() const { return exact_; }

  const Rat& xmax() const { return xmax_; }
  const Rat& ymax() const { return ymax_; }

  /// Dual support norm ||v||*_Omega with negative components clamped to 0:
  /// max over w in Omega of <v+, w>.
  Value support(const IVec& v) const;

  Value area() const;

  ToricDomain scaled(const Rat& mu) const;  // mu > 0, else BadParameter
  ToricDomain transposed() const;

  /// Hull vertices of Omega (ccw) for the polygonal kinds; empty for LpBall.
  const std::vector<RatPoint>& hull() const { return hull_; }

 private:
  ToricDomain() = default;

  ToricDomainSpec spec_;
  std::vector<RatPoint> hull_;  // ccw hull, polygonal kinds
  Rat xmax_, ymax_;
  bool exact_ = true;
};

// Small exact-geometry helpers shared with the oracle module.
Rat cross(const RatPoint& o, const RatPoint& a, const RatPoint& b);
std::vector<RatPoint> convex_hull(std::vector<RatPoint> pts);  // ccw, dedup
Rat polygon_area2(const std::vector<RatPoint>& ccw_hull);      // twice area

}  // namespace toricap
