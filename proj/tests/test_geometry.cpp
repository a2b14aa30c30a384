#include "doctest.h"
#include "toricap/geometry.hpp"

#include <cmath>

using namespace toricap;

namespace {
ToricDomain dom(const std::string& s) {
  return ToricDomain::validate(parse_domain_spec(s));
}
}  // namespace

TEST_CASE("support norm on named domains") {
  auto e71 = dom("ellipsoid:7,1");
  CHECK(e71.support({1, 0}).rat() == 7);
  CHECK(e71.support({0, 1}).rat() == 1);
  CHECK(e71.support({1, 1}).rat() == 7);
  CHECK(e71.support({0, 0}).rat() == 0);
  // negative components clamp to zero
  CHECK(e71.support({-1, 2}).rat() == 2);
  CHECK(e71.support({-3, -4}).rat() == 0);

  auto p = dom("polydisk:3/2,1");
  CHECK(p.support({1, 0}).rat() == Rat(3, 2));
  CHECK(p.support({2, 3}).rat() == 6);
  CHECK(p.support({-1, 1}).rat() == 1);
}

TEST_CASE("support norm for polygon and quadrilateral kinds") {
  auto q = dom("quad:1,1/2,3/2");
  // vertices (0,0),(3/2,0),(1,1/2)... support of (1,1) = max over hull
  CHECK(q.support({1, 0}).rat() == Rat(3, 2));
  CHECK(q.support({0, 1}).rat() == 1);
  CHECK(q.support({1, 1}).rat() == Rat(3, 2));

  auto poly = dom("polygon:0,0;2,0;2,1;0,2");
  CHECK(poly.support({1, 0}).rat() == 2);
  CHECK(poly.support({0, 1}).rat() == 2);
  CHECK(poly.support({1, 1}).rat() == 3);
}

TEST_CASE("lp ball support") {
  auto l1 = dom("lp:1");
  CHECK(l1.exact_mode());
  CHECK(l1.support({3, 4}).rat() == 4);  // dual is sup norm
  auto linf = dom("lp:inf");
  CHECK(linf.exact_mode());
  CHECK(linf.support({3, 4}).rat() == 7);  // dual is 1-norm
  auto l2 = dom("lp:2");
  CHECK_FALSE(l2.exact_mode());
  CHECK(l2.support({3, 4}).eq(Value::exact(5)));  // perfect square sum
  CHECK(l2.support({1, 1}).dbl() == doctest::Approx(std::sqrt(2.0)));
  // scaled ball
  auto l1s = dom("lp:1,2");
  CHECK(l1s.support({3, 4}).rat() == 8);
}

TEST_CASE("areas") {
  CHECK(dom("ellipsoid:7,1").area().rat() == Rat(7, 2));
  CHECK(dom("polydisk:2,1").area().rat() == 2);
  CHECK(dom("polygon:0,0;2,0;2,2;0,2").area().rat() == 4);
  CHECK(dom("lp:2").area().dbl() ==
        doctest::Approx(std::atan(1.0)));  // quarter disk, pi/4
  CHECK(dom("lp:1").area().eq(Value::exact(Rat(1, 2))));
  CHECK(dom("lp:inf").area().eq(Value::exact(1)));
}

TEST_CASE("validation failures") {
  CHECK_THROWS_AS(dom("ellipsoid:0,1"), BadParameter);
  CHECK_THROWS_AS(dom("polydisk:-1,2"), BadParameter);
  // quadrilateral needs a <= c, b <= 1, a + b*c >= c
  CHECK_THROWS_AS(dom("quad:3,1,1"), BadQuadrilateral);
  CHECK_THROWS_AS(dom("quad:1,2,3"), BadQuadrilateral);
  CHECK_NOTHROW(dom("quad:1,1/2,3/2"));
  // polygons must live in the first quadrant
  CHECK_THROWS_AS(dom("polygon:-1,0;2,0;0,2"), NotConvexToric);
  // degenerate polygon
  CHECK_THROWS_AS(dom("polygon:0,0;1,1;2,2"), EmptyDomain);
  // symmetrization of this triangle is not convex
  CHECK_THROWS_AS(dom("polygon:0,0;2,0;1,2"), NotConvexToric);
}

TEST_CASE("hull normalization drops duplicates and collinear points") {
  auto d = dom("polygon:0,0;1,0;2,0;2,2;0,2;0,0");
  CHECK(d.hull().size() == 4);
  CHECK(d.xmax() == 2);
  CHECK(d.ymax() == 2);
}

TEST_CASE("scaling") {
  auto d = dom("ellipsoid:2,1").scaled(3);
  CHECK(d.spec().a == 6);
  CHECK(d.spec().b == 3);
  CHECK(d.area().rat() == 9 * Rat(1));
  CHECK_THROWS_AS(dom("ellipsoid:2,1").scaled(0), BadParameter);
  CHECK_THROWS_AS(dom("ellipsoid:2,1").scaled(-2), BadParameter);

  // quadrilaterals leave the family under scaling; result is a polygon
  auto q = dom("quad:1,1/2,3/2").scaled(2);
  CHECK(q.kind() == DomainKind::Polygon);
  CHECK(q.support({1, 0}).rat() == 3);

  auto lp = dom("lp:1").scaled(Rat(5, 2));
  CHECK(lp.support({1, 0}).rat() == Rat(5, 2));
}

TEST_CASE("transpose") {
  auto d = dom("ellipsoid:1,7").transposed();
  CHECK(d.spec().a == 7);
  CHECK(d.spec().b == 1);
  auto poly = dom("polygon:0,0;2,0;2,1;0,2").transposed();
  CHECK(poly.support({1, 0}).rat() == 2);
  CHECK(poly.support({0, 1}).rat() == 2);
  CHECK(poly.support({2, 1}).rat() ==
        dom("polygon:0,0;2,0;2,1;0,2").support({1, 2}).rat());
  // involution
  auto back = poly.transposed();
  CHECK(back.support({5, 3}).rat() ==
        dom("polygon:0,0;2,0;2,1;0,2").support({5, 3}).rat());
}

TEST_CASE("spec parse and print round trip") {
  for (const char* s :
       {"ellipsoid:1,7", "polydisk:3/2,1", "quad:1,1/4,5/4", "lp:1", "lp:inf",
        "lp:2,3/2", "polygon:0,0;2,0;2,1;0,2"}) {
    auto spec = parse_domain_spec(s);
    auto spec2 = parse_domain_spec(domain_spec_str(spec));
    CHECK(domain_spec_str(spec) == domain_spec_str(spec2));
  }
  CHECK_THROWS_AS(parse_domain_spec("blob:1,2"), ParseError);
  CHECK_THROWS_AS(parse_domain_spec("ellipsoid:1"), ParseError);
  CHECK_THROWS_AS(parse_domain_spec("ellipsoid:1,x"), ParseError);
  CHECK_THROWS_AS(parse_domain_spec(""), ParseError);
}
