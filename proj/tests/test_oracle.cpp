#include "doctest.h"
#include "toricap/oracle.hpp"

using namespace toricap;

namespace {
ToricDomain dom(const std::string& s) {
  return ToricDomain::validate(parse_domain_spec(s));
}
}  // namespace

TEST_CASE("lattice polygon counts") {
  auto tri = LatticePolygon::from_points({{0, 0}, {2, 0}, {0, 2}});
  CHECK(tri.area2() == 4);
  CHECK(tri.boundary_count() == 6);
  CHECK(tri.total_count() == 6);

  auto seg = LatticePolygon::from_points({{0, 0}, {3, 0}});
  CHECK(seg.area2() == 0);
  CHECK(seg.boundary_count() == 4);
  CHECK(seg.total_count() == 4);

  auto pt = LatticePolygon::from_points({{5, 7}});
  CHECK(pt.boundary_count() == 1);
  CHECK(pt.total_count() == 1);

  auto sq = LatticePolygon::from_points({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  CHECK(sq.area2() == 8);
  CHECK(sq.boundary_count() == 8);
  CHECK(sq.total_count() == 9);
}

TEST_CASE("omega length") {
  auto e21 = dom("ellipsoid:2,1");
  auto sq = LatticePolygon::from_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  // edges (1,0),(0,1),(-1,0),(0,-1): supports 2,1,0,0
  CHECK(sq.omega_length(e21).rat() == 3);
  // translation invariance
  auto sq2 = LatticePolygon::from_points({{3, 4}, {4, 4}, {4, 5}, {3, 5}});
  CHECK(sq2.omega_length(e21).rat() == 3);
  CHECK(sq2.normalized() == sq);
  // a segment is traversed both ways
  auto seg = LatticePolygon::from_points({{0, 0}, {0, 2}});
  CHECK(seg.omega_length(e21).rat() == 2);  // supports of (0,2) and (0,-2)
  auto pt = LatticePolygon::from_points({{1, 1}});
  CHECK(pt.omega_length(e21).rat() == 0);
}

TEST_CASE("word enumeration agrees with candidates") {
  auto e71 = dom("ellipsoid:7,1");
  CHECK(enumerate_words_min(e71, 7).value.rat() == 7);
  CHECK(enumerate_words_min(e71, 8).value.rat() == 7);
  auto p = dom("polydisk:2,1");
  for (long k = 1; k <= 6; ++k)
    CHECK(enumerate_words_min(p, k).value.eq(gt(p, k).value));
}

TEST_CASE("word enumeration respects the budget flag") {
  auto e21 = dom("ellipsoid:2,1");
  EnumerationBudget tight;
  tight.time_limit = 1e-9;
  auto cv = enumerate_words_min(e21, 8, tight);
  CHECK(cv.lower_bound_only);
  auto ok = enumerate_words_min(e21, 4);
  CHECK_FALSE(ok.lower_bound_only);
}

TEST_CASE("polygon enumeration, boundary count") {
  auto e71 = dom("ellipsoid:7,1");
  // two boundary points: the cheapest is the vertical unit segment
  auto cv = enumerate_polygons_min(e71, 2, CountKind::Boundary);
  CHECK(cv.value.rat() == 1);
  REQUIRE(!cv.poly_witnesses.empty());
  for (const auto& poly : cv.poly_witnesses)
    CHECK(poly.boundary_count() == 2);
}

TEST_CASE("polygon enumeration, total count") {
  auto e21 = dom("ellipsoid:2,1");
  auto cv = enumerate_polygons_min(e21, 9, CountKind::Total);
  CHECK(cv.value.rat() == 4);
  for (const auto& poly : cv.poly_witnesses) CHECK(poly.total_count() == 9);
}

TEST_CASE("classical ellipsoid ech sequence") {
  // round ball: 0,1,1,2,2,2,3,...
  CHECK(ech_ellipsoid_reference(1, 1, 0) == 0);
  CHECK(ech_ellipsoid_reference(1, 1, 1) == 1);
  CHECK(ech_ellipsoid_reference(1, 1, 2) == 1);
  CHECK(ech_ellipsoid_reference(1, 1, 3) == 2);
  CHECK(ech_ellipsoid_reference(1, 1, 6) == 3);
  CHECK(ech_ellipsoid_reference(2, 1, 8) == 4);
  CHECK(ech_ellipsoid_reference(7, 1, 11) == 9);
  CHECK(ech_ellipsoid_reference(Rat(3, 2), 1, 2) == Rat(3, 2));

  // ech on the panel ellipsoids matches the classical sequence
  for (long k = 0; k <= 10; ++k) {
    CHECK(ech(dom("ellipsoid:2,1"), k)
              .value.rat() == ech_ellipsoid_reference(2, 1, k));
    CHECK(ech(dom("ellipsoid:1,1"), k)
              .value.rat() == ech_ellipsoid_reference(1, 1, k));
  }
}

TEST_CASE("enumeration budget defaults") {
  auto b = EnumerationBudget::defaults_for(5);
  CHECK(b.max_coordinate == 6);
  CHECK(b.max_parts == 6);
  CHECK(b.bounding_box == 7);
}
