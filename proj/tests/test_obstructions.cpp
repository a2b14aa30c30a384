#include "doctest.h"
#include "toricap/obstructions.hpp"

#include <cmath>

using namespace toricap;

namespace {
ToricDomain dom(const std::string& s) {
  return ToricDomain::validate(parse_domain_spec(s));
}
}  // namespace

TEST_CASE("family bounds for E(1,7) -> E(1,2)") {
  auto src = dom("ellipsoid:1,7");
  auto tgt = dom("ellipsoid:1,2");

  auto gt_b = embedding_lower_bound(src, tgt, Family::Gt, 12);
  CHECK(gt_b.mu.rat() == Rat(7, 4));
  CHECK(gt_b.witness_k == 7);
  CHECK_FALSE(gt_b.still_increasing);

  auto gh_b = embedding_lower_bound(src, tgt, Family::Gh, 50);
  CHECK(gh_b.mu.rat() == Rat(3, 2));
  CHECK(gh_b.witness_k == 3);
  CHECK_FALSE(gh_b.still_increasing);

  auto ech_b = embedding_lower_bound(src, tgt, Family::Ech, 12);
  CHECK(ech_b.mu.rat() == Rat(9, 5));
  CHECK(ech_b.witness_k == 11);

  CHECK(gt_b.source_prefix.size() == 12);
  CHECK(gt_b.source_prefix[6].rat() == 7);
  CHECK(gt_b.target_prefix[6].rat() == 4);
}

TEST_CASE("volume bound") {
  auto src = dom("ellipsoid:1,7");
  auto tgt = dom("ellipsoid:1,2");
  Value v = volume_bound(src, tgt);
  CHECK_FALSE(v.is_exact());  // 7/2 is not a rational square
  CHECK(v.dbl() == doctest::Approx(std::sqrt(3.5)));

  // exact when the ratio is a square
  CHECK(volume_bound(dom("ellipsoid:2,2"), dom("ellipsoid:1,1")).is_exact());
  CHECK(volume_bound(dom("ellipsoid:2,2"), dom("ellipsoid:1,1")).rat() == 2);
  CHECK(volume_bound(src, src).rat() == 1);
  CHECK(volume_bound(dom("polydisk:9/4,1"), dom("polydisk:1,1")).rat() ==
        Rat(3, 2));
}

TEST_CASE("sharp ratio formulas") {
  CHECK(sharp_ellipsoid_mu(7, 2) == Rat(7, 4));
  CHECK(sharp_ellipsoid_mu(2, 1) == 2);
  CHECK(sharp_ellipsoid_mu(3, 2) == Rat(3, 2));
  CHECK_THROWS_AS(sharp_ellipsoid_mu(4, 2), BadParameter);  // same parity
  CHECK_THROWS_AS(sharp_ellipsoid_mu(2, 2), BadParameter);
  CHECK(sharp_polydisk_mu(5, 2) == Rat(5, 4));
  CHECK(sharp_polydisk_mu(3, 1) == Rat(3, 2));
  CHECK_THROWS_AS(sharp_polydisk_mu(4, 2), BadParameter);  // even a
  CHECK_THROWS_AS(sharp_polydisk_mu(1, 2), BadParameter);  // a < 2b-1
}

TEST_CASE("sharp ratios are attained by the capacity maxima") {
  // ellipsoid targets
  for (auto [a, b] : {std::pair<long, long>{3, 2}, {5, 2}, {7, 2}, {6, 3}}) {
    auto src = ToricDomain::validate(ToricDomainSpec::ellipsoid(a, 1));
    auto tgt = ToricDomain::validate(ToricDomainSpec::ellipsoid(b, 1));
    auto fb = embedding_lower_bound(src, tgt, Family::Gt, 8 * a);
    CHECK(fb.mu.rat() == sharp_ellipsoid_mu(a, b));
  }
  // polydisk targets
  for (auto [a, b] : {std::pair<long, long>{3, 1}, {5, 2}, {7, 2}}) {
    auto src = ToricDomain::validate(ToricDomainSpec::ellipsoid(a, 1));
    auto tgt = ToricDomain::validate(ToricDomainSpec::polydisk(b, 1));
    auto fb = embedding_lower_bound(src, tgt, Family::Gt, 8 * a);
    CHECK(fb.mu.rat() == sharp_polydisk_mu(a, b));
  }
}

TEST_CASE("report") {
  auto rep = report(dom("ellipsoid:1,7"), dom("ellipsoid:1,2"), 12);
  REQUIRE(rep.bounds.size() == 3);
  CHECK(rep.bounds[0].family == Family::Gt);
  CHECK(rep.bounds[0].mu.rat() == Rat(7, 4));
  CHECK(rep.bounds[1].family == Family::Gh);
  CHECK(rep.bounds[2].family == Family::Ech);
  CHECK(rep.bounds[2].mu.rat() == Rat(9, 5));
  CHECK(rep.kmax == 12);
  REQUIRE(rep.sharpness.has_value());
  CHECK(rep.sharpness->formula_mu.rat() == Rat(7, 4));
  CHECK(rep.sharpness->attained);

  // default kmax: 4 * ceil(xmax + ymax) of the source
  auto auto_rep = report(dom("ellipsoid:2,1"), dom("ellipsoid:1,1"));
  CHECK(auto_rep.kmax == 12);
  // the sharp ellipsoid formula is only quoted for targets E(b,1), b >= 2
  CHECK_FALSE(auto_rep.sharpness.has_value());
}

TEST_CASE("report sharpness detection") {
  auto rep = report(dom("ellipsoid:3,1"), dom("ellipsoid:2,1"), 12);
  REQUIRE(rep.sharpness.has_value());
  CHECK(rep.sharpness->formula_mu.rat() == Rat(3, 2));
  CHECK(rep.sharpness->attained);
  CHECK(rep.bounds[0].mu.rat() == Rat(3, 2));
  // polydisk target
  auto rp = report(dom("ellipsoid:5,1"), dom("polydisk:2,1"), 12);
  REQUIRE(rp.sharpness.has_value());
  CHECK(rp.sharpness->formula_mu.rat() == Rat(5, 4));
  CHECK(rp.sharpness->attained);
  // no formula for fractional source
  auto rn = report(dom("ellipsoid:5/2,1"), dom("ellipsoid:1,1"), 12);
  CHECK_FALSE(rn.sharpness.has_value());
}
