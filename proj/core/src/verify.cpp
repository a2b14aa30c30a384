#include "toricap/verify.hpp"

#include <random>
#include <sstream>

#include "toricap/capacities.hpp"
#include "toricap/errors.hpp"
#include "toricap/obstructions.hpp"
#include "toricap/oracle.hpp"
#include "toricap/words.hpp"

namespace toricap {

namespace {

// Deterministic draws; modulo keeps results identical across platforms,
// unlike uniform_int_distribution.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  long below(long n) { return static_cast<long>(gen() % n); }
  Rat rat(const Rat& lo, const Rat& hi, long grid = 100) {
    return lo + (hi - lo) * Rat(below(grid + 1), grid);
  }
};

std::string describe(const ToricDomain& d) {
  return domain_spec_str(d.spec());
}

}  // namespace

void VerifyResult::check(bool cond, const std::string& what) {
  ++checks;
  if (!cond) failures.push_back(what);
}

std::vector<ToricDomain> panel_domains() {
  std::vector<ToricDomain> panel;
  auto add = [&](ToricDomainSpec s) {
    panel.push_back(ToricDomain::validate(std::move(s)));
  };
  add(ToricDomainSpec::ellipsoid(1, 1));
  add(ToricDomainSpec::ellipsoid(2, 1));
  add(ToricDomainSpec::polydisk(2, 1));
  add(ToricDomainSpec::polydisk(Rat(3, 2), 1));
  add(ToricDomainSpec::quadrilateral(1, Rat(1, 2), Rat(3, 2)));
  add(ToricDomainSpec::quadrilateral(1, Rat(1, 4), Rat(5, 4)));
  add(ToricDomainSpec::quadrilateral(Rat(3, 2), Rat(3, 4), 2));
  add(ToricDomainSpec::lp_ball(1));
  add(ToricDomainSpec::lp_ball(2));
  add(ToricDomainSpec::lp_ball_inf());
  return panel;
}

ToricDomain random_polygon_domain(std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Rat maxx = rng.rat(1, 5, 16), maxy = rng.rat(1, 5, 16);
    std::vector<RatPoint> pts{{0, 0}, {maxx, 0}, {0, maxy}};
    long extra = 1 + rng.below(4);
    for (long i = 0; i < extra; ++i)
      pts.push_back({rng.rat(0, maxx, 16), rng.rat(0, maxy, 16)});
    try {
      return ToricDomain::validate(ToricDomainSpec::polygon(std::move(pts)));
    } catch (const ToricError&) {
      // rare; reroll deterministically from the same stream
    }
  }
  return ToricDomain::validate(ToricDomainSpec::ellipsoid(1, 1));
}

VerifyResult verify_tables() {
  VerifyResult res;
  res.suite = "tables";
  struct Row {
    const char* name;
    ToricDomainSpec spec;
    Family family;
    std::vector<long> expect;
  };
  const std::vector<Row> rows = {
      {"gt E(1,7)", ToricDomainSpec::ellipsoid(1, 7), Family::Gt,
       {1, 2, 3, 4, 5, 6, 7, 7, 8, 8, 9, 9}},
      {"gt E(1,2)", ToricDomainSpec::ellipsoid(1, 2), Family::Gt,
       {1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7}},
      {"gh E(1,7)", ToricDomainSpec::ellipsoid(1, 7), Family::Gh,
       {1, 2, 3, 4, 5, 6, 7, 7, 8, 9, 10, 11}},
      {"gh E(1,2)", ToricDomainSpec::ellipsoid(1, 2), Family::Gh,
       {1, 2, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8}},
      {"ech E(1,7)", ToricDomainSpec::ellipsoid(1, 7), Family::Ech,
       {1, 2, 3, 4, 5, 6, 7, 7, 8, 8, 9, 9}},
      {"ech E(1,2)", ToricDomainSpec::ellipsoid(1, 2), Family::Ech,
       {1, 2, 2, 3, 3, 4, 4, 4, 5, 5, 5, 6}},
  };
  for (const auto& row : rows) {
    auto domain = ToricDomain::validate(row.spec);
    for (long k = 1; k <= static_cast<long>(row.expect.size()); ++k) {
      CapacityValue cv = row.family == Family::Gt   ? gt(domain, k)
                         : row.family == Family::Gh ? gh(domain, k)
                                                    : ech(domain, k);
      std::ostringstream what;
      what << row.name << " k=" << k << " expected " << row.expect[k - 1]
           << " got " << cv.value.str();
      res.check(cv.value.is_exact() && cv.value.rat() == row.expect[k - 1],
                what.str());
      res.check(!cv.word_witnesses.empty() || !cv.poly_witnesses.empty(),
                std::string(row.name) + " missing witnesses");
    }
  }
  return res;
}

VerifyResult verify_closed_forms(long samples, std::uint64_t seed, long kmax) {
  VerifyResult res;
  res.suite = "closed-forms";
  Rng rng(seed);
  for (long s = 0; s < samples; ++s) {
    ToricDomainSpec spec;
    switch (rng.below(4)) {
      case 0:
        spec = ToricDomainSpec::ellipsoid(rng.rat(1, 10), 1);
        break;
      case 1:
        spec = ToricDomainSpec::polydisk(rng.rat(1, 10), 1);
        break;
      case 2: {
        // uniform over the valid quadrilateral region with max(a+b,c) <= 2
        for (;;) {
          Rat c = rng.rat(1, 2, 64);
          Rat b = rng.rat(Rat(1, 64), 1, 63);
          Rat a = rng.rat(Rat(1, 64), c, 63);
          if (a + b * c >= c && a + b <= 2) {
            spec = ToricDomainSpec::quadrilateral(a, b, c);
            break;
          }
        }
        break;
      }
      default:
        if (rng.below(10) == 0)
          spec = ToricDomainSpec::lp_ball_inf();
        else
          spec = ToricDomainSpec::lp_ball(rng.rat(1, 10));
        break;
    }
    auto domain = ToricDomain::validate(spec);
    for (long k = 1; k <= kmax; ++k) {
      auto cf = closed_form(domain, k);
      if (!cf) {
        res.check(false, describe(domain) + " has no closed form");
        break;
      }
      CapacityValue opt = gt(domain, k);
      std::ostringstream what;
      what << describe(domain) << " k=" << k << " closed form "
           << cf->value.str() << " vs optimizer " << opt.value.str();
      if (domain.exact_mode())
        res.check(cf->value.is_exact() && opt.value.is_exact() &&
                      cf->value.rat() == opt.value.rat(),
                  what.str());
      else
        res.check(cf->value.eq(opt.value), what.str());
    }
  }
  return res;
}

VerifyResult verify_oracles(long kmax, long ech_kmax) {
  VerifyResult res;
  res.suite = "oracles";
  for (const auto& domain : panel_domains()) {
    for (long k = 1; k <= kmax; ++k) {
      CapacityValue a = gt(domain, k, Method::Candidates);
      CapacityValue b = gt(domain, k, Method::Enumeration);
      CapacityValue c = gt(domain, k, Method::Lattice);
      std::ostringstream what;
      what << describe(domain) << " k=" << k << ": candidates "
           << a.value.str() << " enumeration " << b.value.str() << " lattice "
           << c.value.str();
      res.check(a.value.eq(b.value) && b.value.eq(c.value), what.str());
    }
  }
  const std::pair<long, long> ratios[] = {{1, 1}, {3, 2}, {2, 1}, {7, 1}};
  for (auto [p, q] : ratios) {
    auto domain = ToricDomain::validate(ToricDomainSpec::ellipsoid(p, q));
    for (long k = 0; k <= ech_kmax; ++k) {
      Rat expect = ech_ellipsoid_reference(p, q, k);
      CapacityValue got = ech(domain, k);
      std::ostringstream what;
      what << "ech E(" << p << "," << q << ") k=" << k << " expected "
           << rat_str(expect) << " got " << got.value.str();
      res.check(got.value.is_exact() && got.value.rat() == expect, what.str());
    }
  }
  return res;
}

VerifyResult verify_invariants(long samples, std::uint64_t seed) {
  VerifyResult res;
  res.suite = "invariants";
  Rng rng(seed);
  const long kcap = 10;
  for (long s = 0; s < samples; ++s) {
    ToricDomain d = random_polygon_domain(seed * 1000003 + s);
    std::string name = describe(d);

    // support-norm identities on random integer vectors
    for (int t = 0; t < 8; ++t) {
      IVec v{rng.below(7) - 1, rng.below(7) - 1};
      IVec w{rng.below(7) - 1, rng.below(7) - 1};
      Value sv = d.support(v), sw = d.support(w);
      res.check(d.support({std::max(v.x, 0l), std::max(v.y, 0l)}).eq(sv),
                name + " clamp identity");
      res.check(d.support({v.x + w.x, v.y + w.y})
                    .le(d.support({std::max(v.x, 0l) + std::max(w.x, 0l),
                                   std::max(v.y, 0l) + std::max(w.y, 0l)})),
                name + " clamp monotonicity");
      IVec vp{std::max(v.x, 0l), std::max(v.y, 0l)};
      IVec wp{std::max(w.x, 0l), std::max(w.y, 0l)};
      res.check(d.support({vp.x + wp.x, vp.y + wp.y})
                    .le(d.support(vp) + d.support(wp)),
                name + " subadditivity");
      res.check(d.support(vp).le(d.support({vp.x + wp.x, vp.y + wp.y})),
                name + " componentwise monotonicity");
      long n = 1 + rng.below(4);
      res.check(d.support({n * vp.x, n * vp.y}).eq(d.support(vp).scaled(n)),
                name + " homogeneity");
    }
    IVec ij{1 + rng.below(5), 1 + rng.below(5)};
    res.check(d.support({ij.x, 0}).le(d.support(ij)) &&
                  d.support({0, ij.y}).le(d.support(ij)) &&
                  d.support(ij).le(d.support({ij.x, 0}) +
                                   d.support({0, ij.y})),
              name + " axis sandwich");

    std::vector<Value> gts, ghs, echs;
    for (long k = 1; k <= kcap; ++k) {
      gts.push_back(gt(d, k).value);
      ghs.push_back(gh(d, k).value);
      echs.push_back(ech(d, k).value);
    }
    for (long k = 1; k <= kcap; ++k) {
      std::ostringstream what;
      what << name << " k=" << k;
      if (k >= 2) {
        res.check(gts[k - 2].le(gts[k - 1]), what.str() + " gt nondecreasing");
        res.check(ghs[k - 2].le(ghs[k - 1]), what.str() + " gh nondecreasing");
        res.check(echs[k - 2].le(echs[k - 1]),
                  what.str() + " ech nondecreasing");
      }
      res.check(echs[k - 1].le(gts[k - 1]) && gts[k - 1].le(ghs[k - 1]),
                what.str() + " ech <= gt <= gh");
    }
    for (long q : {2L, 3L})
      for (long k = 1; k <= 5; ++k) {
        std::ostringstream what;
        what << name << " gt(" << q * k << ") <= " << q << "*gt(" << k << ")";
        res.check(gt(d, q * k).value.le(gts[k - 1].scaled(q)), what.str());
      }

    Rat mu = rng.rat(Rat(1, 2), 3, 12);
    ToricDomain scaled = d.scaled(mu);
    ToricDomain flipped = d.transposed();
    for (long k : {1L, 2L, 3L, 5L, 8L}) {
      res.check(gt(scaled, k).value.eq(gts[k - 1].scaled(mu)),
                name + " gt scaling");
      res.check(gh(scaled, k).value.eq(ghs[k - 1].scaled(mu)),
                name + " gh scaling");
      res.check(ech(scaled, k).value.eq(echs[k - 1].scaled(mu)),
                name + " ech scaling");
      res.check(gt(flipped, k).value.eq(gts[k - 1]), name + " gt transpose");
      res.check(gh(flipped, k).value.eq(ghs[k - 1]), name + " gh transpose");
      res.check(ech(flipped, k).value.eq(echs[k - 1]), name + " ech transpose");
    }

    // a superset domain: same polygon plus extra points in a larger box
    std::vector<RatPoint> bigger = d.hull();
    Rat bx = d.xmax() + rng.rat(0, 2, 8), by = d.ymax() + rng.rat(0, 2, 8);
    bigger.push_back({bx, 0});
    bigger.push_back({0, by});
    bigger.push_back({rng.rat(0, bx, 8), rng.rat(0, by, 8)});
    try {
      ToricDomain outer =
          ToricDomain::validate(ToricDomainSpec::polygon(bigger));
      for (long k : {1L, 2L, 4L, 7L}) {
        res.check(gts[k - 1].le(gt(outer, k).value),
                  name + " gt inclusion monotonicity");
        res.check(ghs[k - 1].le(gh(outer, k).value),
                  name + " gh inclusion monotonicity");
        res.check(echs[k - 1].le(ech(outer, k).value),
                  name + " ech inclusion monotonicity");
      }
    } catch (const ToricError&) {
      // the enlarged vertex set may fail symmetrization convexity; skip
    }
  }
  return res;
}

VerifyResult verify_reduction(long samples, std::uint64_t seed,
                              long max_weight) {
  VerifyResult res;
  res.suite = "reduction";
  Rng rng(seed);
  auto panel = panel_domains();
  for (long s = 0; s < samples; ++s) {
    // random weakly permissible word, hyperbolic orbits drawn in pairs so
    // the index stays even
    std::vector<Orbit> orbits;
    long weight = 0;
    long parts = 1 + rng.below(4);
    for (long t = 0; t < parts && weight < max_weight; ++t) {
      long w = 1 + rng.below(max_weight - weight);
      long i = rng.below(w + 1);
      orbits.push_back(elliptic(i, w - i));
      weight += w;
    }
    std::vector<std::size_t> mixed;
    for (std::size_t t = 0; t < orbits.size(); ++t)
      if (orbits[t].i >= 1 && orbits[t].j >= 1) mixed.push_back(t);
    if (mixed.size() >= 2 && rng.below(2) == 0) {
      orbits[mixed[0]].kind = OrbitKind::Hyperbolic;
      orbits[mixed[1]].kind = OrbitKind::Hyperbolic;
    }
    Word w(orbits);
    if (!is_weakly_permissible(w)) {
      --s;  // reroll; the stream stays deterministic
      continue;
    }
    const ToricDomain& d = panel[rng.below(panel.size())];
    std::string name = describe(d) + " " + w.str();
    try {
      Word r = reduce(w, d);
      res.check(word_index(r) == word_index(w), name + " index preserved");
      res.check(action(r, d).le(action(w, d)), name + " action nonincreasing");
      res.check(is_canonical_either_orientation(r), name + " canonical form");
    } catch (const ToricError& e) {
      res.check(false, name + " reduce threw: " + e.what());
    }
  }
  // canonical minimum equals the exhaustive minimum at every index
  for (const auto& d : panel)
    for (long k = 1; k <= 8; ++k) {
      CapacityValue a = gt(d, k, Method::Candidates);
      CapacityValue b = gt(d, k, Method::Enumeration);
      std::ostringstream what;
      what << describe(d) << " k=" << k << " canonical min " << a.value.str()
           << " vs exhaustive " << b.value.str();
      res.check(a.value.eq(b.value), what.str());
    }
  return res;
}

VerifyResult verify_sharpness(long amax, long bmax_polydisk) {
  VerifyResult res;
  res.suite = "sharpness";
  // ellipsoid targets need b >= 2: against the ball the capacity ratio
  // overshoots the formula (E(6,1)/E(1,1) at k=8 gives 7/3 > 2)
  for (long a = 3; a <= amax; ++a)
    for (long b = 2; b < a; ++b) {
      if ((a + b) % 2 == 0) continue;
      auto src = ToricDomain::validate(ToricDomainSpec::ellipsoid(a, 1));
      auto tgt = ToricDomain::validate(ToricDomainSpec::ellipsoid(b, 1));
      FamilyBound fb = embedding_lower_bound(src, tgt, Family::Gt, 2 * a);
      Rat expect = sharp_ellipsoid_mu(a, b);
      std::ostringstream what;
      what << "E(" << a << ",1)->E(" << b << ",1) ratio " << fb.mu.str()
           << " formula " << rat_str(expect);
      res.check(fb.mu.is_exact() && fb.mu.rat() == expect, what.str());
    }
  for (long b = 1; b <= bmax_polydisk; ++b)
    for (long a = std::max(2 * b - 1, 1l); a <= amax; a += 2) {
      if (a % 2 == 0) continue;
      auto src = ToricDomain::validate(ToricDomainSpec::ellipsoid(a, 1));
      auto tgt = ToricDomain::validate(ToricDomainSpec::polydisk(b, 1));
      FamilyBound fb = embedding_lower_bound(src, tgt, Family::Gt, 2 * a);
      Rat expect = sharp_polydisk_mu(a, b);
      std::ostringstream what;
      what << "E(" << a << ",1)->P(" << b << ",1) ratio " << fb.mu.str()
           << " formula " << rat_str(expect);
      res.check(fb.mu.is_exact() && fb.mu.rat() == expect, what.str());
    }
  return res;
}

}  // namespace toricap
