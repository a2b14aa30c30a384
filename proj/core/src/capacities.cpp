#include "toricap/capacities.hpp"

#include <algorithm>
#include <cmath>

#include "toricap/errors.hpp"
#include "toricap/oracle.hpp"

namespace toricap {

namespace {

Rat rat_ceil(const Rat& r) {
  BigInt q = numerator(r) / denominator(r);
  if (Rat(q) < r) ++q;
  return Rat(q);
}

Rat rat_floor(const Rat& r) {
  BigInt q = numerator(r) / denominator(r);
  if (Rat(q) > r) --q;
  return Rat(q);
}

// All canonical words whose action matches the value; used to attach
// witnesses to closed-form results (and to cross-check them in passing).
std::vector<Word> matching_witnesses(const ToricDomain& domain, long k,
                                     const Value& value) {
  std::vector<Word> out;
  for (const auto& w : canonical_candidates(k))
    if (action(w, domain).eq(value)) out.push_back(w);
  return out;
}

CapacityValue closed_with_witnesses(const ToricDomain& domain, long k,
                                    Value value) {
  CapacityValue cv;
  cv.value = value;
  cv.exact = value.is_exact();
  cv.method = Method::ClosedForm;
  cv.word_witnesses = matching_witnesses(domain, k, value);
  return cv;
}

}  // namespace

std::vector<std::string> CapacityValue::witness_strings() const {
  std::vector<std::string> out;
  for (const auto& w : word_witnesses) out.push_back(w.str());
  for (const auto& p : poly_witnesses) out.push_back(p.str());
  return out;
}

CapacityValue gt(const ToricDomain& domain, long k, Method method) {
  if (k < 1) throw BadParameter("k must be >= 1");
  switch (method) {
    case Method::Enumeration:
      return enumerate_words_min(domain, k);
    case Method::Lattice:
      return enumerate_polygons_min(domain, k + 1, CountKind::Boundary);
    case Method::Candidates:
      break;
    default:
      throw BadParameter("gt method must be candidates|enumeration|lattice");
  }
  CapacityValue cv;
  cv.method = Method::Candidates;
  bool first = true;
  for (const auto& w : canonical_candidates(k)) {
    Value act = action(w, domain);
    if (first || act.lt(cv.value)) {
      cv.value = act;
      cv.word_witnesses.clear();
      first = false;
    }
    if (act.eq(cv.value)) cv.word_witnesses.push_back(w);
  }
  std::sort(cv.word_witnesses.begin(), cv.word_witnesses.end());
  cv.word_witnesses.erase(
      std::unique(cv.word_witnesses.begin(), cv.word_witnesses.end()),
      cv.word_witnesses.end());
  cv.exact = cv.value.is_exact();
  return cv;
}

std::vector<CapacityValue> gt_sequence(const ToricDomain& domain, long kmax,
                                       Method method) {
  if (kmax < 1) throw BadParameter("kmax must be >= 1");
  std::vector<CapacityValue> out;
  out.reserve(kmax);
  for (long k = 1; k <= kmax; ++k) out.push_back(gt(domain, k, method));
  return out;
}

CapacityValue gh(const ToricDomain& domain, long k) {
  if (k < 1) throw BadParameter("k must be >= 1");
  CapacityValue cv;
  cv.method = Method::Candidates;
  bool first = true;
  for (long i = 0; i <= k; ++i) {
    Word w({elliptic(i, k - i)});
    Value act = domain.support({i, k - i});
    if (first || act.lt(cv.value)) {
      cv.value = act;
      cv.word_witnesses.clear();
      first = false;
    }
    if (act.eq(cv.value)) cv.word_witnesses.push_back(w);
  }
  cv.exact = cv.value.is_exact();
  return cv;
}

CapacityValue ech(const ToricDomain& domain, long k) {
  if (k < 0) throw BadParameter("k must be >= 0");
  if (k == 0) {
    CapacityValue cv;
    cv.value = Value::exact(0);
    cv.method = Method::Lattice;
    cv.poly_witnesses = {LatticePolygon::from_points({{0, 0}})};
    return cv;
  }
  return enumerate_polygons_min(domain, k + 1, CountKind::Total);
}

CapacityValue gt_capped(const ToricDomain& domain, long k, long ell) {
  if (k < 1 || ell < 1) throw BadParameter("k and ell must be >= 1");
  if (ell == 1) return gh(domain, k);
  EnumerationBudget budget = EnumerationBudget::defaults_for(k);
  budget.max_parts = ell;
  CapacityValue cv = enumerate_words_min(domain, k, budget);
  cv.experimental = true;  // conjectural for 2 <= ell < infinity
  return cv;
}

CapacityValue closed_form_ellipsoid(const Rat& a, long k) {
  if (a < 1) throw BadParameter("ellipsoid closed form needs a >= 1");
  if (k < 1) throw BadParameter("k must be >= 1");
  auto small = [&](long kk) -> Rat {
    long i = (kk - 1) / 3;
    switch ((kk - 1) % 3) {
      case 0: return 1 + i * a;
      case 1: return (i + 1) * a;
      default: return 2 + i * a;
    }
  };
  auto large = [&](long kk) -> Rat {
    long fl = static_cast<long>(rat_floor(a));
    long ce = static_cast<long>(rat_ceil(a));
    if (kk <= fl) return Rat(kk);
    long d = kk - ce;
    if (d % 2 == 0) return a + d / 2;
    return Rat(ce + d / 2);
  };
  Rat v;
  if (a < Rat(3, 2)) {
    v = small(k);
  } else if (a > Rat(3, 2)) {
    v = large(k);
  } else {
    v = small(k);
    if (v != large(k)) throw ToricError("ellipsoid branch mismatch at a=3/2");
  }
  auto domain = ToricDomain::validate(ToricDomainSpec::ellipsoid(a, 1));
  return closed_with_witnesses(domain, k, Value::exact(v));
}

CapacityValue closed_form_polydisk(const Rat& a, long k) {
  if (a < 1) throw BadParameter("polydisk closed form needs a >= 1");
  if (k < 1) throw BadParameter("k must be >= 1");
  Rat v = std::min(Rat(k), Rat(a + (k - 1) / 2 + (k - 1) % 2));
  auto domain = ToricDomain::validate(ToricDomainSpec::polydisk(a, 1));
  return closed_with_witnesses(domain, k, Value::exact(v));
}

CapacityValue closed_form_quad(const Rat& a, const Rat& b, const Rat& c,
                               long k) {
  if (k < 1) throw BadParameter("k must be >= 1");
  auto domain =
      ToricDomain::validate(ToricDomainSpec::quadrilateral(a, b, c));
  if (c < 1) throw BadParameter("quad closed form needs c >= 1");
  Rat M = std::max(Rat(a + b), c);
  if (M > 2) throw OutOfClosedFormRange("quad closed form needs max(a+b,c) <= 2");

  auto base = [&](long kk) -> Rat {
    switch (kk) {
      case 1: return 1;
      case 2: return M;
      case 3: return std::min(std::max(Rat(2), Rat(a + 2 * b)), Rat(1 + c));
      default: return 1 + M;  // kk == 4
    }
  };
  auto period3 = [&](long kk) -> Rat {
    long steps = kk >= 7 ? (kk - 4) / 3 : 0;  // g_{k+3} = g_k + M from k >= 4
    kk -= 3 * steps;
    Rat v = kk == 5 ? Rat(2 * M) : kk == 6 ? Rat(2 + M) : base(kk);
    return v + steps * M;
  };
  auto period2 = [&](long kk) -> Rat {
    long steps = kk >= 6 ? (kk - 4) / 2 : 0;  // g_{k+2} = g_k + 1 from k >= 4
    kk -= 2 * steps;
    Rat v = kk == 5 ? std::min({std::max(Rat(3), Rat(1 + a + 2 * b)),
                                Rat(2 * M), Rat(2 + c)})
                    : base(kk);
    return v + steps;
  };
  Rat v;
  if (M < Rat(3, 2)) {
    v = period3(k);
  } else if (M > Rat(3, 2)) {
    v = period2(k);
  } else {
    v = period3(k);
    if (v != period2(k)) throw ToricError("quad branch mismatch at M=3/2");
  }
  return closed_with_witnesses(domain, k, Value::exact(v));
}

CapacityValue closed_form_lp(const Rat& p, bool p_infinite, long k) {
  if (k < 1) throw BadParameter("k must be >= 1");
  if (!p_infinite && p < 1) throw BadParameter("p must be >= 1");
  // t = 2^(1/q) with q dual to p; exact at the endpoints p = 1, infinity
  Value t;
  if (p_infinite)
    t = Value::exact(2);  // q = 1
  else if (p == 1)
    t = Value::exact(1);  // q = infinity
  else {
    double pd = static_cast<double>(p);
    t = Value::approx(std::pow(2.0, 1.0 - 1.0 / pd));
  }
  double p_star = std::log(2.0) / std::log(4.0 / 3.0);
  bool small = !p_infinite && static_cast<double>(p) <= p_star;
  Value v;
  if (small) {
    long i = (k - 1) / 3;
    switch ((k - 1) % 3) {
      case 0: v = Value::exact(1) + t.scaled(i); break;
      case 1: v = t.scaled(i + 1); break;
      default: v = Value::exact(2) + t.scaled(i); break;
    }
  } else {
    long i = (k - 1) / 2;
    if ((k - 1) % 2 == 0)
      v = Value::exact(1 + i);
    else
      v = t + Value::exact(i);
  }
  auto domain = ToricDomain::validate(
      p_infinite ? ToricDomainSpec::lp_ball_inf() : ToricDomainSpec::lp_ball(p));
  return closed_with_witnesses(domain, k, v);
}

std::optional<CapacityValue> closed_form(const ToricDomain& domain, long k) {
  const auto& s = domain.spec();
  auto rescale = [&](CapacityValue cv, const Rat& mu) {
    cv.value = cv.value.scaled(mu);
    cv.exact = cv.value.is_exact();
    // witnesses were found on the unit-normalized domain; recompute here
    cv.word_witnesses = matching_witnesses(domain, k, cv.value);
    return cv;
  };
  switch (s.kind) {
    case DomainKind::Ellipsoid: {
      Rat lo = std::min(s.a, s.b), hi = std::max(s.a, s.b);
      return rescale(closed_form_ellipsoid(hi / lo, k), lo);
    }
    case DomainKind::Polydisk: {
      Rat lo = std::min(s.a, s.b), hi = std::max(s.a, s.b);
      return rescale(closed_form_polydisk(hi / lo, k), lo);
    }
    case DomainKind::Quadrilateral: {
      if (s.c < 1 || std::max(Rat(s.a + s.b), s.c) > 2) return std::nullopt;
      return rescale(closed_form_quad(s.a, s.b, s.c, k), 1);
    }
    case DomainKind::LpBall:
      return rescale(closed_form_lp(s.p, s.p_infinite, k), s.scale);
    case DomainKind::Polygon:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace toricap
