#include "toricap/obstructions.hpp"

#include <cmath>

#include "toricap/errors.hpp"

namespace toricap {

namespace {

Rat rat_ceil(const Rat& r) {
  BigInt q = numerator(r) / denominator(r);
  if (Rat(q) < r) ++q;
  return Rat(q);
}

Value capacity(const ToricDomain& domain, Family family, long k) {
  switch (family) {
    case Family::Gt: return gt(domain, k).value;
    case Family::Gh: return gh(domain, k).value;
    case Family::Ech: return ech(domain, k).value;
  }
  throw BadParameter("unknown capacity family");
}

// Is the spec E(a,1) or P(a,1) up to axis order? Returns a on success.
bool normalized_pair(const ToricDomainSpec& s, DomainKind kind, Rat& a) {
  if (s.kind != kind) return false;
  if (s.b == 1) {
    a = s.a;
    return a >= 1;
  }
  if (s.a == 1) {
    a = s.b;
    return a >= 1;
  }
  return false;
}

bool is_integer(const Rat& r) { return denominator(r) == 1; }

}  // namespace

std::string family_str(Family f) {
  switch (f) {
    case Family::Gt: return "gt";
    case Family::Gh: return "gh";
    case Family::Ech: return "ech";
  }
  return "?";
}

FamilyBound embedding_lower_bound(const ToricDomain& source,
                                  const ToricDomain& target, Family family,
                                  long kmax) {
  if (kmax < 1) throw BadParameter("kmax must be >= 1");
  FamilyBound fb;
  fb.family = family;
  for (long k = 1; k <= kmax; ++k) {
    Value cs = capacity(source, family, k);
    Value ct = capacity(target, family, k);
    fb.source_prefix.push_back(cs);
    fb.target_prefix.push_back(ct);
    Value ratio = cs / ct;
    if (fb.witness_k == 0 || fb.mu.lt(ratio)) {
      fb.mu = ratio;
      fb.witness_k = k;
    }
  }
  fb.still_increasing = fb.witness_k == kmax;
  return fb;
}

Value volume_bound(const ToricDomain& source, const ToricDomain& target) {
  Value ratio = source.area() / target.area();
  if (ratio.is_exact()) {
    Rat root;
    if (rational_sqrt(ratio.rat(), root)) return Value::exact(root);
  }
  return Value::approx(std::sqrt(ratio.dbl()));
}

Rat sharp_ellipsoid_mu(long a, long b) {
  if (b < 1 || a < b + 1 || (a + b) % 2 == 0)
    throw BadParameter(
        "sharp ellipsoid ratio needs integers a >= b+1 of opposite parity");
  return Rat(2 * a, a + b - 1);
}

Rat sharp_polydisk_mu(long a, const Rat& b) {
  if (b < 1 || a % 2 == 0 || Rat(a) < 2 * b - 1)
    throw BadParameter(
        "sharp polydisk ratio needs odd a >= 2b-1 and rational b >= 1");
  return Rat(2 * a) / (a + 2 * b - 1);
}

ObstructionReport report(const ToricDomain& source, const ToricDomain& target,
                         long kmax) {
  if (kmax == 0)
    kmax = static_cast<long>(
        Rat(4 * rat_ceil(source.xmax() + source.ymax())));
  ObstructionReport rep;
  rep.source = source.spec();
  rep.target = target.spec();
  rep.kmax = kmax;
  for (Family f : {Family::Gt, Family::Gh, Family::Ech})
    rep.bounds.push_back(embedding_lower_bound(source, target, f, kmax));
  rep.volume = volume_bound(source, target);
  rep.volume_exact = rep.volume.is_exact();

  // sharp stabilized formulas apply to E(a,1) sources with integer a
  Rat a, b;
  if (normalized_pair(source.spec(), DomainKind::Ellipsoid, a) &&
      is_integer(a)) {
    long ai = static_cast<long>(a);
    if (normalized_pair(target.spec(), DomainKind::Ellipsoid, b) &&
        is_integer(b) && b >= 2 && ai >= static_cast<long>(b) + 1 &&
        (ai + static_cast<long>(b)) % 2 == 1) {
      Sharpness s;
      s.formula_mu = Value::exact(sharp_ellipsoid_mu(ai, static_cast<long>(b)));
      s.attained = rep.bounds[0].mu.eq(s.formula_mu);
      rep.sharpness = s;
    } else if (normalized_pair(target.spec(), DomainKind::Polydisk, b) &&
               ai % 2 == 1 && Rat(ai) >= 2 * b - 1) {
      Sharpness s;
      s.formula_mu = Value::exact(sharp_polydisk_mu(ai, b));
      s.attained = rep.bounds[0].mu.eq(s.formula_mu);
      rep.sharpness = s;
    }
  }
  return rep;
}

}  // namespace toricap
