#include "toricap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace toricap {

namespace {

long clamp_nonneg(long v) { return v < 0 ? 0 : v; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

void require_positive(const Rat& r, const char* name) {
  if (r <= 0) throw BadParameter(std::string(name) + " must be positive");
}

}  // namespace

Rat cross(const RatPoint& o, const RatPoint& a, const RatPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<RatPoint> convex_hull(std::vector<RatPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const RatPoint& p, const RatPoint& q) {
    return p.x != q.x ? p.x < q.x : p.y < q.y;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<RatPoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {  // lower chain
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {  // upper chain
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;  // ccw, no collinear vertices
}

Rat polygon_area2(const std::vector<RatPoint>& ccw_hull) {
  Rat s = 0;
  for (std::size_t i = 0; i < ccw_hull.size(); ++i) {
    const auto& p = ccw_hull[i];
    const auto& q = ccw_hull[(i + 1) % ccw_hull.size()];
    s += p.x * q.y - q.x * p.y;
  }
  return s;
}

ToricDomainSpec ToricDomainSpec::polygon(std::vector<RatPoint> vs) {
  ToricDomainSpec s;
  s.kind = DomainKind::Polygon;
  s.vertices = std::move(vs);
  return s;
}
ToricDomainSpec ToricDomainSpec::ellipsoid(Rat a, Rat b) {
  ToricDomainSpec s;
  s.kind = DomainKind::Ellipsoid;
  s.a = std::move(a);
  s.b = std::move(b);
  return s;
}
ToricDomainSpec ToricDomainSpec::polydisk(Rat a, Rat b) {
  ToricDomainSpec s;
  s.kind = DomainKind::Polydisk;
  s.a = std::move(a);
  s.b = std::move(b);
  return s;
}
ToricDomainSpec ToricDomainSpec::quadrilateral(Rat a, Rat b, Rat c) {
  ToricDomainSpec s;
  s.kind = DomainKind::Quadrilateral;
  s.a = std::move(a);
  s.b = std::move(b);
  s.c = std::move(c);
  return s;
}
ToricDomainSpec ToricDomainSpec::lp_ball(Rat p, Rat scale) {
  ToricDomainSpec s;
  s.kind = DomainKind::LpBall;
  s.p = std::move(p);
  s.scale = std::move(scale);
  return s;
}
ToricDomainSpec ToricDomainSpec::lp_ball_inf(Rat scale) {
  ToricDomainSpec s;
  s.kind = DomainKind::LpBall;
  s.p_infinite = true;
  s.scale = std::move(scale);
  return s;
}

ToricDomainSpec parse_domain_spec(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ParseError("domain spec '" + text + "' has no ':'");
  std::string kind = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  if (kind == "polygon") {
    std::vector<RatPoint> vs;
    for (const auto& part : split(rest, ';')) {
      auto xy = split(part, ',');
      if (xy.size() != 2)
        throw ParseError("polygon vertex '" + part + "' is not X,Y");
      vs.push_back({parse_rat(xy[0]), parse_rat(xy[1])});
    }
    return ToricDomainSpec::polygon(std::move(vs));
  }
  auto args = split(rest, ',');
  if (kind == "ellipsoid" || kind == "polydisk") {
    if (args.size() != 2)
      throw ParseError(kind + " spec needs A,B; got '" + rest + "'");
    Rat a = parse_rat(args[0]), b = parse_rat(args[1]);
    return kind == "ellipsoid" ? ToricDomainSpec::ellipsoid(a, b)
                               : ToricDomainSpec::polydisk(a, b);
  }
  if (kind == "quad") {
    if (args.size() != 3)
      throw ParseError("quad spec needs A,B,C; got '" + rest + "'");
    return ToricDomainSpec::quadrilateral(parse_rat(args[0]),
                                          parse_rat(args[1]),
                                          parse_rat(args[2]));
  }
  if (kind == "lp") {
    if (args.empty() || args.size() > 2)
      throw ParseError("lp spec needs P[,SCALE]; got '" + rest + "'");
    Rat scale = args.size() == 2 ? parse_rat(args[1]) : Rat(1);
    if (args[0] == "inf") return ToricDomainSpec::lp_ball_inf(scale);
    return ToricDomainSpec::lp_ball(parse_rat(args[0]), scale);
  }
  throw ParseError("unknown domain kind '" + kind + "'");
}

std::string domain_spec_str(const ToricDomainSpec& spec) {
  std::ostringstream os;
  switch (spec.kind) {
    case DomainKind::Polygon: {
      os << "polygon:";
      for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
        if (i) os << ';';
        os << rat_str(spec.vertices[i].x) << ',' << rat_str(spec.vertices[i].y);
      }
      break;
    }
    case DomainKind::Ellipsoid:
      os << "ellipsoid:" << rat_str(spec.a) << ',' << rat_str(spec.b);
      break;
    case DomainKind::Polydisk:
      os << "polydisk:" << rat_str(spec.a) << ',' << rat_str(spec.b);
      break;
    case DomainKind::Quadrilateral:
      os << "quad:" << rat_str(spec.a) << ',' << rat_str(spec.b) << ','
         << rat_str(spec.c);
      break;
    case DomainKind::LpBall:
      os << "lp:" << (spec.p_infinite ? std::string("inf") : rat_str(spec.p));
      if (spec.scale != 1) os << ',' << rat_str(spec.scale);
      break;
  }
  return os.str();
}

ToricDomain ToricDomain::validate(ToricDomainSpec spec) {
  ToricDomain d;
  switch (spec.kind) {
    case DomainKind::Ellipsoid:
    case DomainKind::Polydisk:
      require_positive(spec.a, "a");
      require_positive(spec.b, "b");
      break;
    case DomainKind::Quadrilateral:
      require_positive(spec.a, "a");
      require_positive(spec.b, "b");
      require_positive(spec.c, "c");
      if (!(spec.a <= spec.c && spec.b <= 1 && spec.a + spec.b * spec.c >= spec.c))
        throw BadQuadrilateral(
            "quadrilateral parameters must satisfy a <= c, b <= 1, "
            "a + b*c >= c");
      break;
    case DomainKind::LpBall:
      require_positive(spec.scale, "scale");
      if (!spec.p_infinite && spec.p < 1) throw BadParameter("p must be >= 1");
      break;
    case DomainKind::Polygon: {
      for (const auto& v : spec.vertices)
        if (v.x < 0 || v.y < 0)
          throw NotConvexToric("vertex outside the closed first quadrant");
      spec.vertices = convex_hull(std::move(spec.vertices));
      if (spec.vertices.size() < 3 || polygon_area2(spec.vertices) <= 0)
        throw EmptyDomain("polygon has zero area");
      // Symmetrization convexity, exact: the hull of the four reflected
      // copies has the same area as their union (which is 4x the area).
      std::vector<RatPoint> refl;
      for (const auto& v : spec.vertices)
        for (int sx : {1, -1})
          for (int sy : {1, -1}) refl.push_back({v.x * sx, v.y * sy});
      auto sym = convex_hull(std::move(refl));
      if (polygon_area2(sym) != 4 * polygon_area2(spec.vertices))
        throw NotConvexToric("symmetrization about the axes is not convex");
      break;
    }
  }
  switch (spec.kind) {
    case DomainKind::Polygon:
      d.hull_ = spec.vertices;
      break;
    case DomainKind::Ellipsoid:
      d.hull_ = {{0, 0}, {spec.a, 0}, {0, spec.b}};
      break;
    case DomainKind::Polydisk:
      d.hull_ = {{0, 0}, {spec.a, 0}, {spec.a, spec.b}, {0, spec.b}};
      break;
    case DomainKind::Quadrilateral:
      d.hull_ = convex_hull({{0, 0}, {spec.c, 0}, {spec.a, spec.b}, {0, 1}});
      break;
    case DomainKind::LpBall:
      break;
  }
  if (spec.kind == DomainKind::LpBall) {
    d.xmax_ = d.ymax_ = spec.scale;
    d.exact_ = spec.p_infinite || spec.p == 1;
  } else {
    d.xmax_ = d.ymax_ = 0;
    for (const auto& v : d.hull_) {
      d.xmax_ = std::max(d.xmax_, v.x);
      d.ymax_ = std::max(d.ymax_, v.y);
    }
    d.exact_ = true;
  }
  d.spec_ = std::move(spec);
  return d;
}

Value ToricDomain::support(const IVec& v) const {
  long vx = clamp_nonneg(v.x), vy = clamp_nonneg(v.y);
  if (vx == 0 && vy == 0) return Value::exact(0);
  switch (spec_.kind) {
    case DomainKind::Ellipsoid:
      return Value::exact(std::max(Rat(spec_.a * vx), Rat(spec_.b * vy)));
    case DomainKind::Polydisk:
      return Value::exact(spec_.a * vx + spec_.b * vy);
    case DomainKind::Polygon:
    case DomainKind::Quadrilateral: {
      Rat best = 0;
      for (const auto& w : hull_) {
        Rat cand = w.x * vx + w.y * vy;
        if (cand > best) best = std::move(cand);
      }
      return Value::exact(best);
    }
    case DomainKind::LpBall: {
      // dual norm: scale * ||v+||_q with 1/p + 1/q = 1
      if (vx == 0) return Value::exact(spec_.scale * vy);
      if (vy == 0) return Value::exact(spec_.scale * vx);
      if (spec_.p_infinite)  // q = 1
        return Value::exact(spec_.scale * (vx + vy));
      if (spec_.p == 1)  // q = inf
        return Value::exact(spec_.scale * std::max(vx, vy));
      if (spec_.p == 2) {
        Rat sq = Rat(vx) * vx + Rat(vy) * vy, root;
        if (rational_sqrt(sq, root)) return Value::exact(spec_.scale * root);
        return Value::approx(static_cast<double>(spec_.scale) *
                             std::sqrt(static_cast<double>(sq)));
      }
      double p = static_cast<double>(spec_.p);
      double q = p / (p - 1.0);
      double nq = std::pow(std::pow(double(vx), q) + std::pow(double(vy), q),
                           1.0 / q);
      return Value::approx(static_cast<double>(spec_.scale) * nq);
    }
  }
  return Value::exact(0);
}

Value ToricDomain::area() const {
  if (spec_.kind != DomainKind::LpBall)
    return Value::exact(polygon_area2(hull_) / Rat(2));
  Rat s2 = spec_.scale * spec_.scale;
  if (spec_.p_infinite) return Value::exact(s2);
  if (spec_.p == 1) return Value::exact(s2 / 2);
  // quarter of the unit p-ball area: Gamma(1+1/p)^2 / Gamma(1+2/p)
  double p = static_cast<double>(spec_.p);
  double unit = std::tgamma(1.0 + 1.0 / p) * std::tgamma(1.0 + 1.0 / p) /
                std::tgamma(1.0 + 2.0 / p);
  return Value::approx(static_cast<double>(s2) * unit);
}

ToricDomain ToricDomain::scaled(const Rat& mu) const {
  if (mu <= 0) throw BadParameter("scale factor must be positive");
  ToricDomainSpec s = spec_;
  switch (s.kind) {
    case DomainKind::Polygon:
      for (auto& v : s.vertices) {
        v.x *= mu;
        v.y *= mu;
      }
      break;
    case DomainKind::Ellipsoid:
    case DomainKind::Polydisk:
      s.a *= mu;
      s.b *= mu;
      break;
    case DomainKind::Quadrilateral: {
      // the family is not closed under scaling (y-intercept pinned at 1)
      std::vector<RatPoint> vs;
      for (const auto& v : hull_) vs.push_back({v.x * mu, v.y * mu});
      s = ToricDomainSpec::polygon(std::move(vs));
      break;
    }
    case DomainKind::LpBall:
      s.scale *= mu;
      break;
  }
  return validate(std::move(s));
}

ToricDomain ToricDomain::transposed() const {
  ToricDomainSpec s = spec_;
  switch (s.kind) {
    case DomainKind::Polygon:
    case DomainKind::Quadrilateral: {
      std::vector<RatPoint> vs;
      for (const auto& v : hull_) vs.push_back({v.y, v.x});
      s = ToricDomainSpec::polygon(std::move(vs));
      break;
    }
    case DomainKind::Ellipsoid:
    case DomainKind::Polydisk:
      std::swap(s.a, s.b);
      break;
    case DomainKind::LpBall:
      break;  // symmetric about the diagonal
  }
  return validate(std::move(s));
}

}  // namespace toricap
