#include "toricap/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace toricap {

namespace {

long icross(const IPoint& o, const IPoint& a, const IPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

long edge_gcd(const IPoint& p, const IPoint& q) {
  return std::gcd(std::abs(q.x - p.x), std::abs(q.y - p.y));
}

}  // namespace

LatticePolygon LatticePolygon::from_points(std::vector<IPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  LatticePolygon poly;
  if (pts.empty()) return poly;
  if (pts.size() == 1) {
    poly.vertices_ = pts;
    poly.boundary_count_ = poly.total_count_ = 1;
    return poly;
  }
  // monotone chain; collinear input collapses to its two extremes
  std::vector<IPoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && icross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && icross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  poly.vertices_ = std::move(h);
  if (poly.vertices_.size() == 2) {
    long g = edge_gcd(poly.vertices_[0], poly.vertices_[1]);
    poly.boundary_count_ = poly.total_count_ = g + 1;
    return poly;
  }
  long a2 = 0, b = 0;
  const auto& vs = poly.vertices_;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto& p = vs[i];
    const auto& q = vs[(i + 1) % vs.size()];
    a2 += p.x * q.y - q.x * p.y;
    b += edge_gcd(p, q);
  }
  poly.area2_ = a2;
  poly.boundary_count_ = b;
  // Pick: interior + boundary = A + B/2 + 1 with A = a2/2; a2 and b have
  // the same parity, so the division is exact.
  poly.total_count_ = (a2 + b) / 2 + 1;
  return poly;
}

Value LatticePolygon::omega_length(const ToricDomain& domain) const {
  if (vertices_.size() <= 1) return Value::exact(0);
  if (vertices_.size() == 2) {
    IVec d{vertices_[1].x - vertices_[0].x, vertices_[1].y - vertices_[0].y};
    return domain.support(d) + domain.support({-d.x, -d.y});
  }
  Value sum = Value::exact(0);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& p = vertices_[i];
    const auto& q = vertices_[(i + 1) % vertices_.size()];
    sum += domain.support({q.x - p.x, q.y - p.y});
  }
  return sum;
}

LatticePolygon LatticePolygon::normalized() const {
  LatticePolygon out = *this;
  if (out.vertices_.empty()) return out;
  auto it = std::min_element(out.vertices_.begin(), out.vertices_.end());
  std::rotate(out.vertices_.begin(), it, out.vertices_.end());
  IPoint base = out.vertices_[0];
  for (auto& v : out.vertices_) {
    v.x -= base.x;
    v.y -= base.y;
  }
  return out;
}

std::string LatticePolygon::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) os << ';';
    os << '(' << vertices_[i].x << ',' << vertices_[i].y << ')';
  }
  return os.str();
}

}  // namespace toricap
