#include "toricap/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <numeric>

#include "toricap/errors.hpp"

namespace toricap {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point end;
  bool armed = false;
  bool hit = false;
  long probe = 0;

  explicit Deadline(double seconds) {
    if (seconds > 0) {
      armed = true;
      end = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(seconds));
    }
  }
  bool expired() {
    if (!armed || hit) return hit;
    if ((probe++ & 0xfff) == 0 && Clock::now() > end) hit = true;
    return hit;
  }
};

struct MinTracker {
  bool any = false;
  Value best;

  // returns -1/0/1: worse / tied / new minimum
  int offer(const Value& v) {
    if (!any) {
      any = true;
      best = v;
      return 1;
    }
    if (v.lt(best)) {
      best = v;
      return 1;
    }
    return v.eq(best) ? 0 : -1;
  }
};

}  // namespace

EnumerationBudget EnumerationBudget::defaults_for(long k) {
  EnumerationBudget b;
  b.max_coordinate = k + 1;
  b.max_parts = k + 1;
  b.bounding_box = k + 2;
  return b;
}

CapacityValue enumerate_words_min(const ToricDomain& domain, long k,
                                  EnumerationBudget budget) {
  if (k < 1) throw BadParameter("k must be >= 1");
  EnumerationBudget def = EnumerationBudget::defaults_for(k);
  long max_coord = budget.max_coordinate ? budget.max_coordinate
                                         : def.max_coordinate;
  long max_parts = budget.max_parts ? budget.max_parts : def.max_parts;
  Deadline deadline(budget.time_limit);

  // words as multisets of labels (i,j), each label costing i+j+1 against a
  // total of k+1; labels drawn in nondecreasing order
  MinTracker tracker;
  std::vector<Word> witnesses;
  std::vector<Orbit> stack;
  bool some_i = false, some_j = false;

  auto leaf = [&]() {
    if (stack.size() >= 2 && (!some_i || !some_j)) return;  // impermissible
    Word w(stack);
    int r = tracker.offer(action(w, domain));
    if (r == 1) witnesses.clear();
    if (r >= 0) witnesses.push_back(std::move(w));
  };

  // min_i/min_j order the labels lexicographically within the current cost
  auto rec = [&](auto&& self, long remaining, long min_i, long min_j) -> void {
    if (remaining == 0) {
      if (!stack.empty()) leaf();
      return;
    }
    if (static_cast<long>(stack.size()) >= max_parts || deadline.expired())
      return;
    for (long i = min_i; i <= std::min(max_coord, remaining - 1); ++i) {
      long jmax = std::min(max_coord, remaining - 1 - i);
      for (long j = (i == min_i ? min_j : 0); j <= jmax; ++j) {
        if (i == 0 && j == 0) continue;
        stack.push_back(elliptic(i, j));
        bool oi = some_i, oj = some_j;
        some_i |= i != 0;
        some_j |= j != 0;
        self(self, remaining - (i + j + 1), i, j);
        some_i = oi;
        some_j = oj;
        stack.pop_back();
      }
    }
  };
  rec(rec, k + 1, 0, 0);

  CapacityValue cv;
  cv.method = Method::Enumeration;
  cv.value = tracker.best;
  std::sort(witnesses.begin(), witnesses.end());
  witnesses.erase(std::unique(witnesses.begin(), witnesses.end()),
                  witnesses.end());
  cv.word_witnesses = std::move(witnesses);
  cv.exact = cv.value.is_exact();
  cv.lower_bound_only = deadline.hit;
  return cv;
}

namespace {

// Primitive directions with coordinates in [-box, box], sorted by angle
// counterclockwise starting just after the positive x axis.
std::vector<IPoint> primitive_directions(long box) {
  std::vector<IPoint> dirs;
  for (long x = -box; x <= box; ++x)
    for (long y = -box; y <= box; ++y) {
      if (x == 0 && y == 0) continue;
      if (std::gcd(std::abs(x), std::abs(y)) != 1) continue;
      dirs.push_back({x, y});
    }
  auto half = [](const IPoint& d) {
    return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1;
  };
  std::sort(dirs.begin(), dirs.end(), [&](const IPoint& u, const IPoint& v) {
    if (half(u) != half(v)) return half(u) < half(v);
    return u.x * v.y - u.y * v.x > 0;
  });
  return dirs;
}

// Branch-and-bound walk over nondegenerate convex lattice polygons, up to
// translation, with at most max_boundary boundary points, bounding box at
// most box, and (when max_area2 > 0) twice-area at most max_area2. Shapes
// are zero-sum multisets of primitive edge vectors taken in angular order;
// each closed chain is streamed to the offer callback. Chains are cut as
// soon as their Omega-cost so far plus the return cost lower bound
// support(-cur) exceeds the best value seen by the tracker (the remaining
// edges sum to exactly -cur, so subadditivity makes the bound admissible).
template <typename Offer>
void enumerate_convex_shapes(const ToricDomain& domain, long max_boundary,
                             long box, long max_area2,
                             const MinTracker& tracker, Deadline& deadline,
                             Offer&& offer) {
  auto dirs = primitive_directions(box);
  // no single edge of a tied-or-better polygon can cost more than the bound
  if (tracker.any)
    dirs.erase(std::remove_if(dirs.begin(), dirs.end(),
                              [&](const IPoint& d) {
                                return tracker.best.lt(
                                    domain.support({d.x, d.y}));
                              }),
               dirs.end());
  long n = static_cast<long>(dirs.size());
  std::vector<IPoint> path{{0, 0}};  // vertex chain from the start vertex

  // fan(v, w) >= 0 for all consecutive vertices of a ccw convex chain
  auto fan = [](const IPoint& a, const IPoint& b) {
    return a.x * b.y - a.y * b.x;
  };

  auto rec = [&](auto&& self, long idx, long used, long distinct, long wpos,
                 long wneg, long hpos, long hneg, long area2,
                 const Value& cost) -> void {
    const IPoint& cur = path.back();
    if (cur.x == 0 && cur.y == 0 && distinct >= 3) {
      auto closed = path;
      closed.pop_back();  // duplicate of the origin
      offer(LatticePolygon::from_points(std::move(closed)));
    }
    if (idx >= n || used >= max_boundary || deadline.expired()) return;
    // the remaining directions span at most the cone [dirs[idx], dirs[n-1]];
    // when that cone is salient the return vector -cur must lie inside it
    if (cur.x != 0 || cur.y != 0) {
      IPoint back{-cur.x, -cur.y};
      const IPoint &lo = dirs[idx], &hi = dirs[n - 1];
      long span = lo.x * hi.y - lo.y * hi.x;
      bool salient = span > 0 || (span == 0 && lo.x * hi.x + lo.y * hi.y > 0);
      if (salient) {
        if (lo.x * back.y - lo.y * back.x < 0) return;
        if (back.x * hi.y - back.y * hi.x < 0) return;
      }
      long reach = (max_boundary - used) * box;
      if (std::abs(cur.x) > reach || std::abs(cur.y) > reach) return;
    }
    self(self, idx + 1, used, distinct, wpos, wneg, hpos, hneg, area2, cost);
    const IPoint d = dirs[idx];
    Value step = domain.support({d.x, d.y});
    long u = used, w1 = wpos, w2 = wneg, h1 = hpos, h2 = hneg, a2 = area2;
    Value c = cost;
    std::size_t base_len = path.size();
    for (long m = 1; u + 1 <= max_boundary; ++m) {
      u += 1;
      w1 += std::max(d.x, 0l);
      w2 += std::max(-d.x, 0l);
      h1 += std::max(d.y, 0l);
      h2 += std::max(-d.y, 0l);
      if (w1 > box || w2 > box || h1 > box || h2 > box) break;
      IPoint prev = path.back();
      IPoint next{prev.x + d.x, prev.y + d.y};
      a2 += fan(prev, next);
      if (max_area2 > 0 && a2 > max_area2) break;
      c += step;
      Value bound = c + domain.support({-next.x, -next.y});
      if (tracker.any && tracker.best.lt(bound)) break;
      path.push_back(next);
      self(self, idx + 1, u, distinct + 1, w1, w2, h1, h2, a2, c);
    }
    path.resize(base_len);
  };
  rec(rec, 0, 0, 0, 0, 0, 0, 0, 0, Value::exact(0));
}

}  // namespace

CapacityValue enumerate_polygons_min(const ToricDomain& domain, long count,
                                     CountKind count_kind,
                                     EnumerationBudget budget) {
  if (count < 1) throw BadParameter("count must be >= 1");
  long k = count - 1;
  EnumerationBudget def = EnumerationBudget::defaults_for(std::max(k, 1l));
  long box = budget.bounding_box ? budget.bounding_box : def.bounding_box;
  Deadline deadline(budget.time_limit);

  MinTracker tracker;
  std::vector<LatticePolygon> witnesses;
  auto offer = [&](const LatticePolygon& p) {
    long c = count_kind == CountKind::Boundary ? p.boundary_count()
                                               : p.total_count();
    if (c != count) return;
    int r = tracker.offer(p.omega_length(domain));
    if (r == 1) witnesses.clear();
    if (r >= 0) witnesses.push_back(p.normalized());
  };

  // points and degenerate segments
  if (count == 1) offer(LatticePolygon::from_points({{0, 0}}));
  if (count >= 2) {
    long m = count - 1;
    for (const auto& d : primitive_directions(box)) {
      if (!(d.y > 0 || (d.y == 0 && d.x > 0))) continue;  // one per line
      if (m * std::abs(d.x) > box || m * std::abs(d.y) > box) continue;
      offer(LatticePolygon::from_points({{0, 0}, {m * d.x, m * d.y}}));
    }
  }
  // total mode: Pick gives area2 = 2(count - 1 - boundary/2) <= 2(count-1)
  long max_area2 = count_kind == CountKind::Total ? 2 * (count - 1) : 0;

  // seed the branch-and-bound with every triangle and parallelogram that
  // fits; counts come from Pick's theorem, so only matches touch the domain.
  // each triangle has a vertex whose outgoing edge points into the upper
  // half plane, likewise one of +-u for a parallelogram, so restricting u
  // loses no shape up to translation
  {
    auto g = [](long x, long y) { return std::gcd(std::abs(x), std::abs(y)); };
    for (long ux = -box; ux <= box; ++ux)
      for (long uy = (ux > 0 ? 0l : 1l); uy <= box; ++uy)
        for (long vx = -box; vx <= box; ++vx)
          for (long vy = -box; vy <= box; ++vy) {
            long cr = ux * vy - uy * vx;
            if (cr <= 0) continue;
            if (std::max({ux, vx, 0l}) - std::min({ux, vx, 0l}) > box ||
                std::max({uy, vy, 0l}) - std::min({uy, vy, 0l}) > box)
              continue;
            long b3 = g(ux, uy) + g(vx - ux, vy - uy) + g(vx, vy);
            long c3 = count_kind == CountKind::Boundary ? b3
                                                        : (cr + b3) / 2 + 1;
            if (c3 == count && b3 <= count)
              offer(LatticePolygon::from_points(
                  {{0, 0}, {ux, uy}, {vx, vy}}));
            if (std::max({ux + vx, ux, vx, 0l}) -
                        std::min({ux + vx, ux, vx, 0l}) > box ||
                std::max({uy + vy, uy, vy, 0l}) -
                        std::min({uy + vy, uy, vy, 0l}) > box)
              continue;
            long b4 = 2 * (g(ux, uy) + g(vx, vy));
            long c4 = count_kind == CountKind::Boundary ? b4
                                                        : cr + b4 / 2 + 1;
            if (c4 == count && b4 <= count)
              offer(LatticePolygon::from_points(
                  {{0, 0}, {ux, uy}, {ux + vx, uy + vy}, {vx, vy}}));
          }
  }

  enumerate_convex_shapes(domain, count, box, max_area2, tracker, deadline,
                          offer);

  CapacityValue cv;
  cv.method = Method::Lattice;
  cv.value = tracker.best;
  std::sort(witnesses.begin(), witnesses.end());
  witnesses.erase(std::unique(witnesses.begin(), witnesses.end()),
                  witnesses.end());
  cv.poly_witnesses = std::move(witnesses);
  cv.exact = cv.value.is_exact();
  cv.lower_bound_only = deadline.hit;
  return cv;
}

Rat ech_ellipsoid_reference(const Rat& a, const Rat& b, long k) {
  if (k < 0) throw BadParameter("k must be >= 0");
  if (a <= 0 || b <= 0) throw BadParameter("axis lengths must be positive");
  // the k+1 smallest values of m*a + n*b all satisfy m+n <= k
  std::vector<Rat> vals;
  vals.reserve((k + 1) * (k + 2) / 2);
  for (long m = 0; m <= k; ++m)
    for (long n = 0; m + n <= k; ++n) vals.push_back(a * m + b * n);
  std::sort(vals.begin(), vals.end());
  return vals[k];
}

}  // namespace toricap
