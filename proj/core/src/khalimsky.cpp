#include "ftc/khalimsky.hpp"

#include <algorithm>
#include <cstdlib>

namespace ftc {

namespace {

bool line_leq(long a, long b) { return a == b || (std::labs(a - b) == 1 && ht(a) == 0); }

bool circle_leq(long a, long b, int n) {
  if (a == b) return true;
  if (ht(a) != 0) return false;
  const long d = mod(b - a, 2L * n);
  return d == 1 || d == 2L * n - 1;
}

/// Step in {-1, 0, 1} from residue a to residue b in Z/2n.
std::optional<long> circle_step(long a, long b, int n) {
  const long d = mod(b - a, 2L * n);
  if (d == 0) return 0;
  if (d == 1) return 1;
  if (d == 2L * n - 1) return -1;
  return std::nullopt;
}

bool circle_comparable(const CircleMap& a, const CircleMap& b) {
  bool below = true;
  bool above = true;
  for (std::size_t i = 0; i < a.table.size(); ++i) {
    if (!circle_leq(a.table[i], b.table[i], a.n)) below = false;
    if (!circle_leq(b.table[i], a.table[i], a.n)) above = false;
  }
  return below || above;
}

/// Appends interval maps while checking continuity and comparability.
class IntervalFenceBuilder {
public:
  explicit IntervalFenceBuilder(const IntervalMap& start) : fence_{start} {
    if (!is_continuous(start)) throw Error(ErrorCode::not_continuous, "fence start not continuous");
  }

  void push(const IntervalMap& next) {
    if (next == fence_.back()) return;
    if (!is_continuous(next))
      throw Error(ErrorCode::internal, "interval fence step " + std::to_string(fence_.size()) +
                                           " is not continuous");
    if (compare(fence_.back(), next) == 2)
      throw Error(ErrorCode::internal, "interval fence step " + std::to_string(fence_.size()) +
                                           " is not comparable");
    fence_.push_back(next);
  }

  IntervalMap current() const { return fence_.back(); }
  IntervalFence take() { return std::move(fence_); }

private:
  IntervalFence fence_;
};

/// Makes cur constant v on [s, t] by clamping from above, then from below.
void flatten(IntervalFenceBuilder& b, long s, long t, long v) {
  IntervalMap cur = b.current();
  long hi = v;
  long lo = v;
  for (long z = s; z <= t; ++z) {
    hi = std::max(hi, cur(z));
    lo = std::min(lo, cur(z));
  }
  for (long w = hi - 1; w >= v; --w) {
    for (long z = s; z <= t; ++z) cur.at(z) = std::min(cur(z), w);
    b.push(cur);
  }
  for (long w = lo + 1; w <= v; ++w) {
    for (long z = s; z <= t; ++z) cur.at(z) = std::max(cur(z), w);
    b.push(cur);
  }
}

IntervalMap negate(IntervalMap g) {
  for (auto& v : g.values) v = -v;
  return g;
}

IntervalFence mono_fence_increasing(const IntervalMap& g) {
  IntervalFenceBuilder b(g);
  long s = g.k;
  for (;;) {
    IntervalMap cur = b.current();
    const long v = cur(s);
    long t = s;
    for (long z = s; z <= g.l; ++z)
      if (cur(z) == v) t = z;
    if (t > s) flatten(b, s, t, v);
    if (t == g.l) break;
    s = t + 1;
  }
  return b.take();
}

}  // namespace

// ---------------------------------------------------------------------------
// Circle maps

bool is_continuous(const CircleMap& f) {
  const long len = 2L * f.m;
  if (static_cast<long>(f.table.size()) != len) return false;
  for (long z = 0; z < len; ++z) {
    const long a = f.table[static_cast<std::size_t>(z)];
    if (a < 0 || a >= 2L * f.n) return false;
    const long b = f(z + 1);
    // Even z lies below its neighbours.
    if (ht(z) == 0 ? !circle_leq(a, b, f.n) : !circle_leq(b, a, f.n)) return false;
  }
  return true;
}

CircleMap make_circle_map(int m, int n, std::vector<long> table) {
  if (m < 2 || n < 2) throw Error(ErrorCode::invalid_parameter, "circle maps need m, n >= 2");
  if (table.size() != static_cast<std::size_t>(2 * m))
    throw Error(ErrorCode::mismatched_sizes, "circle map table needs 2m entries");
  CircleMap f{m, n, std::move(table)};
  if (!is_continuous(f)) throw Error(ErrorCode::not_order_preserving, "circle map is not continuous");
  return f;
}

OrderMap to_order_map(const CircleMap& f) {
  auto src = khalimsky_circle(f.m).space;
  auto tgt = khalimsky_circle(f.n).space;
  std::vector<Point> t(f.table.begin(), f.table.end());
  return OrderMap(src, tgt, std::move(t));
}

CircleMap to_circle_map(const OrderMap& f) {
  auto m = f.source()->circle_half_size();
  auto n = f.target()->circle_half_size();
  if (!m || !n) throw Error(ErrorCode::not_applicable, "map is not between Khalimsky circles");
  return CircleMap{*m, *n, std::vector<long>(f.table().begin(), f.table().end())};
}

// ---------------------------------------------------------------------------
// Interval maps

bool is_continuous(const IntervalMap& g) {
  if (g.k > g.l || static_cast<long>(g.values.size()) != g.l - g.k + 1) return false;
  for (long z = g.k; z < g.l; ++z) {
    const long a = g(z);
    const long b = g(z + 1);
    if (ht(z) == 0 ? !line_leq(a, b) : !line_leq(b, a)) return false;
  }
  return true;
}

int compare(const IntervalMap& a, const IntervalMap& b) {
  if (a.k != b.k || a.l != b.l) throw Error(ErrorCode::mismatched_spaces, "interval maps differ in domain");
  bool below = true;
  bool above = true;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (!line_leq(a.values[i], b.values[i])) below = false;
    if (!line_leq(b.values[i], a.values[i])) above = false;
  }
  if (below && above) return 0;
  if (below) return -1;
  if (above) return 1;
  return 2;
}

IntervalMap constant_lift(long k, long l, long a) {
  if (k > l) throw Error(ErrorCode::invalid_parameter, "interval needs k <= l");
  return IntervalMap{k, l, std::vector<long>(static_cast<std::size_t>(l - k + 1), a)};
}

bool is_monotone(const IntervalMap& g) {
  for (long z = g.k; z < g.l; ++z)
    if (g(z + 1) < g(z)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Lifts and degree

LiftRecord lift(const CircleMap& f, long k, long l, long a) {
  if (f.n < 2) throw Error(ErrorCode::not_applicable, "lifting needs n >= 2");
  if (k > l) throw Error(ErrorCode::invalid_parameter, "interval needs k <= l");
  if (mod(a, 2L * f.n) != f(k))
    throw Error(ErrorCode::base_mismatch, "start value " + std::to_string(a) +
                                              " does not lie over f(k) = " + std::to_string(f(k)));
  LiftRecord r{k, l, f.m, f.n, a, {}, std::nullopt};
  r.values.reserve(static_cast<std::size_t>(l - k + 1));
  r.values.push_back(a);
  for (long z = k; z < l; ++z) {
    auto step = circle_step(f(z), f(z + 1), f.n);
    if (!step) throw Error(ErrorCode::not_continuous, "circle map jumps at " + std::to_string(z));
    r.values.push_back(r.values.back() + *step);
  }
  if (l - k == 2L * f.m) {
    const long rise = r.values.back() - a;
    if (rise % (2L * f.n) != 0)
      throw Error(ErrorCode::internal, "lift rise " + std::to_string(rise) + " not divisible by 2n");
    r.degree = rise / (2L * f.n);
  }
  return r;
}

long degree(const CircleMap& f) { return *lift(f, 0, 2L * f.m, f(0)).degree; }

IntervalMap monotone_normalize(const IntervalMap& g) {
  if (g(g.k) > g(g.l)) throw Error(ErrorCode::precondition_violated, "needs g(k) <= g(l)");
  if (ht(g.k) != ht(g(g.k))) throw Error(ErrorCode::precondition_violated, "needs ht(k) = ht(g(k))");
  IntervalMap h{g.k, g.l, {}};
  for (long z = g.k; z <= g.l; ++z) h.values.push_back(std::min(z + g(g.k) - g.k, g(g.l)));
  if (!is_continuous(h)) throw Error(ErrorCode::internal, "h_g is not continuous");
  return h;
}

IntervalFence mono_fence(const IntervalMap& g) {
  if (g(g.k) <= g(g.l)) return mono_fence_increasing(g);
  IntervalFence f = mono_fence_increasing(negate(g));
  for (auto& h : f) h = negate(h);
  return f;
}

IntervalFence cons_fence(const IntervalMap& g) {
  if (g(g.k) != g(g.l)) throw Error(ErrorCode::precondition_violated, "needs g(k) = g(l)");
  return mono_fence_increasing(g);
}

IntervalFence stan_fence(const IntervalMap& g) {
  if (!is_monotone(g)) throw Error(ErrorCode::precondition_violated, "needs a monotone map");
  const IntervalMap target = monotone_normalize(g);
  IntervalFenceBuilder b(g);
  for (;;) {
    IntervalMap cur = b.current();
    // First plateau of length > 1 that does not reach l.
    std::optional<std::pair<long, long>> plateau;
    for (long z = g.k; z < g.l && !plateau;) {
      long t = z;
      while (t < g.l && cur(t + 1) == cur(z)) ++t;
      if (t > z && t < g.l) plateau = std::pair(z, t);
      z = t + 1;
    }
    if (!plateau) break;
    const auto [s, t] = *plateau;
    const long v = cur(s);
    IntervalMap zig = cur;
    for (long z = s; z <= t; ++z)
      if (ht(z) != ht(s)) zig.at(z) = v + 1;
    b.push(zig);
    IntervalMap shifted = cur;
    for (long z = s + 1; z <= t; ++z) shifted.at(z) = v + 1;
    b.push(shifted);
  }
  if (!(b.current() == target)) throw Error(ErrorCode::internal, "staircase fence missed h_g");
  return b.take();
}

// ---------------------------------------------------------------------------
// Classification

bool classify_homotopic(const CircleMap& f, const CircleMap& g) {
  if (f.m != g.m || f.n != g.n) throw Error(ErrorCode::mismatched_sizes, "circle maps differ in size");
  if (f == g) return true;
  const long d = degree(f);
  if (d != degree(g)) return false;
  return std::labs(d) * f.n < f.m;
}

CircleMap descend(const IntervalMap& g, int m, int n) {
  if (g.l - g.k != 2L * m) throw Error(ErrorCode::invalid_parameter, "interval must span one loop");
  if (mod(g(g.k) - g(g.l), 2L * n) != 0)
    throw Error(ErrorCode::invalid_parameter, "endpoint values differ modulo 2n");
  CircleMap f{m, n, std::vector<long>(static_cast<std::size_t>(2 * m), 0)};
  for (long z = g.k; z < g.l; ++z) f.table[static_cast<std::size_t>(mod(z, 2L * m))] = mod(g(z), 2L * n);
  return f;
}

CircleMap reflect_target(const CircleMap& f) {
  CircleMap r = f;
  for (auto& v : r.table) v = mod(-v, 2L * f.n);
  return r;
}

namespace {

using CircleFence = std::vector<CircleMap>;

void extend(CircleFence& a, const CircleFence& b) {
  for (const auto& h : b)
    if (a.empty() || !(a.back() == h)) a.push_back(h);
}

/// h of degree >= 0 with ht(k) = ht(h(k)) to c + min(z - k, 2nd).
CircleFence normalize_at(const CircleMap& h, long k) {
  if (ht(k) != ht(h(k))) throw Error(ErrorCode::internal, "normalization base has wrong parity");
  const auto lifted = lift(h, k, k + 2L * h.m, h(k));
  IntervalFence steps = mono_fence(lifted.as_interval_map());
  IntervalFence stan = stan_fence(steps.back());
  steps.insert(steps.end(), stan.begin() + 1, stan.end());
  CircleFence out;
  for (const auto& s : steps) extend(out, {descend(s, h.m, h.n)});
  return out;
}

/// Fence from h (degree d with 0 < d < m/n) to a map with value h(0) + 1 at 0.
CircleFence bump(const CircleMap& h) {
  const long c = h(0);
  if (ht(c) == 0) {
    CircleFence out = normalize_at(h, 0);
    CircleMap s = out.back();
    s.table[static_cast<std::size_t>(2 * h.m - 1)] = mod(c + 1, 2L * h.n);
    out.push_back(s);
    s.table[0] = mod(c + 1, 2L * h.n);
    out.push_back(s);
    return out;
  }
  return normalize_at(h, 2L * h.m - 1);
}

CircleFence constant_walk(long from, long to, int m, int n) {
  CircleFence out;
  const long fwd = mod(to - from, 2L * n);
  const long dir = fwd <= n ? 1 : -1;
  for (long v = from;; v = mod(v + dir, 2L * n)) {
    out.push_back(CircleMap{m, n, std::vector<long>(static_cast<std::size_t>(2 * m), v)});
    if (v == to) break;
  }
  return out;
}

}  // namespace

std::optional<std::vector<CircleMap>> circle_fence(const CircleMap& f, const CircleMap& g) {
  if (f.m != g.m || f.n != g.n) throw Error(ErrorCode::mismatched_sizes, "circle maps differ in size");
  if (f == g) return CircleFence{f};
  const long d = degree(f);
  if (d != degree(g)) return std::nullopt;
  if (d != 0 && std::labs(d) * f.n >= f.m) return std::nullopt;

  if (d < 0) {
    auto r = circle_fence(reflect_target(f), reflect_target(g));
    if (r)
      for (auto& h : *r) h = reflect_target(h);
    return r;
  }

  CircleFence out;
  if (d == 0) {
    // Lifts are loops; flattening over [0, 2m] ends at the constants f(0), g(0).
    auto to_const = [](const CircleMap& h) {
      CircleFence c;
      for (const auto& s : cons_fence(lift(h, 0, 2L * h.m, h(0)).as_interval_map()))
        extend(c, {descend(s, h.m, h.n)});
      return c;
    };
    CircleFence from_g = to_const(g);
    out = to_const(f);
    extend(out, constant_walk(f(0), g(0), f.m, f.n));
    extend(out, CircleFence(from_g.rbegin(), from_g.rend()));
  } else {
    CircleFence gs{g};
    if (ht(g(0)) != 0) extend(gs, bump(g));
    out = {f};
    for (long guard = 0; out.back()(0) != gs.back()(0); ++guard) {
      if (guard > 2L * f.n) throw Error(ErrorCode::internal, "bumping did not reach the base value");
      extend(out, bump(out.back()));
    }
    extend(out, normalize_at(out.back(), 0));
    extend(gs, normalize_at(gs.back(), 0));
    if (!(out.back() == gs.back())) throw Error(ErrorCode::internal, "normal forms differ");
    extend(out, CircleFence(gs.rbegin(), gs.rend()));
  }

  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!is_continuous(out[i]))
      throw Error(ErrorCode::internal, "circle fence step " + std::to_string(i) + " not continuous");
    if (i > 0 && !circle_comparable(out[i - 1], out[i]))
      throw Error(ErrorCode::internal, "circle fence step " + std::to_string(i) + " not comparable");
  }
  if (!(out.front() == f) || !(out.back() == g))
    throw Error(ErrorCode::internal, "circle fence endpoints wrong");
  return out;
}

// ---------------------------------------------------------------------------
// Recognition

std::optional<CircleChart> recognize_circle(const FiniteSpace& x) {
  const std::size_t size = x.size();
  if (size < 4 || size % 2 != 0) return std::nullopt;
  std::vector<std::vector<Point>> nb(size);
  for (Point p = 0; p < size; ++p) {
    const auto& lo = x.lower_covers(p);
    const auto& hi = x.upper_covers(p);
    if (!(lo.empty() || hi.empty())) return std::nullopt;
    if (x.down(p).count() + x.up(p).count() != 4) return std::nullopt;
    nb[p] = lo.empty() ? hi : lo;
    if (nb[p].size() != 2) return std::nullopt;
  }
  Point start = 0;
  while (!x.lower_covers(start).empty()) ++start;
  CircleChart chart;
  chart.n = static_cast<int>(size / 2);
  chart.point.push_back(start);
  Point prev = start;
  Point cur = std::min(nb[start][0], nb[start][1]);
  while (cur != start) {
    if (chart.point.size() == size) return std::nullopt;
    chart.point.push_back(cur);
    const Point next = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
    prev = cur;
    cur = next;
  }
  if (chart.point.size() != size) return std::nullopt;
  chart.residue.assign(size, 0);
  for (std::size_t r = 0; r < size; ++r) chart.residue[chart.point[r]] = static_cast<long>(r);
  return chart;
}

std::optional<CircleChart> circle_chart(const FiniteSpace& x) {
  if (auto n = x.circle_half_size()) {
    CircleChart chart;
    chart.n = *n;
    for (Point p = 0; p < x.size(); ++p) {
      chart.point.push_back(p);
      chart.residue.push_back(p);
    }
    return chart;
  }
  return recognize_circle(x);
}

OrderMap quotient_map(long k, long l, int m) {
  auto interval = khalimsky_interval(k, l);
  auto circle = khalimsky_circle(m);
  std::vector<Point> t;
  for (long z = k; z <= l; ++z) t.push_back(static_cast<Point>(mod(z, 2L * m)));
  return OrderMap(interval.space, circle.space, std::move(t));
}

}  // namespace ftc
