#include "ftc/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace ftc {

Order comparable(const OrderMap& f, const OrderMap& g) {
  if (!same_space(f.source(), g.source()) || !same_space(f.target(), g.target()))
    throw Error(ErrorCode::mismatched_spaces, "maps have different source or target");
  const FiniteSpace& t = *f.target();
  bool below = true;
  bool above = true;
  for (std::size_t i = 0; i < f.table().size() && (below || above); ++i) {
    const Point a = f.table()[i];
    const Point b = g.table()[i];
    if (a == b) continue;
    if (!t.leq(a, b)) below = false;
    if (!t.leq(b, a)) above = false;
  }
  if (below && above) return Order::equal;
  if (below) return Order::below;
  if (above) return Order::above;
  return Order::incomparable;
}

std::string_view to_string(Order o) {
  switch (o) {
    case Order::equal: return "equal";
    case Order::below: return "below";
    case Order::above: return "above";
    case Order::incomparable: return "incomparable";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Fence

void Fence::push(OrderMap next) {
  if (!maps_.empty() && maps_.back() == next) return;
  maps_.push_back(std::move(next));
}

void Fence::append(const Fence& other) {
  for (const auto& h : other.maps_) push(h);
}

Fence Fence::reversed() const {
  Fence r;
  r.maps_.assign(maps_.rbegin(), maps_.rend());
  return r;
}

std::vector<FenceStep> Fence::steps() const {
  std::vector<FenceStep> out;
  for (std::size_t i = 0; i + 1 < maps_.size(); ++i)
    out.push_back({&maps_[i], &maps_[i + 1], comparable(maps_[i], maps_[i + 1])});
  return out;
}

ReplayReport replay(const Fence& fence, const OrderMap& f, const OrderMap& g) {
  if (fence.empty()) return {false, 0, "empty fence"};
  if (!(fence.front() == f)) return {false, 0, "fence does not start at f"};
  if (!(fence.back() == g)) return {false, fence.length(), "fence does not end at g"};
  const auto& maps = fence.maps();
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!same_space(maps[i].source(), f.source()) || !same_space(maps[i].target(), f.target()))
      return {false, i, "map on different spaces"};
    if (auto v = find_violation(*maps[i].source(), *maps[i].target(), maps[i].table()))
      return {false, i,
              "not continuous at " + maps[i].source()->label(v->lo) + " <= " +
                  maps[i].source()->label(v->hi)};
    if (i > 0 && comparable(maps[i - 1], maps[i]) == Order::incomparable)
      return {false, i, "not comparable with the previous map"};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Beat points

namespace {

std::optional<BeatPoint> beat_at(const FiniteSpace& space, const PointSet& alive, Point x) {
  PointSet ups = space.up(x) & alive;
  ups.erase(x);
  if (!ups.empty()) {
    std::optional<Point> min;
    ups.for_each([&](Point y) {
      if (!min && ups.is_subset_of(space.up(y))) min = y;
    });
    if (min) return BeatPoint{x, BeatKind::up, *min};
  }
  PointSet downs = space.down(x) & alive;
  downs.erase(x);
  if (!downs.empty()) {
    std::optional<Point> max;
    downs.for_each([&](Point y) {
      if (!max && downs.is_subset_of(space.down(y))) max = y;
    });
    if (max) return BeatPoint{x, BeatKind::down, *max};
  }
  return std::nullopt;
}

}  // namespace

std::vector<BeatPoint> beat_points(const FiniteSpace& space, const PointSet& alive) {
  std::vector<BeatPoint> out;
  alive.for_each([&](Point x) {
    if (auto b = beat_at(space, alive, x)) out.push_back(*b);
  });
  return out;
}

std::vector<BeatPoint> beat_points(const FiniteSpace& space) {
  return beat_points(space, space.all());
}

CoreResult core(const SpacePtr& space, const std::vector<Point>& priority) {
  const std::size_t n = space->size();
  std::vector<Point> order = priority;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), Point{0});
  } else if (order.size() != n) {
    throw Error(ErrorCode::invalid_parameter, "priority must list every point once");
  }

  PointSet alive = space->all();
  std::vector<Point> rho(n);
  std::iota(rho.begin(), rho.end(), Point{0});
  Fence fence(identity_map(space));
  CollapseSequence seq{space, {}, {}};

  for (;;) {
    std::optional<BeatPoint> hit;
    for (Point x : order) {
      if (!alive.contains(x)) continue;
      if ((hit = beat_at(*space, alive, x))) break;
    }
    if (!hit) break;
    alive.erase(hit->point);
    for (auto& v : rho)
      if (v == hit->point) v = hit->witness;
    fence.push(OrderMap::trusted(space, space, rho));
    seq.removals.push_back(*hit);
  }
  seq.remaining = alive;

  Subspace sub = subspace(space, alive, space->name() + "|core");
  std::vector<Point> index(n, 0);
  for (Point i = 0; i < sub.to_parent.size(); ++i) index[sub.to_parent[i]] = i;
  std::vector<Point> r(n);
  for (Point p = 0; p < n; ++p) r[p] = index[rho[p]];

  return CoreResult{sub.space,
                    sub.to_parent,
                    OrderMap::trusted(space, sub.space, std::move(r)),
                    OrderMap::trusted(sub.space, space, sub.to_parent),
                    std::move(seq),
                    std::move(fence)};
}

bool is_contractible(const SpacePtr& space) {
  if (space->size() == 0) return false;
  return core(space).core->size() == 1;
}

// ---------------------------------------------------------------------------
// Strategy names

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::fence_bfs: return "fence-bfs";
    case Strategy::core_degree: return "core-degree";
    case Strategy::exhaustive_components: return "exhaustive-components";
    case Strategy::automatic: return "auto";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (auto s : {Strategy::fence_bfs, Strategy::core_degree, Strategy::exhaustive_components,
                 Strategy::automatic})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::homotopic: return "Homotopic";
    case Verdict::not_homotopic: return "NotHomotopic";
    case Verdict::unknown: return "Unknown";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Single-point moves

namespace {

/// Values y != f(x) comparable with f(x) such that moving x to y keeps f continuous.
template <typename Fn>
void for_each_move(const FiniteSpace& src, const FiniteSpace& tgt, const std::vector<Point>& table,
                   Point x, bool upward_only, Fn&& fn) {
  PointSet candidates = tgt.up(table[x]);
  if (!upward_only) candidates |= tgt.down(table[x]);
  candidates.erase(table[x]);
  for (Point w : src.lower_covers(x)) candidates &= tgt.up(table[w]);
  for (Point w : src.upper_covers(x)) candidates &= tgt.down(table[w]);
  candidates.for_each(fn);
}

}  // namespace

HomotopyVerdict fence_bfs(const OrderMap& f, const OrderMap& g, std::size_t budget) {
  if (!same_space(f.source(), g.source()) || !same_space(f.target(), g.target()))
    throw Error(ErrorCode::mismatched_spaces, "maps have different source or target");
  HomotopyVerdict out;
  if (f == g) {
    out.result = Verdict::homotopic;
    out.certificate = Fence(f);
    return out;
  }
  const FiniteSpace& src = *f.source();
  const FiniteSpace& tgt = *f.target();
  std::unordered_map<std::vector<Point>, std::size_t, TableHash> seen;
  std::vector<std::vector<Point>> nodes;
  std::vector<std::size_t> parent;
  nodes.push_back(f.table());
  parent.push_back(0);
  seen.emplace(f.table(), 0);
  std::size_t head = 0;
  std::optional<std::size_t> goal;
  while (head < nodes.size() && !goal) {
    const std::size_t cur = head++;
    for (Point x = 0; x < src.size() && !goal; ++x) {
      for_each_move(src, tgt, nodes[cur], x, false, [&](Point y) {
        if (goal || nodes.size() > budget) return;
        std::vector<Point> next = nodes[cur];
        next[x] = y;
        auto [it, fresh] = seen.emplace(next, nodes.size());
        if (!fresh) return;
        if (next == g.table()) goal = nodes.size();
        nodes.push_back(std::move(next));
        parent.push_back(cur);
      });
    }
    if (nodes.size() > budget && !goal) {
      out.result = Verdict::unknown;
      out.reason = "fence search budget of " + std::to_string(budget) + " maps exhausted";
      return out;
    }
  }
  if (!goal) {
    out.result = Verdict::not_homotopic;
    out.reason = "component of f exhausted without reaching g (" +
                 std::to_string(nodes.size()) + " maps)";
    return out;
  }
  std::vector<std::size_t> path;
  for (std::size_t v = *goal; v != 0; v = parent[v]) path.push_back(v);
  Fence fence(f);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    fence.push(OrderMap::trusted(f.source(), f.target(), nodes[*it]));
  out.result = Verdict::homotopic;
  out.certificate = std::move(fence);
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphisms

namespace {

struct Signature {
  std::size_t down, up, lower, upper;
  bool operator==(const Signature&) const = default;
};

Signature signature(const FiniteSpace& s, Point p) {
  return {s.down(p).count(), s.up(p).count(), s.lower_covers(p).size(), s.upper_covers(p).size()};
}

}  // namespace

void for_each_isomorphism(const SpacePtr& x, const SpacePtr& y,
                          const std::function<bool(const OrderMap&)>& visit) {
  const std::size_t n = x->size();
  if (n != y->size() || x->covers().size() != y->covers().size()) return;
  std::vector<Signature> sx(n), sy(n);
  for (Point p = 0; p < n; ++p) {
    sx[p] = signature(*x, p);
    sy[p] = signature(*y, p);
  }
  {
    auto key = [](const Signature& s) { return std::tuple(s.down, s.up, s.lower, s.upper); };
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> a, b;
    for (Point p = 0; p < n; ++p) {
      a.push_back(key(sx[p]));
      b.push_back(key(sy[p]));
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return;
  }
  // Visit points so that each one after the first of its component has an
  // already placed Hasse neighbour.
  std::vector<Point> order;
  std::vector<Point> anchor(n, static_cast<Point>(-1));
  {
    std::vector<bool> placed(n, false);
    for (Point s = 0; s < n; ++s) {
      if (placed[s]) continue;
      std::deque<Point> queue{s};
      placed[s] = true;
      while (!queue.empty()) {
        Point p = queue.front();
        queue.pop_front();
        order.push_back(p);
        auto visit_nb = [&](Point q) {
          if (placed[q]) return;
          placed[q] = true;
          anchor[q] = p;
          queue.push_back(q);
        };
        for (Point q : x->lower_covers(p)) visit_nb(q);
        for (Point q : x->upper_covers(p)) visit_nb(q);
      }
    }
  }
  std::vector<Point> image(n, static_cast<Point>(-1));
  std::vector<bool> used(n, false);
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (stop) return;
    if (depth == n) {
      if (!visit(OrderMap::trusted(x, y, image))) stop = true;
      return;
    }
    const Point p = order[depth];
    std::vector<Point> candidates;
    if (anchor[p] != static_cast<Point>(-1)) {
      const Point a = image[anchor[p]];
      const bool p_below = x->leq(p, anchor[p]);
      for (Point q : p_below ? y->lower_covers(a) : y->upper_covers(a)) candidates.push_back(q);
    } else {
      candidates.resize(n);
      std::iota(candidates.begin(), candidates.end(), Point{0});
    }
    for (Point q : candidates) {
      if (used[q] || !(sx[p] == sy[q])) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Point r = order[i];
        if (x->leq(p, r) != y->leq(q, image[r]) || x->leq(r, p) != y->leq(image[r], q)) ok = false;
      }
      if (!ok) continue;
      image[p] = q;
      used[q] = true;
      rec(depth + 1);
      used[q] = false;
      if (stop) return;
    }
  };
  rec(0);
}

std::optional<OrderMap> find_isomorphism(const SpacePtr& x, const SpacePtr& y) {
  std::optional<OrderMap> out;
  for_each_isomorphism(x, y, [&](const OrderMap& f) {
    out = f;
    return false;
  });
  return out;
}

std::optional<OrderMap> minimal_iso_check(const SpacePtr& x, const SpacePtr& y) {
  if (!beat_points(*x).empty()) throw Error(ErrorCode::not_minimal, x->name() + " has beat points");
  if (!beat_points(*y).empty()) throw Error(ErrorCode::not_minimal, y->name() + " has beat points");
  return find_isomorphism(x, y);
}

// ---------------------------------------------------------------------------
// Hom-sets

std::vector<OrderMap> enumerate_maps(const SpacePtr& x, const SpacePtr& y, std::size_t budget) {
  std::vector<OrderMap> out;
  const auto& ext = x->linear_extension();
  std::vector<Point> table(x->size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == ext.size()) {
      if (out.size() >= budget)
        throw Error(ErrorCode::budget_exceeded,
                    "more than " + std::to_string(budget) + " continuous maps");
      out.push_back(OrderMap::trusted(x, y, table));
      return;
    }
    const Point p = ext[depth];
    PointSet candidates = y->all();
    for (Point w : x->lower_covers(p)) candidates &= y->up(table[w]);
    candidates.for_each([&](Point v) {
      table[p] = v;
      rec(depth + 1);
    });
  };
  if (x->size() == 0) return {OrderMap::trusted(x, y, {})};
  rec(0);
  return out;
}

HomComponents hom_components(const SpacePtr& x, const SpacePtr& y, std::size_t budget) {
  HomComponents out;
  out.maps = enumerate_maps(x, y, budget);
  const std::size_t count = out.maps.size();
  std::unordered_map<std::vector<Point>, std::size_t, TableHash> index;
  index.reserve(count * 2);
  for (std::size_t i = 0; i < count; ++i) index.emplace(out.maps[i].table(), i);

  std::vector<std::size_t> uf(count);
  std::iota(uf.begin(), uf.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (uf[a] != a) a = uf[a] = uf[uf[a]];
    return a;
  };
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Point> t = out.maps[i].table();
    for (Point p = 0; p < x->size(); ++p) {
      const Point old = t[p];
      for_each_move(*x, *y, out.maps[i].table(), p, true, [&](Point v) {
        t[p] = v;
        auto it = index.find(t);
        if (it != index.end()) {
          auto a = find(i);
          auto b = find(it->second);
          if (a != b) uf[std::max(a, b)] = std::min(a, b);
        }
      });
      t[p] = old;
    }
  }
  std::unordered_map<std::size_t, std::size_t> label;
  out.component.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto root = find(i);
    auto [it, fresh] = label.emplace(root, out.representatives.size());
    if (fresh) out.representatives.push_back(i);
    out.component[i] = it->second;
  }
  return out;
}

}  // namespace ftc
