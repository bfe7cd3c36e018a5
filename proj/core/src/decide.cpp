#include <algorithm>
#include <deque>

#include "ftc/homotopy.hpp"
#include "ftc/khalimsky.hpp"

namespace ftc {

namespace {

using Table = std::vector<Point>;

/// Fence of maps K -> target written as tables over the points of K.
using LocalFence = std::vector<Table>;

HomotopyVerdict verdict(Verdict v, std::string reason) {
  HomotopyVerdict out;
  out.result = v;
  out.reason = std::move(reason);
  return out;
}

/// f ~ f∘ρ_j ~ ... ~ ψ∘r ~ ... ~ g∘ρ_j ~ g for a core fence ψ between f∘i and g∘i.
Fence sandwich(const OrderMap& f, const OrderMap& g, const CoreResult& c, const Fence& core_fence) {
  Fence out(f);
  for (const auto& rho : c.fence.maps()) out.push(compose(f, rho));
  for (const auto& psi : core_fence.maps()) out.push(compose(psi, c.retraction));
  const auto& rhos = c.fence.maps();
  for (auto it = rhos.rbegin(); it != rhos.rend(); ++it) out.push(compose(g, *it));
  out.push(g);
  return out;
}

HomotopyVerdict core_bfs(const OrderMap& f, const OrderMap& g, const HomotopyOptions& opt) {
  CoreResult c = core(f.source());
  HomotopyVerdict v = fence_bfs(compose(f, c.inclusion), compose(g, c.inclusion), opt.budget);
  if (v.homotopic() && opt.certificate) v.certificate = sandwich(f, g, c, *v.certificate);
  if (!opt.certificate) v.certificate.reset();
  return v;
}

struct Component {
  Subspace sub;
  std::vector<long> lf, lg;     // lifts to the line along a spanning tree
  std::vector<Point> parent;    // tree parent (sub ids), root is its own parent
  bool f_winds = false;
  std::optional<std::pair<Point, Point>> clash;  // Hasse edge with different windings
};

Component analyse(const SpacePtr& src, const PointSet& members, const std::vector<long>& rf,
                  const std::vector<long>& rg, int n) {
  Component c;
  c.sub = subspace(src, members);
  const FiniteSpace& s = *c.sub.space;
  const std::size_t size = s.size();
  const long twice_n = 2L * n;
  auto step = [&](long a, long b) {
    const long d = mod(b - a, twice_n);
    return d == 0 ? 0L : d == 1 ? 1L : -1L;
  };
  auto res_f = [&](Point i) { return rf[c.sub.to_parent[i]]; };
  auto res_g = [&](Point i) { return rg[c.sub.to_parent[i]]; };
  c.lf.assign(size, 0);
  c.lg.assign(size, 0);
  c.parent.assign(size, 0);
  std::vector<bool> seen(size, false);
  std::deque<Point> queue{0};
  seen[0] = true;
  c.lf[0] = res_f(0);
  c.lg[0] = res_g(0);
  while (!queue.empty()) {
    Point x = queue.front();
    queue.pop_front();
    auto visit = [&](Point y) {
      if (seen[y]) return;
      seen[y] = true;
      c.parent[y] = x;
      c.lf[y] = c.lf[x] + step(res_f(x), res_f(y));
      c.lg[y] = c.lg[x] + step(res_g(x), res_g(y));
      queue.push_back(y);
    };
    for (Point y : s.lower_covers(x)) visit(y);
    for (Point y : s.upper_covers(x)) visit(y);
  }
  for (const auto& [x, y] : s.covers()) {
    const long ef = c.lf[y] - c.lf[x] - step(res_f(x), res_f(y));
    const long eg = c.lg[y] - c.lg[x] - step(res_g(x), res_g(y));
    if (ef != eg && !c.clash) c.clash = std::pair(x, y);
    if (ef != 0) c.f_winds = true;
  }
  return c;
}

/// Closed walk through the tree path x .. y and the edge y - x, in parent ids.
std::vector<Point> tree_cycle(const Component& c, Point x, Point y) {
  auto chain = [&](Point p) {
    std::vector<Point> out{p};
    while (c.parent[out.back()] != out.back() && out.back() != 0) out.push_back(c.parent[out.back()]);
    std::reverse(out.begin(), out.end());
    return out;
  };
  auto ax = chain(x);
  auto ay = chain(y);
  std::size_t j = 0;
  while (j < ax.size() && j < ay.size() && ax[j] == ay[j]) ++j;
  std::vector<Point> cycle(ax.begin() + static_cast<long>(j) - 1, ax.end());
  for (auto it = ay.rbegin(); it != ay.rend() - static_cast<long>(j); ++it) cycle.push_back(*it);
  for (auto& p : cycle) p = c.sub.to_parent[p];
  return cycle;
}

LocalFence clamp_fence(const std::vector<long>& lf, const std::vector<long>& lg,
                       const CircleChart& chart) {
  const long twice_n = 2L * chart.n;
  auto table_of = [&](const std::vector<long>& l, long cap) {
    Table t(l.size());
    for (std::size_t i = 0; i < l.size(); ++i)
      t[i] = chart.point[static_cast<std::size_t>(mod(std::min(l[i], cap), twice_n))];
    return t;
  };
  auto down = [&](const std::vector<long>& l) {
    LocalFence out;
    const long hi = *std::max_element(l.begin(), l.end());
    const long lo = *std::min_element(l.begin(), l.end());
    for (long v = hi; v >= lo; --v) out.push_back(table_of(l, v));
    return out;
  };
  LocalFence out = down(lf);
  LocalFence back = down(lg);
  const long from = mod(*std::min_element(lf.begin(), lf.end()), twice_n);
  const long to = mod(*std::min_element(lg.begin(), lg.end()), twice_n);
  const long dir = mod(to - from, twice_n) <= chart.n ? 1 : -1;
  for (long v = from; v != to;) {
    v = mod(v + dir, twice_n);
    out.emplace_back(lf.size(), chart.point[static_cast<std::size_t>(v)]);
  }
  out.insert(out.end(), back.rbegin(), back.rend());
  return out;
}

/// f, g into a Khalimsky circle described by `chart`.
HomotopyVerdict circle_decide(const OrderMap& f, const OrderMap& g, const CircleChart& chart,
                              const HomotopyOptions& opt, bool allow_bfs) {
  const SpacePtr& src = f.source();
  const SpacePtr& tgt = f.target();
  std::vector<long> rf(src->size()), rg(src->size());
  for (Point p = 0; p < src->size(); ++p) {
    rf[p] = chart.residue[f(p)];
    rg[p] = chart.residue[g(p)];
  }
  Table cur = f.table();
  Fence fence(f);
  std::optional<HomotopyVerdict> pending_unknown;
  auto emit = [&](const Subspace& sub, const LocalFence& local) {
    if (!opt.certificate) return;
    for (const auto& t : local) {
      for (Point i = 0; i < t.size(); ++i) cur[sub.to_parent[i]] = t[i];
      fence.push(OrderMap::trusted(src, tgt, cur));
    }
  };
  std::vector<std::string> notes;

  for (const PointSet& members : components(*src, src->all())) {
    Component c = analyse(src, members, rf, rg, chart.n);
    if (c.clash) {
      HomotopyVerdict v = verdict(Verdict::not_homotopic, "the maps wind differently around a cycle");
      v.obstruction = tree_cycle(c, c.clash->first, c.clash->second);
      return v;
    }
    const OrderMap fk = restrict_to(f, c.sub);
    const OrderMap gk = restrict_to(g, c.sub);
    if (fk == gk) continue;
    if (!c.f_winds) {
      emit(c.sub, clamp_fence(c.lf, c.lg, chart));
      continue;
    }
    CoreResult cr = core(c.sub.space);
    const OrderMap fc = compose(fk, cr.inclusion);
    const OrderMap gc = compose(gk, cr.inclusion);
    auto core_chart = recognize_circle(*cr.core);
    std::optional<Fence> core_fence;
    if (core_chart) {
      auto as_circle_map = [&](const OrderMap& h) {
        CircleMap cm{core_chart->n, chart.n, {}};
        for (Point q : core_chart->point) cm.table.push_back(chart.residue[h(q)]);
        return cm;
      };
      const CircleMap cf = as_circle_map(fc);
      const CircleMap cg = as_circle_map(gc);
      if (!classify_homotopic(cf, cg)) {
        HomotopyVerdict v = verdict(
            Verdict::not_homotopic,
            "on the core circle of half size " + std::to_string(core_chart->n) +
                " both maps have degree " + std::to_string(degree(cf)) + ", which is rigid into half size " +
                std::to_string(chart.n));
        for (Point q : core_chart->point) v.obstruction.push_back(c.sub.to_parent[cr.core_to_parent[q]]);
        return v;
      }
      if (opt.certificate) {
        auto steps = circle_fence(cf, cg);
        Fence cfence(fc);
        for (const auto& h : *steps) {
          Table t(cr.core->size());
          for (std::size_t r = 0; r < h.table.size(); ++r)
            t[core_chart->point[r]] = chart.point[static_cast<std::size_t>(h.table[r])];
          cfence.push(OrderMap::trusted(cr.core, tgt, std::move(t)));
        }
        core_fence = std::move(cfence);
      }
    } else {
      if (!allow_bfs) {
        if (!pending_unknown)
          pending_unknown = verdict(Verdict::unknown, "core of a winding component is not a circle");
        continue;
      }
      HomotopyVerdict v = fence_bfs(fc, gc, opt.budget);
      if (v.refuted()) return v;
      if (!v.homotopic()) {
        if (!pending_unknown) pending_unknown = v;
        continue;
      }
      core_fence = std::move(v.certificate);
    }
    if (opt.certificate) {
      Fence local = sandwich(fk, gk, cr, *core_fence);
      LocalFence tables;
      for (const auto& h : local.maps()) tables.push_back(h.table());
      emit(c.sub, tables);
    }
  }
  if (pending_unknown) {
    pending_unknown->certificate.reset();
    return *pending_unknown;
  }
  HomotopyVerdict v = verdict(Verdict::homotopic, "");
  if (opt.certificate) {
    fence.push(g);
    v.certificate = std::move(fence);
  }
  return v;
}

HomotopyVerdict decide(const OrderMap& f, const OrderMap& g, const HomotopyOptions& opt);

HomotopyVerdict product_decide(const OrderMap& f, const OrderMap& g, const HomotopyOptions& opt) {
  const SpacePtr& tgt = f.target();
  auto [p1, p2] = projections(tgt);
  const OrderMap f1 = compose(p1, f), g1 = compose(p1, g);
  const OrderMap f2 = compose(p2, f), g2 = compose(p2, g);
  HomotopyVerdict a = decide(f1, g1, opt);
  if (a.refuted()) {
    a.reason = "first coordinate: " + a.reason;
    return a;
  }
  HomotopyVerdict b = decide(f2, g2, opt);
  if (b.refuted()) {
    b.reason = "second coordinate: " + b.reason;
    return b;
  }
  if (!a.homotopic() || !b.homotopic()) {
    HomotopyVerdict u = !a.homotopic() ? a : b;
    u.certificate.reset();
    return u;
  }
  HomotopyVerdict v = verdict(Verdict::homotopic, "");
  if (opt.certificate) {
    Fence fence(f);
    const std::size_t n = f.table().size();
    for (const auto& h : a.certificate->maps()) {
      Table t(n);
      for (Point x = 0; x < n; ++x) t[x] = tgt->point_at(h(x), f2(x));
      fence.push(OrderMap::trusted(f.source(), tgt, std::move(t)));
    }
    for (const auto& h : b.certificate->maps()) {
      Table t(n);
      for (Point x = 0; x < n; ++x) t[x] = tgt->point_at(g1(x), h(x));
      fence.push(OrderMap::trusted(f.source(), tgt, std::move(t)));
    }
    v.certificate = std::move(fence);
  }
  return v;
}

HomotopyVerdict exhaustive(const OrderMap& f, const OrderMap& g, const HomotopyOptions& opt) {
  HomComponents hc;
  try {
    hc = hom_components(f.source(), f.target(), opt.budget);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::budget_exceeded) throw;
    return verdict(Verdict::unknown, e.what());
  }
  std::optional<std::size_t> cf, cg;
  for (std::size_t i = 0; i < hc.maps.size(); ++i) {
    if (hc.maps[i] == f) cf = hc.component[i];
    if (hc.maps[i] == g) cg = hc.component[i];
  }
  if (cf != cg)
    return verdict(Verdict::not_homotopic, "different components of the hom-set (" +
                                               std::to_string(hc.count()) + " components)");
  if (!opt.certificate) return verdict(Verdict::homotopic, "");
  return fence_bfs(f, g, hc.maps.size() + 1);
}

HomotopyVerdict decide(const OrderMap& f, const OrderMap& g, const HomotopyOptions& opt) {
  if (f == g) {
    HomotopyVerdict v = verdict(Verdict::homotopic, "");
    if (opt.certificate) v.certificate = Fence(f);
    return v;
  }
  switch (opt.strategy) {
    case Strategy::fence_bfs: {
      HomotopyVerdict v = fence_bfs(f, g, opt.budget);
      if (!opt.certificate) v.certificate.reset();
      return v;
    }
    case Strategy::exhaustive_components:
      return exhaustive(f, g, opt);
    case Strategy::core_degree:
    case Strategy::automatic:
      break;
  }
  const bool fallback = opt.strategy == Strategy::automatic;
  if (f.target()->is_product()) return product_decide(f, g, opt);
  if (auto chart = circle_chart(*f.target())) return circle_decide(f, g, *chart, opt, fallback);
  if (!fallback) return verdict(Verdict::unknown, "target is not a Khalimsky circle");
  return core_bfs(f, g, opt);
}

}  // namespace

HomotopyVerdict homotopic(const OrderMap& f, const OrderMap& g, const HomotopyOptions& options) {
  if (!same_space(f.source(), g.source()) || !same_space(f.target(), g.target()))
    throw Error(ErrorCode::mismatched_spaces, "maps have different source or target");
  return decide(f, g, options);
}

HomotopyVerdict nullhomotopic_in(const DownSet& open, const HomotopyOptions& options) {
  const SpacePtr& x = open.space();
  if (open.empty()) {
    HomotopyVerdict v;
    v.result = Verdict::homotopic;
    v.reason = "empty open set";
    return v;
  }
  Subspace sub = subspace(x, open.members(), x->name() + "|U");
  OrderMap inclusion = OrderMap::trusted(sub.space, x, sub.to_parent);
  OrderMap constant = constant_map(sub.space, x, sub.to_parent.front());
  return homotopic(inclusion, constant, options);
}

}  // namespace ftc
