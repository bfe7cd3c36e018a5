#include "ftc/witness.hpp"

#include <algorithm>
#include <cstdlib>

#include "ftc/invariants.hpp"
#include "ftc/khalimsky.hpp"

namespace ftc {

std::string_view to_string(ChainVariant v) {
  return v == ChainVariant::literal ? "literal" : "repaired";
}

int witness_m(int k) { return k % 2 == 1 ? k : k + 1; }

Point residue_point(const FiniteSpace& p, long x, long y) {
  const long twice = static_cast<long>(p.left_factor()->size());
  auto id = [&](long r) { return static_cast<Point>((((r - 1) % twice) + twice) % twice); };
  return p.point_at(id(x), id(y));
}

std::pair<long, long> residues(const FiniteSpace& p, Point q) {
  auto [x, y] = p.coordinates(q);
  return {static_cast<long>(x) + 1, static_cast<long>(y) + 1};
}

std::string residue_label(const FiniteSpace& p, Point q) {
  auto [x, y] = residues(p, q);
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

namespace {

void require_k(int k) {
  if (k < 5) throw Error(ErrorCode::invalid_parameter, "the witness needs k >= 5");
}

std::vector<long> range(long a, long b) {
  std::vector<long> out;
  for (long v = a; v <= b; ++v) out.push_back(v);
  return out;
}

std::vector<long> join(std::vector<long> a, const std::vector<long>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

long wrap(long r, int k) { return ((r - 1) % (2L * k) + 2L * k) % (2L * k) + 1; }

bool in(const std::vector<long>& values, long r, int k) {
  return std::any_of(values.begin(), values.end(), [&](long v) { return wrap(v, k) == r; });
}

/// Residue rectangle xs x ys.
struct Block {
  std::vector<long> xs, ys;

  bool contains(long x, long y, int k) const { return in(xs, x, k) && in(ys, y, k); }
  PointSet points(const FiniteSpace& p) const {
    PointSet s = p.none();
    for (long x : xs)
      for (long y : ys) s.insert(residue_point(p, x, y));
    return s;
  }
};

struct Blocks {
  int k, m;
  Block a0, a1, a2, a3, a4, a0p, a3p, a3pp;
};

Blocks blocks(int k) {
  const int m = witness_m(k);
  const long t = 2L * k;
  Blocks b{k, m, {}, {}, {}, {}, {}, {}, {}, {}};
  b.a0 = {range(1, t - 1), {1, 2, 3}};
  b.a1 = {range(m, m + 2), range(3, t - 1)};
  b.a2 = {join(range(m + 2, t), {1}), range(t - 3, t - 1)};
  b.a3 = {range(1, m - 2), range(5, t - 1)};
  b.a4 = {{1, 2, 3}, {t - 1, t, 1}};
  b.a0p = {range(1, m + 2), {1, 2, 3}};
  b.a3p = {{1, 2, 3}, range(5, t - 1)};
  b.a3pp = {{1, 2, 3}, range(t - 3, t - 1)};
  return b;
}

std::optional<ContinuityViolation> violation_on(const FiniteSpace& p, const PointSet& domain,
                                                const std::vector<Point>& table) {
  std::optional<ContinuityViolation> out;
  domain.for_each([&](Point hi) {
    if (out) return;
    (p.down(hi) & domain).for_each([&](Point lo) {
      if (!out && !p.leq(table[lo], table[hi])) out = ContinuityViolation{lo, hi};
    });
  });
  return out;
}

class ChainBuilder {
public:
  explicit ChainBuilder(WitnessBundle& b) : b_(b), p_(*b.space) {}

  /// Adds a stage on `domain`; `move` returns the image residues of (x, y).
  template <typename Move>
  const Stage& add(std::string name, char chain, const PointSet& domain, Move&& move) {
    Stage s;
    s.name = std::move(name);
    s.chain = chain;
    s.domain = domain;
    s.table.resize(p_.size());
    for (Point q = 0; q < p_.size(); ++q) s.table[q] = q;
    s.image = p_.none();
    domain.for_each([&](Point q) {
      auto [x, y] = residues(p_, q);
      auto [nx, ny] = move(x, y);
      s.table[q] = residue_point(p_, nx, ny);
      s.image.insert(s.table[q]);
    });
    s.violation = violation_on(p_, domain, s.table);
    b_.stages.push_back(std::move(s));
    return b_.stages.back();
  }

private:
  WitnessBundle& b_;
  const FiniteSpace& p_;
};

using Pair = std::pair<long, long>;

bool member(const std::vector<Pair>& pts, long x, long y, int k) {
  return std::any_of(pts.begin(), pts.end(),
                     [&](const Pair& q) { return wrap(q.first, k) == x && wrap(q.second, k) == y; });
}

}  // namespace

SpacePtr witness_space(int k) {
  require_k(k);
  auto c = khalimsky_circle(k).space;
  return product(c, c);
}

DownSet build_U(int k) {
  require_k(k);
  auto y = witness_space(k);
  const Blocks b = blocks(k);
  PointSet u = b.a0.points(*y) | b.a1.points(*y) | b.a2.points(*y) | b.a3.points(*y) | b.a4.points(*y);
  return DownSet(y, std::move(u));
}

DownSet build_V(int k) {
  DownSet u = build_U(k);
  return open_hull(u.space(), u.members().complement());
}

PointSet displayed_core(int k, ChainVariant variant) {
  require_k(k);
  auto y = witness_space(k);
  const int m = witness_m(k);
  const long t = 2L * k;
  const bool lit = variant == ChainVariant::literal;
  // Upper-corner ordinates.
  const long u1 = lit ? m + 1 : t - 4;
  PointSet c = y->none();
  auto add = [&](long x, long yy) { c.insert(residue_point(*y, x, yy)); };
  for (long a : {3, 4}) add(a, a - 2);
  for (long b = 4; b <= m - 1; ++b) add(b, 2);
  for (long x = m - 1; x <= m + 1; ++x) add(x, x + 3 - m);
  for (long d = 4; d <= u1; ++d) add(m + 1, d);
  for (long e = 0; e < 3; ++e) add(m + 1 + e, u1 + e);
  for (long f = m + 3; f <= t; ++f) add(f, u1 + 2);
  for (long g : {1, 2}) add(g, g + t - 2);
  return c;
}

WitnessBundle build_chain(int k, ChainVariant variant) {
  require_k(k);
  const int m = witness_m(k);
  const long t = 2L * k;
  const bool lit = variant == ChainVariant::literal;
  const Blocks bl = blocks(k);
  DownSet u = build_U(k);
  DownSet v = build_V(k);
  WitnessBundle b{.k = k, .m = m, .variant = variant, .space = u.space(), .U = u, .V = v};
  const FiniteSpace& p = *b.space;
  ChainBuilder chain(b);

  PointSet domain = u.members();
  for (int i = 0; i <= t - m - 3; ++i) {
    const long ki = t - 1 - i;
    const long li = m - 2 - i;
    const long floor3 = std::max<long>(3, li);
    domain = chain
                 .add("f" + std::to_string(i), 'f', u.members(),
                      [&](long x, long y) -> Pair {
                        if (bl.a0.contains(x, y, k) && ki <= x) return {ki, y};
                        if (bl.a3.contains(x, y, k) && floor3 <= x) return {lit ? li : floor3, y};
                        return {x, y};
                      })
                 .image;
  }
  b.C1 = domain;

  for (int i = 0; i <= t - 8; ++i) {
    domain = chain
                 .add("g" + std::to_string(i), 'g', b.C1,
                      [&](long x, long y) -> Pair {
                        if (bl.a3p.contains(x, y, k) && y <= 5 + i) return {x, 5 + i};
                        return {x, y};
                      })
                 .image;
  }
  b.C2 = domain;

  const long u1 = lit ? m + 1 : t - 4;
  const Block right_a{{1}, {1, 2, t}};
  const Block right_b{{m}, range(4, t - 2)};
  const Block left_a{{3}, lit ? std::vector<long>{t - 1, t} : std::vector<long>{t - 2, t - 1, t}};
  const Block left_b{{m + 2}, range(2, u1)};
  const Block up_a{range(4, m + 1), {1}};
  const Block up_b{{1, 2}, {t - 3}};
  const Block up_c{range(m + 3, t), {t - 3}};
  const Block down_a{range(2, m - 1), {3}};
  const Block down_b{range(m + 1, t), {t - 1}};
  const std::vector<Pair> up_left{{m + 2, 1}, {3, u1 + 1}};
  const std::vector<Pair> down_right{{1, 3}, {m, t - 1}};
  b.C3 = chain
             .add("h0", 'h', b.C2,
                  [&](long x, long y) -> Pair {
                    if (right_a.contains(x, y, k) || right_b.contains(x, y, k)) return {x + 1, y};
                    if (left_a.contains(x, y, k) || left_b.contains(x, y, k)) return {x - 1, y};
                    if (up_a.contains(x, y, k) || up_b.contains(x, y, k) || up_c.contains(x, y, k))
                      return {x, y + 1};
                    if (down_a.contains(x, y, k) || down_b.contains(x, y, k)) return {x, y - 1};
                    if (member(up_left, x, y, k)) return {x - 1, y + 1};
                    if (member(down_right, x, y, k)) return {x + 1, y - 1};
                    return {x, y};
                  })
             .image;

  const std::vector<Pair> to_top{{1, t - 2}, {2, t - 2}, {2, t - 1}};
  const std::vector<Pair> to_bottom{{2, 1}, {2, 2}, {3, 2}};
  const std::vector<Pair> to_middle{{m, 2}, {m + 1, 2}, {m + 1, 3}};
  const std::vector<Pair> to_corner{{m + 1, u1 + 1}, {m + 1, u1 + 2}, {m + 2, u1 + 2}};
  b.C = chain
            .add("h1", 'i', b.C3,
                 [&](long x, long y) -> Pair {
                   if (member(to_top, x, y, k)) return {1, t - 1};
                   if (member(to_bottom, x, y, k)) return {3, 1};
                   if (member(to_middle, x, y, k)) return {m, 3};
                   if (member(to_corner, x, y, k)) return {m + 2, u1 + 1};
                   return {x, y};
                 })
            .image;

  b.displayed_C = displayed_core(k, variant);
  b.claimed_C1 = bl.a0p.points(p) | bl.a1.points(p) | bl.a2.points(p) | bl.a3p.points(p) | bl.a4.points(p);
  b.claimed_C2 = bl.a0p.points(p) | bl.a1.points(p) | bl.a2.points(p) | bl.a3pp.points(p) | bl.a4.points(p);
  return b;
}

OrderMap stage_map(const WitnessBundle& bundle, const Stage& stage) {
  const FiniteSpace& p = *bundle.space;
  if (stage.violation)
    throw Error(ErrorCode::not_continuous,
                "stage " + stage.name + ": " + residue_label(p, stage.violation->lo) + " <= " +
                    residue_label(p, stage.violation->hi) + " but " +
                    residue_label(p, stage.table[stage.violation->lo]) + " is not below " +
                    residue_label(p, stage.table[stage.violation->hi]));
  if (!stage.image.is_subset_of(stage.domain))
    throw Error(ErrorCode::not_continuous, "stage " + stage.name + " leaves its domain");
  Subspace sub = subspace(bundle.space, stage.domain, stage.name);
  std::vector<Point> index(p.size(), 0);
  for (Point i = 0; i < sub.to_parent.size(); ++i) index[sub.to_parent[i]] = i;
  std::vector<Point> table;
  for (Point q : sub.to_parent) table.push_back(index[stage.table[q]]);
  return OrderMap(sub.space, sub.space, std::move(table));
}

bool WitnessReport::passed() const noexcept {
  return checks.size() == 6 &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

std::vector<std::string> labels_of(const FiniteSpace& p, const PointSet& s) {
  std::vector<std::string> out;
  s.for_each([&](Point q) { out.push_back(residue_label(p, q)); });
  return out;
}

std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& s : parts) out += (out.empty() ? "" : " ") + s;
  return out;
}

/// Degrees of the projections on a circle inside the product, oriented so the
/// first is nonnegative.
std::pair<long, long> projection_degrees(const FiniteSpace& p, const CircleChart& chart,
                                         const std::vector<Point>& to_product) {
  std::vector<long> t1, t2;
  const long twice = 2L * chart.n;
  for (long r = 0; r < twice; ++r) {
    auto [x, y] = p.coordinates(to_product[chart.point[static_cast<std::size_t>(r)]]);
    t1.push_back(x);
    t2.push_back(y);
  }
  const int k = static_cast<int>(p.left_factor()->size() / 2);
  long d1 = degree(make_circle_map(chart.n, k, t1));
  long d2 = degree(make_circle_map(chart.n, k, t2));
  if (d1 < 0) {
    d1 = -d1;
    d2 = -d2;
  }
  return {d1, d2};
}

OpenSetReport examine(const DownSet& open, const HomotopyOptions& options) {
  OpenSetReport r;
  const FiniteSpace& p = *open.space();
  r.size = open.size();
  Subspace sub = subspace(open.space(), open.members());
  CoreResult cr = core(sub.space);
  r.core_size = cr.core->size();
  if (auto chart = recognize_circle(*cr.core)) {
    r.circle_n = chart->n;
    std::vector<Point> to_product;
    for (Point q : cr.core_to_parent) to_product.push_back(sub.to_parent[q]);
    auto [d1, d2] = projection_degrees(p, *chart, to_product);
    r.degree1 = d1;
    r.degree2 = d2;
  }
  auto v = is_section_categorical(open, options);
  if (v.homotopic() && v.certificate) {
    auto [p1, p2] = projections(open.space());
    auto rep = replay(*v.certificate, restrict_to(p1, sub), restrict_to(p2, sub));
    if (!rep.ok) {
      r.verdict = Verdict::unknown;
      r.reason = "certificate replay failed: " + rep.reason;
      return r;
    }
  }
  r.verdict = v.result;
  r.reason = v.reason;
  return r;
}

std::string circle_text(const OpenSetReport& r) {
  if (!r.circle_n) return "core has " + std::to_string(r.core_size) + " points and is not a circle";
  return "core is a circle of half-size " + std::to_string(*r.circle_n) + ", degrees (" +
         std::to_string(*r.degree1) + ", " + std::to_string(*r.degree2) + ")";
}

}  // namespace

WitnessReport verify_bundle(int k, ChainVariant variant, const HomotopyOptions& options) {
  WitnessBundle b = build_chain(k, variant);
  const FiniteSpace& p = *b.space;
  WitnessReport r;
  r.k = k;
  r.m = b.m;
  r.variant = variant;
  r.claimed_n = 2L * k + b.m + 2;

  bool all_continuous = true;
  bool all_fenced = true;
  std::string first_break, first_fence;
  const Stage* prev = nullptr;
  for (const Stage& s : b.stages) {
    StageReport sr;
    sr.name = s.name;
    sr.domain_size = s.domain.count();
    sr.image_size = s.image.count();
    if (s.violation) {
      sr.continuous = false;
      sr.violation = residue_label(p, s.violation->lo) + " <= " + residue_label(p, s.violation->hi) +
                     " maps to " + residue_label(p, s.table[s.violation->lo]) + ", " +
                     residue_label(p, s.table[s.violation->hi]);
    }
    sr.into_domain = s.image.is_subset_of(s.domain);
    s.image.for_each([&](Point q) { sr.fixes_image = sr.fixes_image && s.table[q] == q; });
    // Compare with the previous stage of the chain, or the identity.
    const bool same_chain = prev && prev->chain == s.chain;
    bool below = true, above = true;
    s.domain.for_each([&](Point q) {
      const Point before = same_chain ? prev->table[q] : q;
      below = below && p.leq(before, s.table[q]);
      above = above && p.leq(s.table[q], before);
    });
    sr.against_previous = below && above ? Order::equal
                          : below        ? Order::above
                          : above        ? Order::below
                                         : Order::incomparable;
    if ((!sr.continuous || !sr.into_domain || !sr.fixes_image) && first_break.empty())
      first_break = s.name + (sr.continuous ? "" : ": " + sr.violation) +
                    (sr.into_domain ? "" : " (leaves its domain)") +
                    (sr.fixes_image ? "" : " (moves a point of its image)");
    if (sr.against_previous == Order::incomparable && first_fence.empty())
      first_fence = s.name + " is incomparable with " + (same_chain ? prev->name : "the identity");
    all_continuous = all_continuous && sr.continuous && sr.into_domain && sr.fixes_image;
    all_fenced = all_fenced && sr.against_previous != Order::incomparable;
    r.stages.push_back(std::move(sr));
    prev = &s;
  }
  r.checks.push_back({"stages continuous", all_continuous,
                      all_continuous ? std::to_string(b.stages.size()) + " stages" : first_break});
  r.checks.push_back({"stages fence-comparable", all_fenced, all_fenced ? "every step comparable" : first_fence});

  r.c_size = b.C.count();
  const bool same_c = b.C == b.displayed_C;
  std::string c_detail = std::to_string(r.c_size) + " points";
  if (!same_c) {
    if (auto extra = b.C - b.displayed_C; !extra.empty())
      c_detail += "; not displayed: " + joined(labels_of(p, extra));
    if (auto missing = b.displayed_C - b.C; !missing.empty())
      c_detail += "; displayed only: " + joined(labels_of(p, missing));
  }
  r.checks.push_back({"final image equals displayed C", same_c, c_detail});

  Subspace c_sub = subspace(b.space, b.C, "C");
  auto c_chart = recognize_circle(*c_sub.space);
  if (c_chart) r.n_C = c_chart->n;
  r.U = examine(b.U, options);
  {
    Subspace u_sub = subspace(b.space, b.U.members());
    CoreResult cr = core(u_sub.space);
    const bool iso = c_chart && find_isomorphism(cr.core, c_sub.space).has_value();
    std::string detail = "core of U has " + std::to_string(cr.core->size()) + " points";
    if (c_chart) detail += "; C is a circle of half-size " + std::to_string(c_chart->n);
    else detail += "; C is not a circle";
    r.checks.push_back({"core of U homeomorphic to C", iso, detail});
  }

  {
    bool ok = false;
    std::string detail = "C is not a circle";
    if (c_chart) {
      auto [d1, d2] = projection_degrees(p, *c_chart, c_sub.to_parent);
      const bool unit = (d1 == 1 || d1 == -1) && d1 == d2;
      const bool small = std::abs(d1) * k < c_chart->n;
      std::vector<long> t1, t2;
      for (long q = 0; q < 2L * c_chart->n; ++q) {
        auto [x, y] = p.coordinates(c_sub.to_parent[c_chart->point[static_cast<std::size_t>(q)]]);
        t1.push_back(x);
        t2.push_back(y);
      }
      const bool classified = classify_homotopic(make_circle_map(c_chart->n, k, t1),
                                                 make_circle_map(c_chart->n, k, t2));
      ok = unit && small && classified && r.U.verdict == Verdict::homotopic;
      detail = "degrees (" + std::to_string(d1) + ", " + std::to_string(d2) + "), " +
               std::to_string(std::abs(d1)) + " * " + std::to_string(k) + (small ? " < " : " >= ") +
               std::to_string(c_chart->n) + ", classification " + (classified ? "homotopic" : "not homotopic") +
               "; projections on U: " + std::string(to_string(r.U.verdict));
    }
    r.checks.push_back({"projections on C have equal unit degree", ok, detail});
  }

  r.V = examine(b.V, options);
  {
    const bool ok = r.V.verdict == Verdict::homotopic;
    r.checks.push_back({"projections on V homotopic", ok,
                        circle_text(r.V) + "; " + std::string(to_string(r.V.verdict)) +
                            (r.V.reason.empty() ? "" : ": " + r.V.reason)});
  }

  r.a5_inferred = labels_of(p, b.C1 - b.claimed_C1);
  if (r.n_C && *r.n_C != r.claimed_n)
    r.divergences.push_back("C is a circle of half-size " + std::to_string(*r.n_C) +
                            "; the displayed formula 2k+m+2 gives " + std::to_string(r.claimed_n));
  if (!r.a5_inferred.empty())
    r.divergences.push_back("A5 (inferred) = " + joined(r.a5_inferred));
  else
    r.divergences.push_back("A5 (inferred) is empty");
  if (auto missing = b.claimed_C1 - b.C1; !missing.empty())
    r.divergences.push_back("C1 misses claimed points " + joined(labels_of(p, missing)));
  const PointSet c2_claim = b.claimed_C2 | (b.C1 - b.claimed_C1);
  if (!(c2_claim == b.C2)) {
    std::string text = "C2 differs from A0' u A1 u A2 u A3'' u A4 u A5:";
    if (auto extra = b.C2 - c2_claim; !extra.empty()) text += " extra " + joined(labels_of(p, extra));
    if (auto missing = c2_claim - b.C2; !missing.empty()) text += " missing " + joined(labels_of(p, missing));
    r.divergences.push_back(text);
  }
  r.divergences.push_back("label drift: C1 is used where the display writes U1, and C = h1(C3) where it writes h1(C2)");
  if (variant == ChainVariant::repaired) {
    const WitnessBundle lit = build_chain(k, ChainVariant::literal);
    std::string first;
    for (const Stage& s : lit.stages) {
      if (s.violation) {
        first = s.name + " is not continuous at " + residue_label(p, s.violation->lo) + " <= " +
                residue_label(p, s.violation->hi);
        break;
      }
      if (!s.image.is_subset_of(s.domain)) {
        first = s.name + " leaves its domain";
        break;
      }
    }
    if (!first.empty() || !(lit.C == lit.displayed_C))
      r.divergences.push_back("literal chain: " + (first.empty() ? "final image differs from the display" : first));
    else
      r.divergences.push_back("literal chain agrees with the repaired one");
  }
  return r;
}

}  // namespace ftc
