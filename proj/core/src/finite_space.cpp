#include "ftc/finite_space.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ftc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::cycle_detected: return "CycleDetected";
    case ErrorCode::invalid_parameter: return "InvalidParameter";
    case ErrorCode::not_order_preserving: return "NotOrderPreserving";
    case ErrorCode::mismatched_spaces: return "MismatchedSpaces";
    case ErrorCode::budget_exceeded: return "BudgetExceeded";
    case ErrorCode::not_open: return "NotOpen";
    case ErrorCode::not_minimal: return "NotMinimal";
    case ErrorCode::base_mismatch: return "BaseMismatch";
    case ErrorCode::not_applicable: return "NotApplicable";
    case ErrorCode::precondition_violated: return "PreconditionViolated";
    case ErrorCode::mismatched_sizes: return "MismatchedSizes";
    case ErrorCode::not_continuous: return "NotContinuous";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::io_error: return "IOError";
    case ErrorCode::internal: return "InternalError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// FiniteSpace

SpacePtr FiniteSpace::from_relation(std::string name, std::vector<std::string> labels,
                                    const std::vector<CoverPair>& pairs) {
  const std::size_t n = labels.size();
  std::vector<std::vector<Point>> below(n);
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<Point>> above(n);
  for (const auto& [lo, hi] : pairs) {
    if (lo >= n || hi >= n)
      throw Error(ErrorCode::invalid_parameter, "pair refers to a point outside the space");
    if (lo == hi)
      throw Error(ErrorCode::cycle_detected, "point " + labels[lo] + " below itself");
    below[hi].push_back(lo);
    above[lo].push_back(hi);
    ++indegree[hi];
  }
  // Kahn's algorithm; leftovers sit on a cycle.
  std::vector<Point> order;
  order.reserve(n);
  std::vector<Point> ready;
  for (Point p = 0; p < n; ++p)
    if (indegree[p] == 0) ready.push_back(p);
  while (!ready.empty()) {
    Point p = ready.back();
    ready.pop_back();
    order.push_back(p);
    for (Point q : above[p])
      if (--indegree[q] == 0) ready.push_back(q);
  }
  if (order.size() != n) {
    Point bad = 0;
    while (indegree[bad] == 0) ++bad;
    throw Error(ErrorCode::cycle_detected, "relation has a cycle through " + labels[bad]);
  }
  std::vector<PointSet> down(n, PointSet(n));
  for (Point p : order) {
    down[p].insert(p);
    for (Point q : below[p]) down[p] |= down[q];
  }
  return from_down_sets(std::move(name), std::move(labels), std::move(down));
}

SpacePtr FiniteSpace::from_down_sets(std::string name, std::vector<std::string> labels,
                                     std::vector<PointSet> down) {
  auto space = std::shared_ptr<FiniteSpace>(new FiniteSpace());
  space->name_ = std::move(name);
  space->labels_ = std::move(labels);
  space->down_ = std::move(down);
  space->finish();
  return space;
}

void FiniteSpace::finish() {
  const std::size_t n = labels_.size();
  if (down_.size() != n) throw Error(ErrorCode::invalid_parameter, "down-set count mismatch");
  up_.assign(n, PointSet(n));
  for (Point y = 0; y < n; ++y) {
    if (!down_[y].contains(y)) throw Error(ErrorCode::invalid_parameter, "down-set not reflexive");
    down_[y].for_each([&](Point x) { up_[x].insert(y); });
  }
  for (Point x = 0; x < n; ++x)
    for (Point y = x + 1; y < n; ++y)
      if (down_[x].contains(y) && down_[y].contains(x))
        throw Error(ErrorCode::cycle_detected, labels_[x] + " and " + labels_[y] + " are equivalent");

  lower_covers_.assign(n, {});
  upper_covers_.assign(n, {});
  covers_.clear();
  for (Point y = 0; y < n; ++y) {
    PointSet strict = down_[y];
    strict.erase(y);
    PointSet shadow(n);
    strict.for_each([&](Point z) {
      PointSet below_z = down_[z];
      below_z.erase(z);
      shadow |= below_z;
    });
    (strict - shadow).for_each([&](Point x) {
      lower_covers_[y].push_back(x);
      upper_covers_[x].push_back(y);
      covers_.push_back({x, y});
    });
  }
  std::sort(covers_.begin(), covers_.end(), [](const CoverPair& a, const CoverPair& b) {
    return std::pair(a.lo, a.hi) < std::pair(b.lo, b.hi);
  });

  linear_extension_.resize(n);
  std::iota(linear_extension_.begin(), linear_extension_.end(), Point{0});
  std::stable_sort(linear_extension_.begin(), linear_extension_.end(),
                   [&](Point a, Point b) { return down_[a].count() < down_[b].count(); });
}

std::pair<Point, Point> FiniteSpace::coordinates(Point p) const {
  if (!is_product()) throw Error(ErrorCode::invalid_parameter, "space is not a product");
  const auto w = static_cast<Point>(right_->size());
  return {p / w, p % w};
}

Point FiniteSpace::point_at(Point x, Point y) const {
  if (!is_product()) throw Error(ErrorCode::invalid_parameter, "space is not a product");
  return x * static_cast<Point>(right_->size()) + y;
}

bool same_order(const FiniteSpace& a, const FiniteSpace& b) {
  if (a.size() != b.size()) return false;
  for (Point p = 0; p < a.size(); ++p)
    if (!(a.down(p) == b.down(p))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// DownSet / OrderMap

bool is_down_closed(const FiniteSpace& space, const PointSet& s) {
  bool ok = true;
  s.for_each([&](Point p) {
    if (ok && !space.down(p).is_subset_of(s)) ok = false;
  });
  return ok;
}

DownSet::DownSet(SpacePtr space, PointSet members)
    : space_(std::move(space)), members_(std::move(members)) {
  if (members_.width() != space_->size())
    throw Error(ErrorCode::invalid_parameter, "point set width does not match space");
  if (!is_down_closed(*space_, members_)) {
    std::ostringstream msg;
    members_.for_each([&](Point p) {
      if (msg.tellp() == 0 && !space_->down(p).is_subset_of(members_)) {
        Point missing = (space_->down(p) - members_).first();
        msg << space_->label(missing) << " < " << space_->label(p) << " is missing";
      }
    });
    throw Error(ErrorCode::not_open, msg.str());
  }
}

std::optional<ContinuityViolation> find_violation(const FiniteSpace& source,
                                                  const FiniteSpace& target,
                                                  const std::vector<Point>& table) {
  if (table.size() != source.size())
    throw Error(ErrorCode::invalid_parameter, "table is not total on the source");
  for (Point v : table)
    if (v >= target.size()) throw Error(ErrorCode::invalid_parameter, "table value outside target");
  for (const auto& [lo, hi] : source.covers())
    if (!target.leq(table[lo], table[hi])) return ContinuityViolation{lo, hi};
  return std::nullopt;
}

std::variant<OrderMap, ContinuityViolation> is_continuous(const SpacePtr& source,
                                                          const SpacePtr& target,
                                                          const std::vector<Point>& table) {
  if (auto v = find_violation(*source, *target, table)) return *v;
  return OrderMap::trusted(source, target, table);
}

OrderMap::OrderMap(SpacePtr source, SpacePtr target, std::vector<Point> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (auto v = find_violation(*source_, *target_, table_)) {
    throw Error(ErrorCode::not_order_preserving,
                source_->label(v->lo) + " <= " + source_->label(v->hi) + " but " +
                    target_->label(table_[v->lo]) + " is not <= " + target_->label(table_[v->hi]));
  }
}

OrderMap OrderMap::trusted(SpacePtr source, SpacePtr target, std::vector<Point> table) {
  OrderMap f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.table_ = std::move(table);
  return f;
}

OrderMap identity_map(const SpacePtr& space) {
  std::vector<Point> t(space->size());
  std::iota(t.begin(), t.end(), Point{0});
  return OrderMap::trusted(space, space, std::move(t));
}

OrderMap constant_map(const SpacePtr& source, const SpacePtr& target, Point value) {
  if (value >= target->size()) throw Error(ErrorCode::invalid_parameter, "constant outside target");
  return OrderMap::trusted(source, target, std::vector<Point>(source->size(), value));
}

OrderMap compose(const OrderMap& g, const OrderMap& f) {
  if (!same_space(f.target(), g.source()))
    throw Error(ErrorCode::mismatched_spaces, "cannot compose: target of f is not source of g");
  std::vector<Point> t(f.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g(f(static_cast<Point>(i)));
  return OrderMap::trusted(f.source(), g.target(), std::move(t));
}

// ---------------------------------------------------------------------------
// Constructors

SpacePtr build_space(std::vector<std::string> labels, const std::vector<CoverPair>& pairs,
                     std::string name) {
  return FiniteSpace::from_relation(std::move(name), std::move(labels), pairs);
}

KhalimskyCircle khalimsky_circle(int n) {
  if (n < 2) throw Error(ErrorCode::invalid_parameter, "Khalimsky circle needs n >= 2");
  std::vector<std::string> labels;
  std::vector<CoverPair> pairs;
  for (int i = 0; i < n; ++i) {
    labels.push_back("a" + std::to_string(i));
    labels.push_back("b" + std::to_string(i));
  }
  for (int i = 0; i < n; ++i) {
    pairs.push_back({KhalimskyCircle::a(n, i), KhalimskyCircle::b(n, i)});
    pairs.push_back({KhalimskyCircle::a(n, i + 1), KhalimskyCircle::b(n, i)});
  }
  auto base = FiniteSpace::from_relation("S1_" + std::to_string(n), std::move(labels), pairs);
  auto tagged = std::shared_ptr<FiniteSpace>(new FiniteSpace(*base));
  tagged->circle_n_ = n;
  return KhalimskyCircle{n, tagged};
}

KhalimskyInterval khalimsky_interval(long k, long l) {
  if (k > l) throw Error(ErrorCode::invalid_parameter, "interval needs k <= l");
  std::vector<std::string> labels;
  std::vector<CoverPair> pairs;
  for (long z = k; z <= l; ++z) labels.push_back(std::to_string(z));
  for (long z = k; z < l; ++z) {
    const auto p = static_cast<Point>(z - k);
    if (z % 2 == 0)
      pairs.push_back({p, p + 1});
    else
      pairs.push_back({p + 1, p});
  }
  auto space = FiniteSpace::from_relation(
      "[" + std::to_string(k) + "," + std::to_string(l) + "]", std::move(labels), pairs);
  return KhalimskyInterval{k, l, space};
}

SpacePtr product(const SpacePtr& x, const SpacePtr& y) {
  const std::size_t nx = x->size();
  const std::size_t ny = y->size();
  const std::size_t n = nx * ny;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Point i = 0; i < nx; ++i)
    for (Point j = 0; j < ny; ++j) labels.push_back("(" + x->label(i) + "," + y->label(j) + ")");
  std::vector<PointSet> down(n, PointSet(n));
  for (Point i = 0; i < nx; ++i)
    for (Point j = 0; j < ny; ++j) {
      auto& d = down[i * ny + j];
      x->down(i).for_each([&](Point a) {
        y->down(j).for_each([&](Point b) { d.insert(static_cast<Point>(a * ny + b)); });
      });
    }
  auto base = FiniteSpace::from_down_sets(x->name() + "x" + y->name(), std::move(labels),
                                          std::move(down));
  auto tagged = std::shared_ptr<FiniteSpace>(new FiniteSpace(*base));
  tagged->left_ = x;
  tagged->right_ = y;
  return tagged;
}

std::pair<OrderMap, OrderMap> projections(const SpacePtr& space) {
  if (!space->is_product()) throw Error(ErrorCode::invalid_parameter, "space is not a product");
  std::vector<Point> p1(space->size());
  std::vector<Point> p2(space->size());
  for (Point p = 0; p < space->size(); ++p) std::tie(p1[p], p2[p]) = space->coordinates(p);
  return {OrderMap::trusted(space, space->left_factor(), std::move(p1)),
          OrderMap::trusted(space, space->right_factor(), std::move(p2))};
}

Subspace subspace(const SpacePtr& space, const PointSet& members, std::string name) {
  Subspace sub;
  sub.to_parent = members.members();
  const std::size_t n = sub.to_parent.size();
  std::vector<Point> index(space->size(), static_cast<Point>(-1));
  for (Point i = 0; i < n; ++i) index[sub.to_parent[i]] = i;
  std::vector<std::string> labels;
  labels.reserve(n);
  std::vector<PointSet> down(n, PointSet(n));
  for (Point i = 0; i < n; ++i) {
    labels.push_back(space->label(sub.to_parent[i]));
    (space->down(sub.to_parent[i]) & members).for_each([&](Point q) { down[i].insert(index[q]); });
  }
  if (name.empty()) name = space->name() + "|sub";
  sub.space = FiniteSpace::from_down_sets(std::move(name), std::move(labels), std::move(down));
  return sub;
}

OrderMap restrict_to(const OrderMap& f, const Subspace& sub) {
  std::vector<Point> t(sub.to_parent.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = f(sub.to_parent[i]);
  return OrderMap::trusted(sub.space, f.target(), std::move(t));
}

// ---------------------------------------------------------------------------
// Intervals and opens

DownSet min_open(const SpacePtr& space, Point x) { return DownSet(space, space->down(x)); }

DownSet interval_down(const SpacePtr& space, Point b) { return min_open(space, b); }

PointSet interval_up(const FiniteSpace& space, Point a) { return space.up(a); }

PointSet interval(const FiniteSpace& space, Point a, Point b) { return space.up(a) & space.down(b); }

DownSet open_hull(const SpacePtr& space, const PointSet& s) {
  PointSet hull = space->none();
  s.for_each([&](Point p) { hull |= space->down(p); });
  return DownSet(space, std::move(hull));
}

PointSet closed_hull(const FiniteSpace& space, const PointSet& s) {
  PointSet hull = space.none();
  s.for_each([&](Point p) { hull |= space.up(p); });
  return hull;
}

PointSet maximal_elements(const FiniteSpace& space) {
  PointSet out = space.none();
  for (Point p = 0; p < space.size(); ++p)
    if (space.upper_covers(p).empty()) out.insert(p);
  return out;
}

PointSet minimal_elements(const FiniteSpace& space) {
  PointSet out = space.none();
  for (Point p = 0; p < space.size(); ++p)
    if (space.lower_covers(p).empty()) out.insert(p);
  return out;
}

std::vector<PointSet> components(const FiniteSpace& space, const PointSet& members) {
  std::vector<PointSet> out;
  PointSet left = members;
  while (!left.empty()) {
    Point seed = left.first();
    PointSet comp = space.none();
    comp.insert(seed);
    left.erase(seed);
    std::vector<Point> stack{seed};
    while (!stack.empty()) {
      Point p = stack.back();
      stack.pop_back();
      ((space.down(p) | space.up(p)) & left).for_each([&](Point q) {
        left.erase(q);
        comp.insert(q);
        stack.push_back(q);
      });
    }
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace ftc
