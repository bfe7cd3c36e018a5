#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ftc/error.hpp"
#include "ftc/point_set.hpp"

namespace ftc {

class FiniteSpace;
using SpacePtr = std::shared_ptr<const FiniteSpace>;
struct KhalimskyCircle;
KhalimskyCircle khalimsky_circle(int n);
SpacePtr product(const SpacePtr& x, const SpacePtr& y);

/// A pair lo < hi of the order. Used both for raw input relations and for the
/// Hasse diagram (where hi covers lo).
struct CoverPair {
  Point lo;
  Point hi;
  friend bool operator==(const CoverPair&, const CoverPair&) = default;
};

/// A finite T0-space, stored as the finite poset whose open sets are the
/// down-sets. The order is reflexive in every query below: down(x) contains x.
/// Immutable once built.
class FiniteSpace {
public:
  /// Builds the space generated by `pairs` (each lo < hi). The relation is
  /// transitively closed; a cycle throws ErrorCode::cycle_detected.
  static SpacePtr from_relation(std::string name, std::vector<std::string> labels,
                                const std::vector<CoverPair>& pairs);

  /// Builds a space from already transitively closed reflexive down-sets.
  static SpacePtr from_down_sets(std::string name, std::vector<std::string> labels,
                                 std::vector<PointSet> down);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(Point p) const { return labels_.at(p); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool leq(Point x, Point y) const { return down_[y].contains(x); }
  bool less(Point x, Point y) const { return x != y && leq(x, y); }
  bool comparable(Point x, Point y) const { return leq(x, y) || leq(y, x); }

  const PointSet& down(Point p) const { return down_.at(p); }
  const PointSet& up(Point p) const { return up_.at(p); }
  const std::vector<Point>& lower_covers(Point p) const { return lower_covers_.at(p); }
  const std::vector<Point>& upper_covers(Point p) const { return upper_covers_.at(p); }
  const std::vector<CoverPair>& covers() const noexcept { return covers_; }

  /// Points sorted so that x < y implies x comes first.
  const std::vector<Point>& linear_extension() const noexcept { return linear_extension_; }

  PointSet none() const { return PointSet(size()); }
  PointSet all() const { return PointSet::full(size()); }

  /// Set when the space was built by `product`; point (x, y) has id x * |right| + y.
  const SpacePtr& left_factor() const noexcept { return left_; }
  const SpacePtr& right_factor() const noexcept { return right_; }
  bool is_product() const noexcept { return left_ != nullptr; }
  std::pair<Point, Point> coordinates(Point p) const;
  Point point_at(Point x, Point y) const;

  /// Set when the space was built by `khalimsky_circle`: the half size n.
  std::optional<int> circle_half_size() const noexcept { return circle_n_; }

private:
  friend SpacePtr product(const SpacePtr& x, const SpacePtr& y);
  friend KhalimskyCircle khalimsky_circle(int n);

  FiniteSpace() = default;
  void finish();

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<PointSet> down_;
  std::vector<PointSet> up_;
  std::vector<std::vector<Point>> lower_covers_;
  std::vector<std::vector<Point>> upper_covers_;
  std::vector<CoverPair> covers_;
  std::vector<Point> linear_extension_;
  SpacePtr left_;
  SpacePtr right_;
  std::optional<int> circle_n_;
};

/// Structural equality: same size and same order (labels ignored).
bool same_order(const FiniteSpace& a, const FiniteSpace& b);
inline bool same_space(const SpacePtr& a, const SpacePtr& b) {
  return a == b || (a && b && same_order(*a, *b));
}

/// An open subset: down-closed set of points.
class DownSet {
public:
  /// Throws ErrorCode::not_open if `members` is not down-closed.
  DownSet(SpacePtr space, PointSet members);

  const SpacePtr& space() const noexcept { return space_; }
  const PointSet& members() const noexcept { return members_; }
  bool contains(Point p) const { return members_.contains(p); }
  std::size_t size() const { return members_.count(); }
  bool empty() const { return members_.empty(); }

  friend bool operator==(const DownSet& a, const DownSet& b) {
    return a.members_ == b.members_ && same_space(a.space_, b.space_);
  }

private:
  SpacePtr space_;
  PointSet members_;
};

bool is_down_closed(const FiniteSpace& space, const PointSet& s);

/// A continuous (order-preserving) map, stored as a total value table.
class OrderMap {
public:
  /// Validates the table; throws ErrorCode::not_order_preserving with the
  /// offending pair in the message.
  OrderMap(SpacePtr source, SpacePtr target, std::vector<Point> table);

  /// Skips validation. Only for tables produced by code that already
  /// guarantees continuity (composition, projections, replays that were checked).
  static OrderMap trusted(SpacePtr source, SpacePtr target, std::vector<Point> table);

  const SpacePtr& source() const noexcept { return source_; }
  const SpacePtr& target() const noexcept { return target_; }
  const std::vector<Point>& table() const noexcept { return table_; }
  Point operator()(Point p) const { return table_[p]; }

  friend bool operator==(const OrderMap& a, const OrderMap& b) { return a.table_ == b.table_; }

private:
  OrderMap() = default;
  SpacePtr source_;
  SpacePtr target_;
  std::vector<Point> table_;
};

/// x <= x' with f(x) not <= f(x').
struct ContinuityViolation {
  Point lo;
  Point hi;
};

/// Either the validated map or the first violating pair (in cover order).
std::variant<OrderMap, ContinuityViolation> is_continuous(const SpacePtr& source,
                                                          const SpacePtr& target,
                                                          const std::vector<Point>& table);
std::optional<ContinuityViolation> find_violation(const FiniteSpace& source,
                                                  const FiniteSpace& target,
                                                  const std::vector<Point>& table);

OrderMap identity_map(const SpacePtr& space);
OrderMap constant_map(const SpacePtr& source, const SpacePtr& target, Point value);
/// g after f.
OrderMap compose(const OrderMap& g, const OrderMap& f);

// ---------------------------------------------------------------------------
// Constructors

SpacePtr build_space(std::vector<std::string> labels, const std::vector<CoverPair>& pairs,
                     std::string name = "space");

/// The Khalimsky circle on 2n points. Point 2i is a_i (minimal), point 2i+1 is
/// b_i (maximal); a_i, a_{i+1} < b_i. The point id is the residue of the
/// Khalimsky-line quotient Z/2n (even residues minimal), and id+1 is the
/// 1..2n numbering where a_i = 2i+1 and b_i = 2i+2.
struct KhalimskyCircle {
  int n = 0;
  SpacePtr space;

  static Point a(int n, int i) { return static_cast<Point>(2 * (((i % n) + n) % n)); }
  static Point b(int n, int i) { return static_cast<Point>(2 * (((i % n) + n) % n) + 1); }
  Point a(int i) const { return a(n, i); }
  Point b(int i) const { return b(n, i); }

  /// 1..2n residue of a point, and back (any integer accepted, reduced mod 2n).
  int residue(Point p) const { return static_cast<int>(p) + 1; }
  Point from_residue(long r) const {
    const long m = 2L * n;
    return static_cast<Point>((((r - 1) % m) + m) % m);
  }
};

KhalimskyCircle khalimsky_circle(int n);

/// The subspace [k, l] of the Khalimsky line: a < b iff |a-b| = 1 and a even.
/// Point id is z - k.
struct KhalimskyInterval {
  long k = 0;
  long l = 0;
  SpacePtr space;

  Point point(long z) const { return static_cast<Point>(z - k); }
  long value(Point p) const { return k + static_cast<long>(p); }
};

KhalimskyInterval khalimsky_interval(long k, long l);

/// Componentwise order on X x Y.
SpacePtr product(const SpacePtr& x, const SpacePtr& y);
std::pair<OrderMap, OrderMap> projections(const SpacePtr& product_space);

/// The subspace on `members`, ids renumbered ascending; `to_parent[i]` is the
/// original id of point i.
struct Subspace {
  SpacePtr space;
  std::vector<Point> to_parent;
};
Subspace subspace(const SpacePtr& space, const PointSet& members, std::string name = {});

/// Restriction of f to a subspace.
OrderMap restrict_to(const OrderMap& f, const Subspace& sub);

// ---------------------------------------------------------------------------
// Intervals and opens. All interval operations use the reflexive order.

DownSet min_open(const SpacePtr& space, Point x);
DownSet interval_down(const SpacePtr& space, Point b);
PointSet interval_up(const FiniteSpace& space, Point a);
PointSet interval(const FiniteSpace& space, Point a, Point b);
/// Smallest open set containing s.
DownSet open_hull(const SpacePtr& space, const PointSet& s);
/// Smallest closed set (up-set) containing s.
PointSet closed_hull(const FiniteSpace& space, const PointSet& s);

PointSet maximal_elements(const FiniteSpace& space);
PointSet minimal_elements(const FiniteSpace& space);

/// Connected components of the subspace on `members` (comparability graph).
std::vector<PointSet> components(const FiniteSpace& space, const PointSet& members);

}  // namespace ftc
