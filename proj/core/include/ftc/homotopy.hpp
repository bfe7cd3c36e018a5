#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ftc/finite_space.hpp"

namespace ftc {

/// Pointwise relation between two maps with the same source and target.
enum class Order { equal, below, above, incomparable };

/// f versus g: `below` means f(x) <= g(x) for every x.
/// Throws ErrorCode::mismatched_spaces.
Order comparable(const OrderMap& f, const OrderMap& g);

std::string_view to_string(Order o);

struct FenceStep {
  const OrderMap* from;
  const OrderMap* to;
  Order direction;
};

/// A zigzag f = h_0, h_1, ..., h_s = g of continuous maps, consecutive ones
/// pointwise comparable. A single map is the fence of length 0.
class Fence {
public:
  Fence() = default;
  explicit Fence(OrderMap start) { maps_.push_back(std::move(start)); }

  /// Appends a map, skipping it when it equals the current end.
  void push(OrderMap next);
  /// Appends another fence whose first map equals this fence's last map.
  void append(const Fence& other);
  Fence reversed() const;

  bool empty() const noexcept { return maps_.empty(); }
  std::size_t length() const noexcept { return maps_.empty() ? 0 : maps_.size() - 1; }
  const std::vector<OrderMap>& maps() const noexcept { return maps_; }
  const OrderMap& front() const { return maps_.front(); }
  const OrderMap& back() const { return maps_.back(); }
  std::vector<FenceStep> steps() const;

private:
  std::vector<OrderMap> maps_;
};

struct ReplayReport {
  bool ok = true;
  std::size_t step = 0;
  std::string reason;
};

/// Checks that every map is continuous, consecutive maps are comparable and the
/// endpoints are f and g.
ReplayReport replay(const Fence& fence, const OrderMap& f, const OrderMap& g);

// ---------------------------------------------------------------------------
// Beat points and cores

enum class BeatKind { up, down };

struct BeatPoint {
  Point point;
  BeatKind kind;
  /// Minimum of the strict up-set (up beat) or maximum of the strict down-set.
  Point witness;
};

std::vector<BeatPoint> beat_points(const FiniteSpace& space);
/// Beat points of the subspace on `alive`.
std::vector<BeatPoint> beat_points(const FiniteSpace& space, const PointSet& alive);

struct CollapseSequence {
  SpacePtr start;
  std::vector<BeatPoint> removals;
  PointSet remaining;
};

struct CoreResult {
  SpacePtr core;
  /// Core point i is `core_to_parent[i]` in the start space.
  std::vector<Point> core_to_parent;
  OrderMap retraction;
  OrderMap inclusion;
  CollapseSequence sequence;
  /// Fence from the identity of the start space to inclusion after retraction.
  Fence fence;
};

/// Removes beat points until none are left. The next point removed is the
/// first beat point in `priority` (point ids ascending when empty).
CoreResult core(const SpacePtr& space, const std::vector<Point>& priority = {});

bool is_contractible(const SpacePtr& space);

// ---------------------------------------------------------------------------
// Homotopy decisions

enum class Strategy { fence_bfs, core_degree, exhaustive_components, automatic };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

struct HomotopyOptions {
  Strategy strategy = Strategy::automatic;
  /// Node cap for fence search and map enumeration.
  std::size_t budget = 1'000'000;
  /// When false only the verdict is computed.
  bool certificate = true;
};

enum class Verdict { homotopic, not_homotopic, unknown };

std::string_view to_string(Verdict v);

struct HomotopyVerdict {
  Verdict result = Verdict::unknown;
  std::optional<Fence> certificate;
  std::string reason;
  /// Closed walk in the source along which the two maps wind differently.
  std::vector<Point> obstruction;

  bool homotopic() const noexcept { return result == Verdict::homotopic; }
  bool refuted() const noexcept { return result == Verdict::not_homotopic; }
};

/// Decides f ~ g. Budget exhaustion yields Verdict::unknown.
HomotopyVerdict homotopic(const OrderMap& f, const OrderMap& g, const HomotopyOptions& options = {});

/// Is the inclusion of the open set U into its space homotopic to a constant?
HomotopyVerdict nullhomotopic_in(const DownSet& open, const HomotopyOptions& options = {});

/// Breadth-first search over single-point moves from f towards g.
HomotopyVerdict fence_bfs(const OrderMap& f, const OrderMap& g, std::size_t budget);

// ---------------------------------------------------------------------------
// Isomorphisms and hom-sets

/// Calls `visit` for each order isomorphism X -> Y until it returns false.
void for_each_isomorphism(const SpacePtr& x, const SpacePtr& y,
                          const std::function<bool(const OrderMap&)>& visit);

/// Throws ErrorCode::not_minimal when either space has a beat point.
std::optional<OrderMap> minimal_iso_check(const SpacePtr& x, const SpacePtr& y);

/// Plain isomorphism test without the minimality requirement.
std::optional<OrderMap> find_isomorphism(const SpacePtr& x, const SpacePtr& y);

/// All continuous maps X -> Y in lexicographic order of their tables along a
/// linear extension. Throws ErrorCode::budget_exceeded past `budget` maps.
std::vector<OrderMap> enumerate_maps(const SpacePtr& x, const SpacePtr& y, std::size_t budget);

struct HomComponents {
  std::vector<OrderMap> maps;
  /// Component index of each map, numbered by first occurrence.
  std::vector<std::size_t> component;
  /// First map of each component.
  std::vector<std::size_t> representatives;

  std::size_t count() const noexcept { return representatives.size(); }
};

HomComponents hom_components(const SpacePtr& x, const SpacePtr& y, std::size_t budget);

}  // namespace ftc
