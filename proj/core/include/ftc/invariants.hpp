#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "ftc/finite_space.hpp"
#include "ftc/homotopy.hpp"

namespace ftc {

/// Open cover of a space. `certificates` is either empty or parallel to `pieces`.
struct Cover {
  SpacePtr space;
  std::vector<DownSet> pieces;
  std::vector<HomotopyVerdict> certificates;

  /// Pieces are open and their union is the space.
  bool is_cover() const;
};

/// Replaces every piece V by the union of the down-sets of the maximal points inside V.
Cover principalize(const Cover& cover);

/// A full line {(x, a) : x in X} (horizontal) or {(a, y) : y in X} (vertical).
struct Line {
  bool horizontal = true;
  Point a = 0;
};

/// First line of X x X inside `members`, horizontal lines first, by a.
std::optional<Line> find_line(const FiniteSpace& product_space, const PointSet& members);

/// U open in X x X: decides whether the two projections agree up to homotopy on U.
HomotopyVerdict is_section_categorical(const DownSet& open, const HomotopyOptions& options = {});

/// U open in X: is the inclusion nullhomotopic?
HomotopyVerdict is_categorical(const DownSet& open, const HomotopyOptions& options = {});

enum class Invariant { cat, tc };

std::string_view to_string(Invariant k);

struct SearchConfig {
  /// Budget passed to every homotopy decision.
  std::size_t budget = 1'000'000;
  /// Cap on search tree nodes per level.
  std::size_t node_budget = 200'000'000;
  unsigned threads = 1;
  /// Lifts the cap on the number of maximal elements.
  bool force = false;
  std::size_t max_maximal = 30;
  std::optional<std::chrono::milliseconds> time_limit;
};

enum class LevelOutcome { found, exhausted, inconclusive };

std::string_view to_string(LevelOutcome o);

/// Result of the search for a certified cover with a fixed number of pieces.
struct Level {
  int pieces = 0;
  LevelOutcome outcome = LevelOutcome::inconclusive;
  std::size_t nodes = 0;
  std::size_t pieces_checked = 0;
  std::size_t pieces_unknown = 0;
  std::string note;
  std::optional<Cover> cover;
};

struct InvariantResult {
  Invariant kind = Invariant::tc;
  long lower = 0;
  std::optional<long> upper;
  std::string lower_reason;
  std::vector<Level> levels;
  std::optional<Cover> witness;

  bool exact() const noexcept { return upper && *upper == lower; }
};

/// Known lower bound from the realization: 1 for spaces recognized as
/// Khalimsky circles (tc of the circle), 0 otherwise.
long known_tc_lower_bound(const FiniteSpace& x);

/// The space whose open sets are tested: X for cat, X x X for tc.
SpacePtr search_space(const SpacePtr& x, Invariant kind);

/// Searches principal covers of `search_space(x, kind)` with exactly `pieces`
/// colours of the maximal elements. Throws ErrorCode::budget_exceeded when the
/// number of maximal elements exceeds the cap without `force`.
Level find_cover(const SpacePtr& x, Invariant kind, int pieces, const SearchConfig& config = {});

/// Exact value by increasing the number of pieces up to `limit + 1`.
InvariantResult cat_exact(const SpacePtr& x, long limit, const SearchConfig& config = {});
InvariantResult tc_exact(const SpacePtr& x, long limit, const SearchConfig& config = {});

/// Upper bound from a given cover; every piece is certified.
InvariantResult cat_witness(const Cover& cover, const SearchConfig& config = {});
InvariantResult tc_witness(const Cover& cover, const SearchConfig& config = {});

/// Certifies every piece of a cover of X (cat) or X x X (tc) in place.
bool certify(Cover& cover, Invariant kind, const SearchConfig& config = {});

}  // namespace ftc
