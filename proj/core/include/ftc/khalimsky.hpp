#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ftc/finite_space.hpp"
#include "ftc/homotopy.hpp"

namespace ftc {

/// Parity of an integer; on the Khalimsky line ht(z) = 0 exactly at the
/// minimal (open) points.
inline int ht(long z) { return static_cast<int>(((z % 2) + 2) % 2); }

/// Reduction of z modulo `modulus` into [0, modulus).
inline long mod(long z, long modulus) { return ((z % modulus) + modulus) % modulus; }

/// A continuous map Z/2m -> Z/2n. Residues are point ids of khalimsky_circle,
/// so even residues are minimal in both source and target.
struct CircleMap {
  int m = 0;
  int n = 0;
  std::vector<long> table;

  long operator()(long z) const { return table[static_cast<std::size_t>(mod(z, 2L * m))]; }
  friend bool operator==(const CircleMap&, const CircleMap&) = default;
};

/// Validates sizes and continuity; throws ErrorCode::not_order_preserving.
CircleMap make_circle_map(int m, int n, std::vector<long> table);
bool is_continuous(const CircleMap& f);

OrderMap to_order_map(const CircleMap& f);
/// Both spaces must carry the circle tag of khalimsky_circle.
CircleMap to_circle_map(const OrderMap& f);

/// A map from the interval [k, l] of the Khalimsky line to the line.
struct IntervalMap {
  long k = 0;
  long l = 0;
  std::vector<long> values;

  long operator()(long z) const { return values[static_cast<std::size_t>(z - k)]; }
  long& at(long z) { return values[static_cast<std::size_t>(z - k)]; }
  friend bool operator==(const IntervalMap&, const IntervalMap&) = default;
};

bool is_continuous(const IntervalMap& g);
/// Pointwise comparison in the line order: -1 below, 1 above, 0 equal, 2 incomparable.
int compare(const IntervalMap& a, const IntervalMap& b);

/// Lift of f restricted along p : [k, l] -> Z/2m, with start value a.
struct LiftRecord {
  long k = 0;
  long l = 0;
  int m = 0;
  int n = 0;
  long start = 0;
  std::vector<long> values;
  /// Set when l - k is a multiple of 2m.
  std::optional<long> degree;

  long operator()(long z) const { return values[static_cast<std::size_t>(z - k)]; }
  IntervalMap as_interval_map() const { return {k, l, values}; }
};

/// Throws ErrorCode::base_mismatch unless a = f(k) mod 2n, and
/// ErrorCode::not_applicable for n < 2.
LiftRecord lift(const CircleMap& f, long k, long l, long a);

/// (lift(2m) - lift(0)) / 2n over one loop.
long degree(const CircleMap& f);

/// The staircase-then-plateau map h_g. Needs g(k) <= g(l) and ht(k) = ht(g(k));
/// throws ErrorCode::precondition_violated naming the failed clause.
IntervalMap monotone_normalize(const IntervalMap& g);

/// Fences of interval maps. Each returned sequence starts at g, every entry is
/// continuous and consecutive entries are comparable (checked).
using IntervalFence = std::vector<IntervalMap>;

/// g(k) = g(l): ends at the constant map with that value.
IntervalFence cons_fence(const IntervalMap& g);
/// Ends at a monotone map with the same endpoint values.
IntervalFence mono_fence(const IntervalMap& g);
/// g monotone increasing with ht(k) = ht(g(k)): ends at h_g.
IntervalFence stan_fence(const IntervalMap& g);

bool is_monotone(const IntervalMap& g);

/// f ~ g iff f = g, or deg f = deg g = d with |d| < m/n.
/// Throws ErrorCode::mismatched_sizes.
bool classify_homotopic(const CircleMap& f, const CircleMap& g);

/// Explicit fence f ~ g of circle maps when they are homotopic.
std::optional<std::vector<CircleMap>> circle_fence(const CircleMap& f, const CircleMap& g);

/// Point ids of a space read as a Khalimsky circle: `point[r]` has residue r,
/// `residue[p]` is the inverse. Even residues are minimal.
struct CircleChart {
  int n = 0;
  std::vector<Point> point;
  std::vector<long> residue;
};

/// Succeeds iff X is order-isomorphic to some circle on 2n >= 4 points.
/// Among the 2n numberings the lexicographically least `point` vector is returned.
std::optional<CircleChart> recognize_circle(const FiniteSpace& x);

/// Chart of a circle, using the tag when present.
std::optional<CircleChart> circle_chart(const FiniteSpace& x);

/// The quotient [k, l] -> Z/2m, z -> z mod 2m.
OrderMap quotient_map(long k, long l, int m);
/// eps_a : [k, l] -> Z.
IntervalMap constant_lift(long k, long l, long a);

/// Circle map obtained from an interval map on [k, k + 2m] whose endpoint
/// values agree modulo 2n.
CircleMap descend(const IntervalMap& g, int m, int n);

/// y -> -y in the target.
CircleMap reflect_target(const CircleMap& f);

}  // namespace ftc
