#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ftc/finite_space.hpp"
#include "ftc/homotopy.hpp"

namespace ftc {

/// Explicit open sets U, V of S^1_k x S^1_k (k >= 5) and the retraction chain
/// U -> C1 -> C2 -> C3 -> C. Coordinates are residues 1..2k where 2i+1 is a_i
/// and 2i+2 is b_i; residues wrap mod 2k.

enum class ChainVariant {
  /// Formulas as printed.
  literal,
  /// f_i's second branch clamps at max(3, l_i); A^<- also holds (3, 2k-2); the
  /// upper-corner ordinates m+1, m+2, m+3 read 2k-4, 2k-3, 2k-2.
  repaired,
};

std::string_view to_string(ChainVariant v);

/// k odd: k, k even: k + 1.
int witness_m(int k);

/// Product point with residues (x, y), any integers accepted.
Point residue_point(const FiniteSpace& product_space, long x, long y);
/// Residues of a product point.
std::pair<long, long> residues(const FiniteSpace& product_space, Point p);
/// "(x,y)" in residues.
std::string residue_label(const FiniteSpace& product_space, Point p);

SpacePtr witness_space(int k);

/// Throws ErrorCode::invalid_parameter for k < 5.
DownSet build_U(int k);
/// Smallest open set containing the complement of U.
DownSet build_V(int k);

/// One map of the chain on its domain. `table` is the identity off the domain.
struct Stage {
  std::string name;
  /// Stages with the same chain are compared with each other; the first one
  /// of a chain is compared with the identity.
  char chain = 'f';
  PointSet domain;
  std::vector<Point> table;
  PointSet image;
  std::optional<ContinuityViolation> violation;
};

struct WitnessBundle {
  int k = 0;
  int m = 0;
  ChainVariant variant = ChainVariant::repaired;
  SpacePtr space;
  DownSet U;
  DownSet V;
  std::vector<Stage> stages;
  PointSet C1, C2, C3, C;
  /// The displayed set C (generalised in the repaired variant).
  PointSet displayed_C;
  /// A0' u A1 u A2 u A3' u A4 and A0' u A1 u A2 u A3'' u A4.
  PointSet claimed_C1, claimed_C2;
};

WitnessBundle build_chain(int k, ChainVariant variant = ChainVariant::repaired);

/// Displayed C for the variant.
PointSet displayed_core(int k, ChainVariant variant = ChainVariant::repaired);

/// The stage as a map of its domain; throws ErrorCode::not_continuous naming
/// the stage and the offending pair.
OrderMap stage_map(const WitnessBundle& bundle, const Stage& stage);

struct StageReport {
  std::string name;
  std::size_t domain_size = 0;
  std::size_t image_size = 0;
  bool continuous = true;
  std::string violation;
  bool into_domain = true;
  Order against_previous = Order::equal;
  bool fixes_image = true;

  bool ok() const noexcept {
    return continuous && into_domain && fixes_image && against_previous != Order::incomparable;
  }
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct OpenSetReport {
  std::size_t size = 0;
  std::size_t core_size = 0;
  std::optional<int> circle_n;
  std::optional<long> degree1, degree2;
  Verdict verdict = Verdict::unknown;
  std::string reason;
};

struct WitnessReport {
  int k = 0;
  int m = 0;
  ChainVariant variant = ChainVariant::repaired;
  std::vector<StageReport> stages;
  /// Six checks: continuity, fences, final image, core of U, degrees on C, V.
  std::vector<Check> checks;
  OpenSetReport U, V;
  std::size_t c_size = 0;
  std::optional<int> n_C;
  long claimed_n = 0;
  std::vector<std::string> a5_inferred;
  std::vector<std::string> divergences;

  bool passed() const noexcept;
};

WitnessReport verify_bundle(int k, ChainVariant variant = ChainVariant::repaired,
                            const HomotopyOptions& options = {});

}  // namespace ftc
