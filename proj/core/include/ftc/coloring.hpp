#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ftc/finite_space.hpp"
#include "ftc/invariants.hpp"

namespace ftc {

/// The n x n cells of the circle product; cell (i, j) is the down-set of (b_i, b_j).
struct SquareGrid {
  int n = 0;
  SpacePtr circle;
  SpacePtr space;

  Point cell_point(int i, int j) const;
  DownSet cell(int i, int j) const;
  int cells() const noexcept { return n * n; }
};

SquareGrid square_grid(int n);

/// Colour per cell, row-major: cell (i, j) has index i * n + j.
struct Coloring {
  int n = 0;
  int colors = 0;
  std::vector<int> cells;

  int at(int i, int j) const { return cells[static_cast<std::size_t>(i * n + j)]; }
  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend bool operator<(const Coloring& a, const Coloring& b) { return a.cells < b.cells; }
};

/// Rows of digits joined by '/'.
std::string to_string(const Coloring& c);
/// Inverse of to_string; the colour count is one more than the largest digit
/// unless given.
Coloring coloring_from_rows(const std::vector<std::string>& rows, int colors = 0);

/// Points covered by the cells of colour `colour`.
PointSet colour_class(const SquareGrid& grid, const Coloring& c, int colour);

/// No colour class contains a full horizontal or vertical line of points.
bool is_simple(const SquareGrid& grid, const Coloring& c);

enum class Symmetry { none, full };

/// Cell permutations induced by order automorphisms of the product (found by
/// search on the poset). Entry k maps cell index c to perm[k][c].
std::vector<std::vector<int>> grid_symmetries(const SquareGrid& grid);

/// Least coloring in the orbit under cell symmetries and colour permutations.
Coloring canonical_form(const Coloring& c, const std::vector<std::vector<int>>& cell_symmetries);

struct ColoringClass {
  Coloring representative;
  std::vector<Coloring> members;
};

/// Simple colorings with at most `colors` colours, grouped into orbits.
std::vector<ColoringClass> enumerate_simple_colorings(const SquareGrid& grid, int colors,
                                                      Symmetry symmetry);

/// Piece i is the union of the cells of colour i (every colour gets a piece).
Cover cover_from_coloring(const SquareGrid& grid, const Coloring& c);
/// Reads the colour of each cell from a cover whose pieces are unions of cells
/// with every cell in exactly one piece.
std::optional<Coloring> coloring_from_cover(const SquareGrid& grid, const Cover& cover);

/// The argument that no two open sets suffice for the product of a circle:
/// colorings with a monochromatic line fail on that line; every simple
/// coloring is checked piece by piece.
struct TwoPieceArgument {
  int n = 0;
  std::size_t colorings = 0;
  std::size_t with_line = 0;
  std::size_t simple = 0;
  std::vector<ColoringClass> classes;
  /// For every simple coloring, the failing piece and why (empty when none fails).
  std::vector<std::pair<Coloring, std::string>> refutations;
  std::size_t undecided = 0;

  bool impossible() const noexcept { return undecided == 0 && refutations.size() == simple; }
};

TwoPieceArgument two_piece_argument(int n, const SearchConfig& config = {});

}  // namespace ftc
