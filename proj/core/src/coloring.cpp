#include "ftc/coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ftc {

Point SquareGrid::cell_point(int i, int j) const {
  return space->point_at(KhalimskyCircle::b(n, i), KhalimskyCircle::b(n, j));
}

DownSet SquareGrid::cell(int i, int j) const { return min_open(space, cell_point(i, j)); }

SquareGrid square_grid(int n) {
  if (n < 2) throw Error(ErrorCode::invalid_parameter, "grid needs n >= 2");
  SquareGrid g;
  g.n = n;
  g.circle = khalimsky_circle(n).space;
  g.space = product(g.circle, g.circle);
  return g;
}

std::string to_string(const Coloring& c) {
  std::string out;
  for (int i = 0; i < c.n; ++i) {
    if (i > 0) out += '/';
    for (int j = 0; j < c.n; ++j) out += static_cast<char>('0' + c.at(i, j));
  }
  return out;
}

Coloring coloring_from_rows(const std::vector<std::string>& rows, int colors) {
  Coloring c;
  c.n = static_cast<int>(rows.size());
  int top = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c.n)
      throw Error(ErrorCode::parse_error, "coloring rows must have n digits");
    for (char ch : row) {
      if (ch < '0' || ch > '9') throw Error(ErrorCode::parse_error, "coloring entries are digits");
      c.cells.push_back(ch - '0');
      top = std::max(top, ch - '0');
    }
  }
  c.colors = colors > 0 ? colors : top + 1;
  if (top >= c.colors) throw Error(ErrorCode::parse_error, "colour outside the declared range");
  return c;
}

PointSet colour_class(const SquareGrid& grid, const Coloring& c, int colour) {
  PointSet out = grid.space->none();
  for (int i = 0; i < grid.n; ++i)
    for (int j = 0; j < grid.n; ++j)
      if (c.at(i, j) == colour) out |= grid.space->down(grid.cell_point(i, j));
  return out;
}

bool is_simple(const SquareGrid& grid, const Coloring& c) {
  for (int colour = 0; colour < c.colors; ++colour)
    if (find_line(*grid.space, colour_class(grid, c, colour))) return false;
  return true;
}

std::vector<std::vector<int>> grid_symmetries(const SquareGrid& grid) {
  std::set<std::vector<int>> perms;
  for_each_isomorphism(grid.space, grid.space, [&](const OrderMap& phi) {
    std::vector<int> perm(static_cast<std::size_t>(grid.cells()));
    for (int i = 0; i < grid.n; ++i)
      for (int j = 0; j < grid.n; ++j) {
        auto [x, y] = grid.space->coordinates(phi(grid.cell_point(i, j)));
        perm[static_cast<std::size_t>(i * grid.n + j)] = static_cast<int>((x / 2) * grid.n + y / 2);
      }
    perms.insert(std::move(perm));
    return true;
  });
  return {perms.begin(), perms.end()};
}

Coloring canonical_form(const Coloring& c, const std::vector<std::vector<int>>& cell_symmetries) {
  std::vector<int> sigma(static_cast<std::size_t>(c.colors));
  std::iota(sigma.begin(), sigma.end(), 0);
  Coloring best = c;
  Coloring image = c;
  do {
    for (const auto& perm : cell_symmetries) {
      for (std::size_t k = 0; k < c.cells.size(); ++k)
        image.cells[static_cast<std::size_t>(perm[k])] = sigma[static_cast<std::size_t>(c.cells[k])];
      if (image.cells < best.cells) best = image;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

namespace {

template <typename Fn>
void for_each_coloring(int n, int colors, Fn&& fn) {
  const int cells = n * n;
  double total = 1;
  for (int k = 0; k < cells; ++k) total *= colors;
  if (total > double(1 << 26))
    throw Error(ErrorCode::budget_exceeded, "too many colorings to enumerate");
  Coloring c{n, colors, std::vector<int>(static_cast<std::size_t>(cells), 0)};
  for (;;) {
    fn(c);
    int k = cells - 1;
    while (k >= 0 && c.cells[static_cast<std::size_t>(k)] == colors - 1) c.cells[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) return;
    ++c.cells[static_cast<std::size_t>(k)];
  }
}

}  // namespace

std::vector<ColoringClass> enumerate_simple_colorings(const SquareGrid& grid, int colors,
                                                      Symmetry symmetry) {
  if (colors < 1) throw Error(ErrorCode::invalid_parameter, "need at least one colour");
  std::vector<std::vector<int>> syms;
  if (symmetry == Symmetry::full) syms = grid_symmetries(grid);
  std::map<std::vector<int>, ColoringClass> classes;
  for_each_coloring(grid.n, colors, [&](const Coloring& c) {
    if (!is_simple(grid, c)) return;
    Coloring key = symmetry == Symmetry::full ? canonical_form(c, syms) : c;
    auto& cls = classes[key.cells];
    cls.representative = key;
    cls.members.push_back(c);
  });
  std::vector<ColoringClass> out;
  for (auto& [k, v] : classes) out.push_back(std::move(v));
  return out;
}

Cover cover_from_coloring(const SquareGrid& grid, const Coloring& c) {
  Cover cover{grid.space, {}, {}};
  for (int colour = 0; colour < c.colors; ++colour)
    cover.pieces.emplace_back(grid.space, colour_class(grid, c, colour));
  return cover;
}

std::optional<Coloring> coloring_from_cover(const SquareGrid& grid, const Cover& cover) {
  Coloring c{grid.n, static_cast<int>(cover.pieces.size()),
             std::vector<int>(static_cast<std::size_t>(grid.cells()), -1)};
  for (int i = 0; i < grid.n; ++i)
    for (int j = 0; j < grid.n; ++j)
      for (std::size_t k = 0; k < cover.pieces.size(); ++k)
        if (cover.pieces[k].contains(grid.cell_point(i, j))) {
          if (c.at(i, j) != -1) return std::nullopt;
          c.cells[static_cast<std::size_t>(i * grid.n + j)] = static_cast<int>(k);
        }
  for (int v : c.cells)
    if (v < 0) return std::nullopt;
  for (std::size_t k = 0; k < cover.pieces.size(); ++k)
    if (!(colour_class(grid, c, static_cast<int>(k)) == cover.pieces[k].members())) return std::nullopt;
  return c;
}

TwoPieceArgument two_piece_argument(int n, const SearchConfig& config) {
  TwoPieceArgument arg;
  arg.n = n;
  const SquareGrid grid = square_grid(n);
  HomotopyOptions opt;
  opt.budget = config.budget;
  opt.certificate = false;
  for_each_coloring(n, 2, [&](const Coloring& c) {
    ++arg.colorings;
    if (!is_simple(grid, c)) {
      ++arg.with_line;
      return;
    }
    ++arg.simple;
    bool unknown = false;
    for (int colour = 0; colour < 2; ++colour) {
      auto v = is_section_categorical(DownSet(grid.space, colour_class(grid, c, colour)), opt);
      if (v.refuted()) {
        arg.refutations.emplace_back(c, "piece " + std::to_string(colour) + ": " + v.reason);
        return;
      }
      unknown = unknown || v.result == Verdict::unknown;
    }
    if (unknown) ++arg.undecided;
  });
  arg.classes = enumerate_simple_colorings(grid, 2, Symmetry::full);
  return arg;
}

}  // namespace ftc
