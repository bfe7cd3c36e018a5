#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ftc/coloring.hpp"
#include "ftc/finite_space.hpp"
#include "ftc/homotopy.hpp"
#include "ftc/invariants.hpp"
#include "ftc/khalimsky.hpp"

namespace ftc {

// Line-oriented text formats. Blank lines and lines starting with '#' are
// skipped on input. Malformed input throws ErrorCode::parse_error.

/// `space <name> <N>`, `point <id> <label>` for every point, then
/// `cover <lo> <hi>` for every Hasse edge.
void write_space(std::ostream& out, const FiniteSpace& x);
SpacePtr read_space(std::istream& in);

/// Sorted ids separated by single spaces.
std::string format_ids(const PointSet& s);
PointSet parse_ids(const std::string& text, std::size_t width);

/// `cover <space> <c>`, then one id list per piece.
void write_cover(std::ostream& out, const Cover& cover);
/// Pieces are read against `space`; each must be open.
Cover read_cover(std::istream& in, const SpacePtr& space);

/// `coloring <n> <c>`, then n rows of digits.
void write_coloring(std::ostream& out, const Coloring& c);
Coloring read_coloring(std::istream& in);

/// `circlemap m n v0 ... v_{2m-1}`.
std::string format_circle_map(const CircleMap& f);
CircleMap parse_circle_map(const std::string& text);

/// `fence <N> <L>`, then L value tables of N entries each.
void write_fence(std::ostream& out, const Fence& fence);
Fence read_fence(std::istream& in, const SpacePtr& source, const SpacePtr& target);

/// Space from a file path or a spec: `circle:N`, `interval:K:L`, `point`,
/// joined by '*' for products.
SpacePtr load_space(const std::string& spec);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace ftc
