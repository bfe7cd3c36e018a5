#include "ftc/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ftc {

namespace {

/// Next meaningful line, or false at end of input.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    const auto end = line.find_last_not_of(" \t\r");
    line = line.substr(start, end - start + 1);
    return true;
  }
  return false;
}

std::string expect_line(std::istream& in, const std::string& what) {
  std::string line;
  if (!next_line(in, line)) throw Error(ErrorCode::parse_error, "unexpected end of input, expected " + what);
  return line;
}

long parse_long(const std::string& token) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size()) throw Error(ErrorCode::parse_error, "not an integer: " + token);
  return v;
}

Point parse_point(const std::string& token, std::size_t width) {
  const long v = parse_long(token);
  if (v < 0 || static_cast<std::size_t>(v) >= width)
    throw Error(ErrorCode::parse_error, "point id out of range: " + token);
  return static_cast<Point>(v);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream s(line);
  std::vector<std::string> out;
  std::string t;
  while (s >> t) out.push_back(t);
  return out;
}

}  // namespace

void write_space(std::ostream& out, const FiniteSpace& x) {
  std::string name = x.name();
  for (char& c : name)
    if (c == ' ' || c == '\t') c = '_';
  out << "space " << (name.empty() ? "space" : name) << ' ' << x.size() << '\n';
  for (Point p = 0; p < x.size(); ++p) out << "point " << p << ' ' << x.label(p) << '\n';
  for (const auto& c : x.covers()) out << "cover " << c.lo << ' ' << c.hi << '\n';
}

SpacePtr read_space(std::istream& in) {
  auto head = tokens(expect_line(in, "space header"));
  if (head.size() != 3 || head[0] != "space") throw Error(ErrorCode::parse_error, "expected `space <name> <N>`");
  const long n = parse_long(head[2]);
  if (n < 0) throw Error(ErrorCode::parse_error, "negative point count");
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<CoverPair> pairs;
  std::string line;
  while (next_line(in, line)) {
    auto t = tokens(line);
    if (t[0] == "point") {
      if (t.size() < 3) throw Error(ErrorCode::parse_error, "expected `point <id> <label>`");
      const Point p = parse_point(t[1], labels.size());
      if (seen[p]) throw Error(ErrorCode::parse_error, "point " + t[1] + " declared twice");
      seen[p] = true;
      labels[p] = line.substr(line.find(t[2], line.find(t[1]) + t[1].size()));
    } else if (t[0] == "cover") {
      if (t.size() != 3) throw Error(ErrorCode::parse_error, "expected `cover <lo> <hi>`");
      pairs.push_back({parse_point(t[1], labels.size()), parse_point(t[2], labels.size())});
    } else {
      throw Error(ErrorCode::parse_error, "unknown line: " + line);
    }
  }
  for (std::size_t p = 0; p < seen.size(); ++p)
    if (!seen[p]) throw Error(ErrorCode::parse_error, "point " + std::to_string(p) + " not declared");
  return build_space(std::move(labels), pairs, head[1]);
}

std::string format_ids(const PointSet& s) {
  std::string out;
  s.for_each([&](Point p) { out += (out.empty() ? "" : " ") + std::to_string(p); });
  return out;
}

PointSet parse_ids(const std::string& text, std::size_t width) {
  PointSet s(width);
  Point last = 0;
  bool first = true;
  for (const auto& t : tokens(text)) {
    const Point p = parse_point(t, width);
    if (!first && p <= last) throw Error(ErrorCode::parse_error, "id lists must be sorted and distinct");
    s.insert(p);
    last = p;
    first = false;
  }
  return s;
}

void write_cover(std::ostream& out, const Cover& cover) {
  out << "cover " << cover.space->name() << ' ' << cover.pieces.size() << '\n';
  for (const auto& p : cover.pieces) out << format_ids(p.members()) << '\n';
}

Cover read_cover(std::istream& in, const SpacePtr& space) {
  auto head = tokens(expect_line(in, "cover header"));
  if (head.size() != 3 || head[0] != "cover") throw Error(ErrorCode::parse_error, "expected `cover <space> <c>`");
  const long c = parse_long(head[2]);
  if (c < 1) throw Error(ErrorCode::parse_error, "a cover needs at least one piece");
  Cover cover{space, {}, {}};
  for (long i = 0; i < c; ++i) {
    std::string line;
    // Empty pieces are written as empty lines, which next_line skips; read raw.
    if (!std::getline(in, line)) throw Error(ErrorCode::parse_error, "fewer pieces than the header says");
    if (!line.empty() && line[0] == '#') {
      --i;
      continue;
    }
    cover.pieces.emplace_back(space, parse_ids(line, space->size()));
  }
  return cover;
}

void write_coloring(std::ostream& out, const Coloring& c) {
  out << "coloring " << c.n << ' ' << c.colors << '\n';
  for (int i = 0; i < c.n; ++i) {
    for (int j = 0; j < c.n; ++j) out << c.at(i, j);
    out << '\n';
  }
}

Coloring read_coloring(std::istream& in) {
  auto head = tokens(expect_line(in, "coloring header"));
  if (head.size() != 3 || head[0] != "coloring")
    throw Error(ErrorCode::parse_error, "expected `coloring <n> <c>`");
  const long n = parse_long(head[1]);
  const long c = parse_long(head[2]);
  if (n < 1 || c < 1 || c > 10) throw Error(ErrorCode::parse_error, "bad coloring size");
  std::vector<std::string> rows;
  for (long i = 0; i < n; ++i) rows.push_back(expect_line(in, "coloring row"));
  Coloring out = coloring_from_rows(rows, static_cast<int>(c));
  if (out.n != n) throw Error(ErrorCode::parse_error, "coloring rows must have n digits");
  return out;
}

std::string format_circle_map(const CircleMap& f) {
  std::string out = "circlemap " + std::to_string(f.m) + " " + std::to_string(f.n);
  for (long v : f.table) out += " " + std::to_string(v);
  return out;
}

CircleMap parse_circle_map(const std::string& text) {
  auto t = tokens(text);
  if (t.size() < 3 || t[0] != "circlemap") throw Error(ErrorCode::parse_error, "expected `circlemap m n v0 ...`");
  const long m = parse_long(t[1]);
  const long n = parse_long(t[2]);
  if (m < 2 || n < 2) throw Error(ErrorCode::parse_error, "circle sizes must be at least 2");
  if (t.size() != static_cast<std::size_t>(3 + 2 * m))
    throw Error(ErrorCode::parse_error, "a circle map needs 2m values");
  std::vector<long> values;
  for (std::size_t i = 3; i < t.size(); ++i) values.push_back(parse_long(t[i]));
  return make_circle_map(static_cast<int>(m), static_cast<int>(n), std::move(values));
}

void write_fence(std::ostream& out, const Fence& fence) {
  const auto& maps = fence.maps();
  out << "fence " << (maps.empty() ? 0 : maps.front().table().size()) << ' ' << maps.size() << '\n';
  for (const auto& f : maps) {
    for (std::size_t i = 0; i < f.table().size(); ++i) out << (i ? " " : "") << f.table()[i];
    out << '\n';
  }
}

Fence read_fence(std::istream& in, const SpacePtr& source, const SpacePtr& target) {
  auto head = tokens(expect_line(in, "fence header"));
  if (head.size() != 3 || head[0] != "fence") throw Error(ErrorCode::parse_error, "expected `fence <N> <L>`");
  const long n = parse_long(head[1]);
  const long l = parse_long(head[2]);
  if (n != static_cast<long>(source->size())) throw Error(ErrorCode::parse_error, "fence tables have the wrong size");
  if (l < 1) throw Error(ErrorCode::parse_error, "a fence has at least one map");
  std::vector<OrderMap> maps;
  for (long i = 0; i < l; ++i) {
    std::vector<Point> table;
    for (const auto& t : tokens(expect_line(in, "fence table"))) table.push_back(parse_point(t, target->size()));
    if (table.size() != source->size()) throw Error(ErrorCode::parse_error, "fence tables have the wrong size");
    maps.emplace_back(source, target, std::move(table));
  }
  Fence fence(maps.front());
  for (std::size_t i = 1; i < maps.size(); ++i) fence.push(maps[i]);
  return fence;
}

namespace {

SpacePtr load_term(const std::string& term) {
  auto parts = std::vector<std::string>{};
  std::stringstream s(term);
  std::string piece;
  while (std::getline(s, piece, ':')) parts.push_back(piece);
  if (!parts.empty() && parts[0] == "circle" && parts.size() == 2) {
    const long n = parse_long(parts[1]);
    if (n < 2) throw Error(ErrorCode::parse_error, "circle:N needs N >= 2");
    return khalimsky_circle(static_cast<int>(n)).space;
  }
  if (!parts.empty() && parts[0] == "interval" && parts.size() == 3) {
    const long k = parse_long(parts[1]);
    const long l = parse_long(parts[2]);
    if (l < k) throw Error(ErrorCode::parse_error, "interval:K:L needs K <= L");
    return khalimsky_interval(k, l).space;
  }
  if (term == "point") return build_space({"*"}, {}, "point");
  std::istringstream in(read_file(term));
  return read_space(in);
}

}  // namespace

SpacePtr load_space(const std::string& spec) {
  std::stringstream s(spec);
  std::string term;
  SpacePtr out;
  while (std::getline(s, term, '*')) {
    SpacePtr next = load_term(term);
    out = out ? product(out, next) : next;
  }
  if (!out) throw Error(ErrorCode::parse_error, "empty space spec");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_error, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::io_error, "write failed for " + path);
}

}  // namespace ftc
