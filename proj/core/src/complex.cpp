#include "ftc/complex.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace ftc {

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

SimplicialComplex make_complex(std::vector<std::string> vertices, std::vector<Simplex> facets) {
  const std::size_t n = vertices.size();
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.empty()) throw Error(ErrorCode::invalid_parameter, "empty facet");
    if (f.back() >= n) throw Error(ErrorCode::invalid_parameter, "facet vertex out of range");
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (Point v : facets[i]) used[v] = true;
    for (std::size_t j = 0; j < facets.size(); ++j)
      if (i != j && std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(), facets[i].end()))
        throw Error(ErrorCode::invalid_parameter, "a facet lies inside another facet");
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!used[v]) throw Error(ErrorCode::invalid_parameter, "vertex " + vertices[v] + " is in no facet");
  return {std::move(vertices), std::move(facets)};
}

std::vector<Simplex> simplices(const SimplicialComplex& k) {
  std::set<Simplex> all;
  for (const auto& f : k.facets) {
    if (f.size() >= 64) throw Error(ErrorCode::budget_exceeded, "facet too large to expand");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << f.size()); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask >> i & 1) s.push_back(f[i]);
      all.insert(std::move(s));
    }
  }
  std::vector<Simplex> out(all.begin(), all.end());
  std::stable_sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
  return out;
}

SimplicialComplex order_complex(const FiniteSpace& x) {
  std::vector<Simplex> chains;
  Simplex path;
  auto walk = [&](auto&& self, Point p) -> void {
    path.push_back(p);
    if (x.upper_covers(p).empty()) {
      chains.push_back(path);
    } else {
      for (Point q : x.upper_covers(p)) self(self, q);
    }
    path.pop_back();
  };
  for (Point p = 0; p < x.size(); ++p)
    if (x.lower_covers(p).empty()) walk(walk, p);
  return make_complex(x.labels(), std::move(chains));
}

SpacePtr face_poset(const SimplicialComplex& k) {
  const auto faces = simplices(k);
  std::map<Simplex, Point> index;
  std::vector<std::string> labels;
  for (const auto& s : faces) {
    index.emplace(s, static_cast<Point>(labels.size()));
    std::string l = "{";
    for (std::size_t i = 0; i < s.size(); ++i) l += (i ? "," : "") + k.vertices[s[i]];
    labels.push_back(l + "}");
  }
  std::vector<CoverPair> pairs;
  for (const auto& s : faces) {
    if (s.size() < 2) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex t;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) t.push_back(s[i]);
      pairs.push_back({index.at(t), index.at(s)});
    }
  }
  return build_space(std::move(labels), pairs, "face poset");
}

std::size_t barycentric_facet_count(const SimplicialComplex& k) {
  std::size_t total = 0;
  for (const auto& f : k.facets) {
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= f.size(); ++i) fact *= i;
    total += fact;
  }
  return total;
}

SimplicialComplex cycle_complex(int n) {
  if (n < 3) throw Error(ErrorCode::invalid_parameter, "a cycle needs at least 3 vertices");
  std::vector<std::string> v;
  std::vector<Simplex> f;
  for (int i = 0; i < n; ++i) {
    v.push_back("v" + std::to_string(i));
    f.push_back({static_cast<Point>(i), static_cast<Point>((i + 1) % n)});
  }
  return make_complex(std::move(v), std::move(f));
}

std::optional<std::size_t> cycle_length(const SimplicialComplex& k) {
  const std::size_t n = k.vertices.size();
  if (n < 3 || k.dimension() != 1 || k.facets.size() != n) return std::nullopt;
  std::vector<std::vector<Point>> adj(n);
  for (const auto& f : k.facets) {
    adj[f[0]].push_back(f[1]);
    adj[f[1]].push_back(f[0]);
  }
  for (const auto& a : adj)
    if (a.size() != 2) return std::nullopt;
  std::size_t steps = 0;
  Point prev = 0, cur = 0;
  do {
    const Point next = adj[cur][0] == prev && steps > 0 ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
    ++steps;
  } while (cur != 0 && steps <= n);
  return steps == n ? std::optional<std::size_t>(n) : std::nullopt;
}

void write_asc(std::ostream& out, const SimplicialComplex& k) {
  out << "asc " << k.vertices.size() << ' ' << k.facets.size() << '\n';
  for (const auto& f : k.facets) {
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
    out << '\n';
  }
}

SimplicialComplex read_asc(std::istream& in) {
  std::string line;
  std::string tag;
  std::size_t nv = 0, nf = 0;
  if (!std::getline(in, line)) throw Error(ErrorCode::parse_error, "missing asc header");
  std::istringstream head(line);
  if (!(head >> tag >> nv >> nf) || tag != "asc") throw Error(ErrorCode::parse_error, "bad asc header");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < nv; ++i) vertices.push_back(std::to_string(i));
  std::vector<Simplex> facets;
  while (facets.size() < nf && std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    Simplex s;
    long v;
    while (row >> v) {
      if (v < 0) throw Error(ErrorCode::parse_error, "negative vertex id");
      s.push_back(static_cast<Point>(v));
    }
    if (!row.eof()) throw Error(ErrorCode::parse_error, "bad facet line: " + line);
    facets.push_back(std::move(s));
  }
  if (facets.size() != nf) throw Error(ErrorCode::parse_error, "fewer facets than the header says");
  return make_complex(std::move(vertices), std::move(facets));
}

void export_complex(const SimplicialComplex& k, const std::string& path) {
  if (k.vertices.empty()) throw Error(ErrorCode::invalid_parameter, "refusing to export an empty complex");
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_error, "cannot write " + path);
  write_asc(out, k);
  if (!out) throw Error(ErrorCode::io_error, "write failed for " + path);
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string hasse_dot(const FiniteSpace& x) {
  std::ostringstream out;
  out << "digraph " << quoted(x.name()) << " {\n  rankdir=BT;\n";
  for (Point p = 0; p < x.size(); ++p) out << "  p" << p << " [label=" << quoted(x.label(p)) << "];\n";
  for (const auto& c : x.covers()) out << "  p" << c.lo << " -> p" << c.hi << ";\n";
  out << "}\n";
  return out.str();
}

void export_hasse_dot(const FiniteSpace& x, const std::string& path) {
  if (x.size() == 0) throw Error(ErrorCode::invalid_parameter, "refusing to export an empty space");
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_error, "cannot write " + path);
  out << hasse_dot(x);
  if (!out) throw Error(ErrorCode::io_error, "write failed for " + path);
}

}  // namespace ftc
