#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ftc/finite_space.hpp"

namespace ftc::testing {

/// Random poset on `n` points: each pair i < j is related with probability p.
inline SpacePtr random_poset(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::string> labels;
  std::vector<CoverPair> pairs;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  for (Point i = 0; i < n; ++i)
    for (Point j = i + 1; j < n; ++j)
      if (coin(rng)) pairs.push_back({i, j});
  // Shuffle ids so the linear order i < j is not the id order.
  std::vector<Point> perm(n);
  for (Point i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [lo, hi] : pairs) {
    lo = perm[lo];
    hi = perm[hi];
  }
  return build_space(labels, pairs, "random");
}

/// All down-closed subsets of a small space, by brute force over bitmasks.
inline std::vector<PointSet> all_opens(const FiniteSpace& x) {
  std::vector<PointSet> out;
  const std::size_t n = x.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    PointSet s(n);
    for (Point p = 0; p < n; ++p)
      if (mask >> p & 1) s.insert(p);
    if (is_down_closed(x, s)) out.push_back(s);
  }
  return out;
}

inline PointSet set_of(const FiniteSpace& x, std::initializer_list<Point> pts) {
  return PointSet::of(x.size(), std::vector<Point>(pts));
}

}  // namespace ftc::testing

#include "ftc/khalimsky.hpp"

namespace ftc::testing {

/// Uniform-ish random continuous circle map by a rejected random walk.
inline CircleMap random_circle_map(std::mt19937& rng, int m, int n) {
  const long twice_n = 2L * n;
  for (;;) {
    std::vector<long> t;
    t.push_back(std::uniform_int_distribution<long>(0, twice_n - 1)(rng));
    for (long z = 0; z + 1 < 2L * m; ++z) {
      const long v = t.back();
      std::vector<long> options{v};
      if (ht(v) == ht(z)) {
        options.push_back(mod(v + 1, twice_n));
        options.push_back(mod(v - 1, twice_n));
      }
      t.push_back(options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
    }
    CircleMap f{m, n, t};
    if (is_continuous(f)) return f;
  }
}

/// Every continuous map [k, l] -> [lo, hi] of the Khalimsky line.
inline std::vector<IntervalMap> all_interval_maps(long k, long l, long lo, long hi) {
  std::vector<IntervalMap> out;
  IntervalMap g{k, l, std::vector<long>(static_cast<std::size_t>(l - k + 1), 0)};
  auto rec = [&](auto&& self, long z) -> void {
    if (z > l) {
      out.push_back(g);
      return;
    }
    for (long v = lo; v <= hi; ++v) {
      if (z > k) {
        const long a = g(z - 1);
        // z - 1 even lies below z, so its value must be the lower one.
        const long lower = ht(z - 1) == 0 ? a : v;
        if (!(a == v || (std::labs(a - v) == 1 && ht(lower) == 0))) continue;
      }
      g.at(z) = v;
      self(self, z + 1);
    }
  };
  rec(rec, k);
  return out;
}

}  // namespace ftc::testing

#include "ftc/complex.hpp"

namespace ftc::testing {

/// Random complex of dimension <= max_dim on at most `max_vertices` vertices.
inline SimplicialComplex random_complex(std::mt19937& rng, int max_vertices, int max_dim) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  const int v = nv(rng);
  std::uniform_int_distribution<int> size(1, max_dim + 1);
  std::uniform_int_distribution<int> count(1, 2 * v);
  std::vector<Simplex> faces;
  for (int i = count(rng); i > 0; --i) {
    std::vector<Point> all(static_cast<std::size_t>(v));
    for (int j = 0; j < v; ++j) all[static_cast<std::size_t>(j)] = static_cast<Point>(j);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(std::min(v, size(rng))));
    std::sort(all.begin(), all.end());
    faces.push_back(all);
  }
  std::vector<Simplex> facets;
  for (const auto& f : faces) {
    bool inside = false;
    for (const auto& g : faces)
      inside = inside || (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end()));
    if (!inside) facets.push_back(f);
  }
  std::vector<Point> rename(static_cast<std::size_t>(v), static_cast<Point>(v));
  std::vector<std::string> labels;
  for (auto& f : facets)
    for (auto& p : f) {
      if (rename[p] == static_cast<Point>(v)) {
        rename[p] = static_cast<Point>(labels.size());
        labels.push_back("v" + std::to_string(labels.size()));
      }
      p = rename[p];
    }
  return make_complex(std::move(labels), std::move(facets));
}

}  // namespace ftc::testing
