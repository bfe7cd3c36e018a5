// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "ftc/coloring.hpp"
#include "ftc/complex.hpp"
#include "ftc/io.hpp"
#include "ftc/witness.hpp"
#include "support.hpp"

using namespace ftc;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

long winding_count(const CircleMap& f) {
  long total = 0;
  for (long z = 0; z < 2L * f.m; ++z) {
    const long d = mod(f(z + 1) - f(z), 2L * f.n);
    total += d == 1 ? 1 : d == 2L * f.n - 1 ? -1 : 0;
  }
  return total / (2L * f.n);
}

Outcome exact_tc(int n, long expected) {
  Outcome o;
  auto r = tc_exact(khalimsky_circle(n).space, 4);
  o.require(r.exact(), "search did not close the bounds");
  o.require(r.lower == expected, "tc = " + std::to_string(r.lower));
  o.require(r.witness && r.witness->is_cover(), "no witness cover");
  if (r.witness)
    for (const auto& v : r.witness->certificates) o.require(v.homotopic(), "uncertified piece");
  o.detail = o.ok ? "tc = " + std::to_string(r.lower) : o.detail;
  return o;
}

Outcome tc_four() {
  Outcome o;
  auto arg = two_piece_argument(4);
  o.require(arg.classes.size() == 2, "simple 2-colorings give " + std::to_string(arg.classes.size()) + " classes");
  const auto syms = grid_symmetries(square_grid(4));
  std::set<std::vector<int>> reps;
  for (const auto& c : arg.classes) reps.insert(c.representative.cells);
  for (auto rows : {std::vector<std::string>{"1001", "0011", "0110", "1100"},
                    std::vector<std::string>{"1011", "0010", "1110", "1000"}})
    o.require(reps.count(canonical_form(coloring_from_rows(rows), syms).cells) == 1, "tableau class missing");
  o.require(arg.refutations.size() == arg.simple && arg.undecided == 0, "a simple coloring was not refuted");
  for (const auto& [c, why] : arg.refutations) o.require(!why.empty(), "empty refutation for " + to_string(c));
  o.require(arg.with_line + arg.simple == arg.colorings && arg.colorings == 65536, "line pruning leaves a gap");
  auto x = khalimsky_circle(4).space;
  auto level = find_cover(x, Invariant::tc, 3);
  o.require(level.cover.has_value(), "no 3-piece cover");
  if (level.cover) {
    Cover bare{level.cover->space, level.cover->pieces, {}};
    auto w = tc_witness(bare);
    o.require(w.upper && *w.upper == 2, "3-piece witness not certified");
  }
  if (o.ok)
    o.detail = std::to_string(arg.simple) + " simple colorings in 2 classes refuted, " + std::to_string(arg.with_line) +
               " pruned by lines, 3-piece witness certified";
  return o;
}

Outcome witness_mode() {
  Outcome o;
  std::string times;
  for (int k = 5; k <= 7; ++k) {
    const auto start = Clock::now();
    auto report = verify_bundle(k, ChainVariant::repaired);
    o.require(report.checks.size() == 6, "expected six checks");
    for (const auto& c : report.checks) o.require(c.passed, "k=" + std::to_string(k) + ": " + c.name);
    auto r = tc_witness(Cover{witness_space(k), {build_U(k), build_V(k)}, {}});
    o.require(r.lower == 1 && r.upper && *r.upper == 1, "k=" + std::to_string(k) + ": tc_witness not exact 1");
    o.require(known_tc_lower_bound(*khalimsky_circle(k).space) == 1, "lower bound is not 1");
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    o.require(s <= 30, "k=" + std::to_string(k) + " took " + std::to_string(s) + " s");
    times += (times.empty() ? "" : ", ") + std::to_string(s).substr(0, 5) + " s";
  }
  if (o.ok) o.detail = "k=5,6,7 verified (" + times + ")";
  return o;
}

Outcome chain_replay() {
  Outcome o;
  for (int k = 5; k <= 6; ++k) {
    auto b = build_chain(k, ChainVariant::repaired);
    for (const auto& s : b.stages) {
      try {
        stage_map(b, s);
      } catch (const Error& e) {
        o.require(false, e.what());
      }
    }
    auto report = verify_bundle(k, ChainVariant::repaired);
    for (const auto& s : report.stages) {
      o.require(s.continuous, "k=" + std::to_string(k) + ": " + s.name + " not continuous");
      o.require(s.against_previous != Order::incomparable,
                "k=" + std::to_string(k) + ": " + s.name + " incomparable with the previous stage");
    }
    if (k == 6) o.require(b.C == b.displayed_C, "final image differs from the displayed C");
  }
  if (o.ok) o.detail = "k=5,6 stages continuous and comparable; C matches for k=6";
  return o;
}

Outcome classification() {
  Outcome o;
  std::size_t pairs = 0;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {3, 3}}) {
    auto hc = hom_components(khalimsky_circle(m).space, khalimsky_circle(n).space, 1000000);
    std::vector<CircleMap> cm;
    for (const auto& h : hc.maps) cm.push_back(to_circle_map(h));
    for (std::size_t i = 0; i < cm.size(); ++i)
      for (std::size_t j = i; j < cm.size(); ++j, ++pairs)
        o.require(classify_homotopic(cm[i], cm[j]) == (hc.component[i] == hc.component[j]),
                  format_circle_map(cm[i]) + " vs " + format_circle_map(cm[j]));
  }
  if (o.ok) o.detail = std::to_string(pairs) + " pairs agree";
  return o;
}

Outcome random_lifts() {
  Outcome o;
  std::mt19937 rng(20240501);
  for (int t = 0; t < 500; ++t) {
    const int m = std::uniform_int_distribution<int>(2, 8)(rng);
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    auto f = testing::random_circle_map(rng, m, n);
    const long k = std::uniform_int_distribution<long>(-10, 10)(rng);
    const long a = f(k) + 2L * n * std::uniform_int_distribution<long>(-3, 3)(rng);
    auto l = lift(f, k, k + 2L * m, a);
    for (long z = k; z <= k + 2L * m; ++z) o.require(mod(l(z), 2L * n) == f(z), "lift does not cover f");
    o.require(l(k) == a, "lift does not start at a");
    o.require(is_continuous(l.as_interval_map()), "lift not continuous");
    o.require(l.degree && *l.degree == winding_count(f), "degree differs from the winding count");
  }
  if (o.ok) o.detail = "500 lifts cover f, are continuous and match the winding count";
  return o;
}

Outcome cores() {
  Outcome o;
  for (int n = 2; n <= 8; ++n)
    o.require(beat_points(*khalimsky_circle(n).space).empty(), "beat point in S1_" + std::to_string(n));
  std::mt19937 rng(77);
  for (int t = 0; t < 200; ++t) {
    const std::size_t size = std::uniform_int_distribution<std::size_t>(1, 9)(rng);
    auto x = testing::random_poset(rng, size, 0.4);
    auto base = core(x);
    for (int r = 0; r < 3; ++r) {
      std::vector<Point> order(x->size());
      for (Point p = 0; p < x->size(); ++p) order[p] = p;
      std::shuffle(order.begin(), order.end(), rng);
      auto other = core(x, order);
      o.require(other.core->size() == base.core->size(), "core sizes depend on order");
      o.require(find_isomorphism(base.core, other.core).has_value(), "cores not homeomorphic");
    }
  }
  for (long t = 0; t <= 12; ++t) {
    auto x = khalimsky_interval(0, t).space;
    o.require(is_contractible(x) && core(x).core->size() == 1, "[0," + std::to_string(t) + "] not contractible");
  }
  if (o.ok) o.detail = "circles beat-free, 200 posets order-independent, intervals contractible";
  return o;
}

Outcome cat_values() {
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    auto r = cat_exact(khalimsky_circle(n).space, 3);
    o.require(r.exact() && r.lower == 1, "cat(S1_" + std::to_string(n) + ") = " + std::to_string(r.lower));
  }
  auto s2 = khalimsky_circle(2).space;
  auto r2 = cat_exact(product(s2, s2), 4);
  o.require(r2.exact() && r2.lower == 3, "cat(S1_2^2) = " + std::to_string(r2.lower));
  auto s3 = khalimsky_circle(3).space;
  auto r3 = cat_exact(product(s3, s3), 3);
  o.require(r3.exact() && r3.lower == 2, "cat(S1_3^2) = " + std::to_string(r3.lower));
  if (o.ok) o.detail = "cat(S1_n) = 1 for n=2..6, cat(S1_2^2) = 3, cat(S1_3^2) = 2";
  return o;
}

Outcome colorings() {
  Outcome o;
  auto grid = square_grid(4);
  auto classes = enumerate_simple_colorings(grid, 2, Symmetry::full);
  o.require(classes.size() == 2, std::to_string(classes.size()) + " classes");
  const auto syms = grid_symmetries(grid);
  std::set<std::vector<int>> found;
  for (const auto& c : classes) found.insert(canonical_form(c.representative, syms).cells);
  std::set<std::vector<int>> expected;
  for (auto rows : {std::vector<std::string>{"1001", "0011", "0110", "1100"},
                    std::vector<std::string>{"1011", "0010", "1110", "1000"}}) {
    auto c = coloring_from_rows(rows);
    o.require(is_simple(grid, c), "tableau " + to_string(c) + " is not simple");
    expected.insert(canonical_form(c, syms).cells);
  }
  o.require(found == expected, "classes differ from tableaux I and II");
  if (o.ok) o.detail = "2 classes: I and II";
  return o;
}

Outcome mccord() {
  Outcome o;
  for (int n = 2; n <= 8; ++n) {
    auto k = order_complex(*khalimsky_circle(n).space);
    // As a simplicial complex the n-cycle is subdivided once.
    o.require(cycle_length(k) == static_cast<std::size_t>(2 * n), "K(S1_" + std::to_string(n) + ") is not a cycle");
  }
  for (int n = 3; n <= 8; ++n)
    o.require(find_isomorphism(face_poset(cycle_complex(n)), khalimsky_circle(n).space).has_value(),
              "face poset of the " + std::to_string(n) + "-cycle is not S1_" + std::to_string(n));
  std::mt19937 rng(31);
  for (int t = 0; t < 20; ++t) {
    auto k = testing::random_complex(rng, 7, 2);
    o.require(k.dimension() <= 2, "complex too large");
    auto sd = order_complex(*face_poset(k));
    o.require(sd.facets.size() == barycentric_facet_count(k), "barycentric count differs");
  }
  if (o.ok) o.detail = "cycles, face posets and 20 subdivisions agree";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"tc(S1_2) = 3 by exact search", 10, [] { return exact_tc(2, 3); }},
      {"tc(S1_3) = 2 by exact search", 120, [] { return exact_tc(3, 2); }},
      {"tc(S1_4) = 2 by colorings, line pruning and a 3-piece witness", 600, tc_four},
      {"tc(S1_k) = 1 for k=5,6,7 in witness mode", 90, witness_mode},
      {"chain replay for k=5,6", 0, chain_replay},
      {"classification agrees with hom components", 0, classification},
      {"500 random lifts", 0, random_lifts},
      {"core checks", 0, cores},
      {"cat values", 0, cat_values},
      {"simple 2-colorings of the 4x4 grid", 0, colorings},
      {"order complex and face poset checks", 0, mccord},
  };
  int failures = 0;
  int index = 1;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit > 0 && s > c.limit && o.ok) {
      o.ok = false;
      o.detail = "took " + std::to_string(s) + " s";
    }
    std::ostringstream time;
    time.precision(3);
    time << s;
    std::cout << (o.ok ? "PASS" : "FAIL") << ' ' << index++ << ". " << c.name << ": " << o.detail << " ["
              << time.str() << " s]\n";
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
