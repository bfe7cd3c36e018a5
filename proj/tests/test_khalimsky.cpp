#include <doctest.h>

#include "ftc/khalimsky.hpp"
#include "support.hpp"

using namespace ftc;

namespace {

CircleMap identity_circle(int m) {
  std::vector<long> t;
  for (long z = 0; z < 2L * m; ++z) t.push_back(z);
  return make_circle_map(m, m, t);
}

CircleMap constant_circle(int m, int n, long v) {
  return make_circle_map(m, n, std::vector<long>(static_cast<std::size_t>(2 * m), v));
}

CircleMap doubling() {
  std::vector<long> t;
  for (long z = 0; z < 8; ++z) t.push_back(z % 4);
  return make_circle_map(4, 2, t);
}

/// Degree by counting signed steps around the loop, without lifting.
long winding_count(const CircleMap& f) {
  long total = 0;
  for (long z = 0; z < 2L * f.m; ++z) {
    const long d = mod(f(z + 1) - f(z), 2L * f.n);
    total += d == 1 ? 1 : d == 2L * f.n - 1 ? -1 : 0;
  }
  return total / (2L * f.n);
}

}  // namespace

TEST_CASE("lift") {
  auto c = constant_circle(3, 2, 1);
  auto lc = lift(c, 0, 6, 5);
  for (long v : lc.values) CHECK(v == 5);
  CHECK(*lc.degree == 0);

  for (int m = 2; m <= 5; ++m) {
    auto id = identity_circle(m);
    auto li = lift(id, 0, 2L * m, 0);
    for (long z = 0; z <= 2L * m; ++z) CHECK(li(z) == z);
    CHECK(li(2L * m) - li(0) == 2L * m);
  }

  auto d = doubling();
  auto ld = lift(d, 0, 8, 0);
  CHECK(ld(8) - ld(0) == 8);
  for (long z = 0; z <= 8; ++z) CHECK(mod(ld(z), 4) == d(z));

  CHECK_THROWS_AS(lift(d, 0, 8, 1), Error);
  CircleMap tiny{2, 1, {0, 1, 0, 1}};
  try {
    lift(tiny, 0, 4, 0);
    FAIL("lifting into a two-point circle accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_applicable);
  }
}

TEST_CASE("degree") {
  CHECK(degree(identity_circle(3)) == 1);
  CHECK(degree(constant_circle(3, 4, 2)) == 0);
  CHECK(degree(doubling()) == 2);
  // Orientation reversal negates the degree.
  CHECK(degree(reflect_target(identity_circle(4))) == -1);
  CHECK(degree(reflect_target(doubling())) == -2);
}

TEST_CASE("lifts commute with the quotient, are unique and have integral degree") {
  std::mt19937 rng(99);
  for (int t = 0; t < 200; ++t) {
    const int m = 2 + t % 5;
    const int n = 2 + (t / 5) % 4;
    auto f = ftc::testing::random_circle_map(rng, m, n);
    const long k = std::uniform_int_distribution<long>(-5, 5)(rng);
    const long a = f(k) + 2L * n * std::uniform_int_distribution<long>(-2, 2)(rng);
    auto l = lift(f, k, k + 2L * m, a);
    for (long z = k; z <= k + 2L * m; ++z) CHECK(mod(l(z), 2L * n) == f(z));
    CHECK(is_continuous(l.as_interval_map()));
    CHECK(*l.degree == winding_count(f));
  }
}

TEST_CASE("monotone_normalize") {
  IntervalMap id{0, 4, {0, 1, 2, 3, 4}};
  CHECK(monotone_normalize(id) == id);
  CHECK(monotone_normalize(constant_lift(0, 4, 0)) == constant_lift(0, 4, 0));
  IntervalMap g{0, 6, {0, 1, 1, 1, 2, 3, 4}};
  REQUIRE(is_continuous(g));
  CHECK(monotone_normalize(g).values == std::vector<long>{0, 1, 2, 3, 4, 4, 4});
  CHECK_THROWS_AS(monotone_normalize(IntervalMap{0, 2, {1, 1, 1}}), Error);
  CHECK_THROWS_AS(monotone_normalize(IntervalMap{0, 2, {2, 1, 0}}), Error);
}

TEST_CASE("interval fences on every map [0,6] -> [0,6]") {
  auto maps = ftc::testing::all_interval_maps(0, 6, 0, 6);
  CHECK(maps.size() > 100);
  std::size_t cons = 0, stan = 0;
  for (const auto& g : maps) {
    auto mono = mono_fence(g);
    CHECK(mono.front() == g);
    const IntervalMap& last = mono.back();
    CHECK(last(0) == g(0));
    CHECK(last(6) == g(6));
    if (g(0) <= g(6)) {
      CHECK(is_monotone(last));
    } else {
      CHECK(is_monotone(IntervalMap{0, 6, {-last(0), -last(1), -last(2), -last(3), -last(4), -last(5), -last(6)}}));
    }
    for (std::size_t i = 1; i < mono.size(); ++i) CHECK(compare(mono[i - 1], mono[i]) != 2);
    if (g(0) == g(6)) {
      auto c = cons_fence(g);
      CHECK(c.back() == constant_lift(0, 6, g(0)));
      ++cons;
    }
    if (is_monotone(g) && ht(g(0)) == 0) {
      auto s = stan_fence(g);
      CHECK(s.back() == monotone_normalize(g));
      for (std::size_t i = 1; i < s.size(); ++i) CHECK(compare(s[i - 1], s[i]) != 2);
      ++stan;
    }
  }
  CHECK(cons > 0);
  CHECK(stan > 0);
}

TEST_CASE("classify_homotopic examples") {
  auto a = constant_circle(2, 2, 0);
  auto b = constant_circle(2, 2, 3);
  CHECK(classify_homotopic(a, b));

  auto id = identity_circle(2);
  CircleMap rot = id;
  for (auto& v : rot.table) v = mod(v + 2, 4);
  CHECK_FALSE(classify_homotopic(id, rot));

  std::vector<long> t1{0, 0, 0, 1, 2, 3, 0, 0, 0, 0, 0, 0};
  std::vector<long> t2{0, 1, 2, 3, 0, 0, 0, 0, 0, 0, 0, 0};
  auto f = make_circle_map(6, 2, t1);
  auto g = make_circle_map(6, 2, t2);
  CHECK(degree(f) == 1);
  CHECK(degree(g) == 1);
  CHECK(classify_homotopic(f, g));
  auto fence = circle_fence(f, g);
  REQUIRE(fence);
  CHECK(fence->front() == f);
  CHECK(fence->back() == g);

  CHECK(classify_homotopic(id, id));
  CHECK_THROWS_AS(classify_homotopic(id, identity_circle(3)), Error);
}

TEST_CASE("classification agrees with hom-set components and fences exist") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {3, 3}}) {
    auto hc = hom_components(khalimsky_circle(m).space, khalimsky_circle(n).space, 1000000);
    std::vector<CircleMap> cm;
    for (const auto& h : hc.maps) cm.push_back(to_circle_map(h));
    for (std::size_t i = 0; i < cm.size(); ++i) {
      const long d = degree(cm[i]);
      if (std::labs(d) * n >= m) {
        std::size_t size = 0;
        for (auto c : hc.component) size += c == hc.component[i];
        CHECK(size == 1);
      }
      for (std::size_t j = i; j < cm.size(); j += 3) {
        const bool same = hc.component[i] == hc.component[j];
        CHECK(classify_homotopic(cm[i], cm[j]) == same);
        if (same) {
          auto fence = circle_fence(cm[i], cm[j]);
          REQUIRE(fence);
          CHECK(fence->front() == cm[i]);
          CHECK(fence->back() == cm[j]);
        }
      }
    }
  }
}

TEST_CASE("degree is constant along comparabilities") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {3, 3}}) {
    auto x = khalimsky_circle(m).space;
    auto y = khalimsky_circle(n).space;
    auto maps = enumerate_maps(x, y, 1000000);
    for (std::size_t i = 0; i < maps.size(); i += 5)
      for (std::size_t j = 0; j < maps.size(); j += 3)
        if (comparable(maps[i], maps[j]) != Order::incomparable)
          CHECK(degree(to_circle_map(maps[i])) == degree(to_circle_map(maps[j])));
  }
}

TEST_CASE("recognize_circle") {
  auto s4 = khalimsky_circle(4).space;
  std::vector<Point> perm{5, 2, 7, 0, 3, 6, 1, 4};
  std::vector<std::string> labels(8);
  std::vector<CoverPair> pairs;
  for (Point p = 0; p < 8; ++p) labels[perm[p]] = s4->label(p);
  for (auto [lo, hi] : s4->covers()) pairs.push_back({perm[lo], perm[hi]});
  auto shuffled = build_space(labels, pairs);
  auto chart = recognize_circle(*shuffled);
  REQUIRE(chart);
  CHECK(chart->n == 4);
  // Lexicographically least among all numberings given by isomorphisms.
  std::vector<std::vector<Point>> numberings;
  for_each_isomorphism(s4, shuffled, [&](const OrderMap& iso) {
    numberings.push_back(iso.table());
    return true;
  });
  CHECK(numberings.size() == 8);
  CHECK(chart->point == *std::min_element(numberings.begin(), numberings.end()));
  for (std::size_t r = 0; r < 8; ++r) CHECK(chart->residue[chart->point[r]] == static_cast<long>(r));

  // Six-point fence: a path, not a cycle.
  auto fence = build_space({"0", "1", "2", "3", "4", "5"}, {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 5}});
  CHECK_FALSE(recognize_circle(*fence));
  CHECK_FALSE(recognize_circle(*build_space({"x"}, {})));
  CHECK(recognize_circle(*khalimsky_circle(2).space)->n == 2);
}

TEST_CASE("constant and quotient maps") {
  auto eps = constant_lift(0, 6, 3);
  CHECK(is_continuous(eps));
  CHECK(degree(constant_circle(3, 3, 3)) == 0);
  for (int m = 2; m <= 5; ++m) {
    auto q = quotient_map(0, 2L * m, m);
    CHECK_FALSE(find_violation(*q.source(), *q.target(), q.table()).has_value());
  }
}

TEST_CASE("q after lift equals f after p on random maps") {
  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    const int m = 2 + t % 4, n = 2 + t % 3;
    auto f = ftc::testing::random_circle_map(rng, m, n);
    const long k = t - 20;
    auto l = lift(f, k, k + 3L * m, f(k));
    const long lo = *std::min_element(l.values.begin(), l.values.end());
    const long hi = *std::max_element(l.values.begin(), l.values.end());
    auto q = quotient_map(lo, hi, n);
    auto p = quotient_map(k, k + 3L * m, m);
    for (long z = k; z <= k + 3L * m; ++z)
      CHECK(static_cast<long>(q(static_cast<Point>(l(z) - lo))) == f(p(static_cast<Point>(z - k))));
  }
}
