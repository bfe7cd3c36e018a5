#include <doctest.h>

#include <algorithm>

#include "ftc/finite_space.hpp"
#include "ftc/homotopy.hpp"
#include "support.hpp"

using namespace ftc;
using ftc::testing::set_of;

TEST_CASE("build_space: singleton, circle by hand, cycle rejected") {
  auto one = build_space({"x"}, {});
  CHECK(one->size() == 1);
  CHECK(one->covers().empty());

  // a0=0 b0=1 a1=2 b1=3
  auto hand = build_space({"a0", "b0", "a1", "b1"}, {{0, 1}, {2, 1}, {0, 3}, {2, 3}});
  auto s = khalimsky_circle(2);
  CHECK(same_order(*hand, *s.space));

  try {
    build_space({"x", "y"}, {{0, 1}, {1, 0}});
    FAIL("cycle accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::cycle_detected);
  }
}

TEST_CASE("build_space closes transitively and reduces to covers") {
  auto chain = build_space({"x", "y", "z"}, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(chain->leq(0, 2));
  CHECK(chain->covers().size() == 2);
  CHECK(chain->down(2) == set_of(*chain, {0, 1, 2}));
}

TEST_CASE("khalimsky_circle") {
  auto s2 = khalimsky_circle(2);
  CHECK(s2.space->size() == 4);
  CHECK(maximal_elements(*s2.space).count() == 2);
  CHECK(minimal_elements(*s2.space).count() == 2);

  auto s3 = khalimsky_circle(3);
  CHECK(min_open(s3.space, s3.b(0)).members() == set_of(*s3.space, {s3.a(0), s3.b(0), s3.a(1)}));
  CHECK(min_open(s3.space, s3.a(0)).members() == set_of(*s3.space, {s3.a(0)}));
  CHECK(beat_points(*s2.space).empty());

  CHECK_THROWS_AS(khalimsky_circle(1), Error);

  for (int n = 2; n <= 8; ++n) {
    auto c = khalimsky_circle(n);
    CHECK(maximal_elements(*c.space).count() == static_cast<std::size_t>(n));
    CHECK(minimal_elements(*c.space).count() == static_cast<std::size_t>(n));
    for (Point p = 0; p < c.space->size(); ++p) {
      const auto others = (c.space->up(p) | c.space->down(p)).count() - 1;
      CHECK(others == 2);
    }
    // a_i < b_j iff j in {i-1, i}
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const bool expect = j == i || ((j + 1) % n) == i;
        CHECK(c.space->leq(c.a(i), c.b(j)) == expect);
      }
  }
}

TEST_CASE("residue numbering") {
  auto c = khalimsky_circle(4);
  CHECK(c.residue(c.a(0)) == 1);
  CHECK(c.residue(c.b(0)) == 2);
  CHECK(c.residue(c.b(3)) == 8);
  CHECK(c.from_residue(9) == c.a(0));
  CHECK(c.from_residue(0) == c.b(3));
}

TEST_CASE("khalimsky_interval") {
  auto single = khalimsky_interval(0, 0);
  CHECK(single.space->size() == 1);

  auto i = khalimsky_interval(0, 2);
  CHECK(i.space->less(i.point(0), i.point(1)));
  CHECK(i.space->less(i.point(2), i.point(1)));
  CHECK_FALSE(i.space->comparable(i.point(0), i.point(2)));

  auto odd = khalimsky_interval(-3, 1);
  CHECK(odd.space->less(odd.point(-2), odd.point(-3)));
  CHECK(odd.space->less(odd.point(-2), odd.point(-1)));
  CHECK(odd.space->less(odd.point(0), odd.point(1)));

  CHECK_THROWS_AS(khalimsky_interval(3, 2), Error);
}

TEST_CASE("product") {
  auto one = build_space({"*"}, {});
  auto s3 = khalimsky_circle(3).space;
  CHECK(same_order(*product(one, s3), *s3));

  auto s2 = khalimsky_circle(2).space;
  auto p2 = product(s2, s2);
  CHECK(p2->size() == 16);
  CHECK(maximal_elements(*p2).count() == 4);

  auto s4 = khalimsky_circle(4).space;
  auto p4 = product(s4, s4);
  CHECK(p4->size() == 64);
  CHECK(maximal_elements(*p4).count() == 16);

  auto p3 = product(s3, s3);
  const auto maxima = maximal_elements(*p3);
  CHECK(maxima.count() == 9);
  maxima.for_each([&](Point p) {
    auto [x, y] = p3->coordinates(p);
    CHECK(x % 2 == 1);
    CHECK(y % 2 == 1);
  });

  auto [pi1, pi2] = projections(p3);
  CHECK_FALSE(find_violation(*p3, *s3, pi1.table()).has_value());
  CHECK_FALSE(find_violation(*p3, *s3, pi2.table()).has_value());
}

TEST_CASE("intervals and opens") {
  auto one = build_space({"x"}, {});
  CHECK(interval_down(one, 0).members() == one->all());

  auto s2 = khalimsky_circle(2);
  CHECK(open_hull(s2.space, set_of(*s2.space, {s2.b(0)})).members() ==
        set_of(*s2.space, {s2.a(0), s2.b(0), s2.a(1)}));
  auto open = min_open(s2.space, s2.b(1));
  CHECK(open_hull(s2.space, open.members()).members() == open.members());

  CHECK(interval(*s2.space, s2.a(0), s2.b(0)) == set_of(*s2.space, {s2.a(0), s2.b(0)}));
  CHECK(interval_up(*s2.space, s2.a(1)) == set_of(*s2.space, {s2.a(1), s2.b(0), s2.b(1)}));

  CHECK_THROWS_AS(DownSet(s2.space, set_of(*s2.space, {s2.b(0)})), Error);
}

TEST_CASE("min_open is the intersection of all opens containing x") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto x = ftc::testing::random_poset(rng, 1 + trial % 10, 0.35);
    auto opens = ftc::testing::all_opens(*x);
    for (Point p = 0; p < x->size(); ++p) {
      PointSet meet = x->all();
      for (const auto& u : opens)
        if (u.contains(p)) meet &= u;
      CHECK(meet == min_open(x, p).members());
    }
  }
}

TEST_CASE("open_hull is extensive, monotone and idempotent") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto x = ftc::testing::random_poset(rng, 2 + trial % 9, 0.3);
    std::bernoulli_distribution coin(0.3);
    PointSet a(x->size()), b(x->size());
    for (Point p = 0; p < x->size(); ++p) {
      if (coin(rng)) a.insert(p);
      if (coin(rng)) b.insert(p);
    }
    b |= a;
    auto ha = open_hull(x, a).members();
    CHECK(a.is_subset_of(ha));
    CHECK(ha.is_subset_of(open_hull(x, b).members()));
    CHECK(open_hull(x, ha).members() == ha);
  }
}

TEST_CASE("is_continuous") {
  auto s2 = khalimsky_circle(2);
  auto id = identity_map(s2.space);
  CHECK(std::holds_alternative<OrderMap>(is_continuous(s2.space, s2.space, id.table())));
  CHECK(std::holds_alternative<OrderMap>(
      is_continuous(s2.space, s2.space, std::vector<Point>(4, s2.b(1)))));

  std::vector<Point> swap = id.table();
  std::swap(swap[s2.a(0)], swap[s2.b(0)]);
  auto r = is_continuous(s2.space, s2.space, swap);
  REQUIRE(std::holds_alternative<ContinuityViolation>(r));
  auto v = std::get<ContinuityViolation>(r);
  CHECK(s2.space->leq(v.lo, v.hi));
  CHECK_FALSE(s2.space->leq(swap[v.lo], swap[v.hi]));

  CHECK_THROWS_AS(OrderMap(s2.space, s2.space, swap), Error);
}

TEST_CASE("maximal elements") {
  auto one = build_space({"x"}, {});
  CHECK(maximal_elements(*one).count() == 1);
  auto s5 = khalimsky_circle(5);
  auto maxima = maximal_elements(*s5.space);
  for (int i = 0; i < 5; ++i) CHECK(maxima.contains(s5.b(i)));
}

TEST_CASE("subspace and components") {
  auto s3 = khalimsky_circle(3);
  PointSet arc = s3.space->all();
  arc.erase(s3.b(0));
  CHECK(components(*s3.space, arc).size() == 1);
  PointSet two = s3.space->all();
  two.erase(s3.b(0));
  two.erase(s3.b(1));
  CHECK(components(*s3.space, two).size() == 2);
  auto sub = subspace(s3.space, arc);
  CHECK(sub.space->size() == 5);
  CHECK(sub.to_parent.size() == 5);
}
