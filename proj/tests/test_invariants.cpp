#include <doctest.h>

#include <random>

#include "ftc/invariants.hpp"
#include "ftc/khalimsky.hpp"
#include "support.hpp"

using namespace ftc;
using ftc::testing::set_of;

namespace {

Cover random_cover(std::mt19937& rng, const SpacePtr& y, int pieces) {
  const auto maxima = maximal_elements(*y).members();
  std::vector<PointSet> members(static_cast<std::size_t>(pieces), y->none());
  std::uniform_int_distribution<int> pick(0, pieces - 1);
  std::bernoulli_distribution extra(0.3);
  for (Point m : maxima) {
    members[static_cast<std::size_t>(pick(rng))] |= y->down(m);
    for (auto& s : members)
      if (extra(rng)) s |= y->down(m);
  }
  // Stray non-maximal tails.
  std::uniform_int_distribution<Point> any(0, static_cast<Point>(y->size() - 1));
  for (auto& s : members) s |= y->down(any(rng));
  Cover c{y, {}, {}};
  for (auto& s : members) c.pieces.emplace_back(y, s);
  return c;
}

}  // namespace

TEST_CASE("principalize") {
  auto s3 = khalimsky_circle(3);
  Cover whole{s3.space, {DownSet(s3.space, s3.space->all())}, {}};
  CHECK(principalize(whole).pieces == whole.pieces);

  // min_open(b0) together with the stray point a2.
  PointSet tail = s3.space->down(s3.b(0)) | set_of(*s3.space, {s3.a(2)});
  Cover c{s3.space, {DownSet(s3.space, tail), DownSet(s3.space, s3.space->all())}, {}};
  auto p = principalize(c);
  CHECK(p.pieces[0] == min_open(s3.space, s3.b(0)));
  CHECK(p.is_cover());

  std::mt19937 rng(7);
  auto y = product(s3.space, s3.space);
  for (int t = 0; t < 100; ++t) {
    Cover r = random_cover(rng, y, 1 + t % 3);
    REQUIRE(r.is_cover());
    Cover once = principalize(r);
    CHECK(once.is_cover());
    for (std::size_t i = 0; i < r.pieces.size(); ++i)
      CHECK(once.pieces[i].members().is_subset_of(r.pieces[i].members()));
    CHECK(principalize(once).pieces == once.pieces);
  }
}

TEST_CASE("find_line") {
  auto s4 = khalimsky_circle(4);
  auto y = product(s4.space, s4.space);
  PointSet row = y->none();
  for (Point x = 0; x < s4.space->size(); ++x) row.insert(y->point_at(x, s4.a(1)));
  auto line = find_line(*y, open_hull(y, row).members());
  REQUIRE(line);
  CHECK(line->horizontal);
  CHECK_FALSE(find_line(*y, min_open(y, y->point_at(s4.b(0), s4.b(0))).members()));
  CHECK_THROWS_AS(find_line(*s4.space, s4.space->all()), Error);
}

TEST_CASE("is_section_categorical") {
  auto s4 = khalimsky_circle(4);
  auto y = product(s4.space, s4.space);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      auto v = is_section_categorical(min_open(y, y->point_at(s4.b(i), s4.b(j))));
      CHECK(v.homotopic());
    }

  SUBCASE("a horizontal line refutes with degrees 1 and 0") {
    PointSet band = y->none();
    for (Point x = 0; x < s4.space->size(); ++x) band |= y->down(y->point_at(x, s4.b(2)));
    auto v = is_section_categorical(DownSet(y, band));
    CHECK(v.refuted());
    CHECK(v.reason.find("degrees 1 and 0") != std::string::npos);
    CHECK(v.obstruction.size() == s4.space->size());
  }

  SUBCASE("line refutations agree with the general decision") {
    std::mt19937 rng(3);
    auto s3 = khalimsky_circle(3);
    auto y3 = product(s3.space, s3.space);
    auto [p1, p2] = projections(y3);
    int seen = 0;
    for (int t = 0; t < 200 && seen < 25; ++t) {
      PointSet s = y3->none();
      std::bernoulli_distribution coin(0.6);
      for (Point m : maximal_elements(*y3).members())
        if (coin(rng)) s |= y3->down(m);
      if (!find_line(*y3, s)) continue;
      ++seen;
      auto sub = subspace(y3, s);
      HomotopyOptions opt;
      opt.strategy = Strategy::automatic;
      auto general = homotopic(restrict_to(p1, sub), restrict_to(p2, sub), opt);
      INFO(general.reason);
      CHECK(general.refuted());
      CHECK(is_section_categorical(DownSet(y3, s)).refuted());
    }
    CHECK(seen > 0);
  }

  CHECK(is_section_categorical(DownSet(y, y->none())).homotopic());
  CHECK_THROWS_AS(is_section_categorical(DownSet(s4.space, s4.space->all())), Error);
}

TEST_CASE("is_categorical") {
  for (int n = 2; n <= 5; ++n) {
    auto c = khalimsky_circle(n);
    PointSet arc = c.space->all();
    arc.erase(c.b(0));
    CHECK(is_categorical(DownSet(c.space, arc)).homotopic());
    CHECK(is_categorical(DownSet(c.space, c.space->all())).refuted());
    CHECK(is_categorical(DownSet(c.space, c.space->none())).homotopic());
  }
}

TEST_CASE("cat of circles") {
  for (int n = 2; n <= 6; ++n) {
    auto r = cat_exact(khalimsky_circle(n).space, 3);
    CHECK(r.exact());
    CHECK(r.lower == 1);
    REQUIRE(r.witness);
    CHECK(r.witness->is_cover());
    for (const auto& v : r.witness->certificates) CHECK(v.homotopic());
  }
}

TEST_CASE("cat of circle products") {
  auto s2 = khalimsky_circle(2).space;
  auto r2 = cat_exact(product(s2, s2), 4);
  CHECK(r2.exact());
  CHECK(r2.lower == 3);
  auto s3 = khalimsky_circle(3).space;
  auto r3 = cat_exact(product(s3, s3), 3);
  CHECK(r3.exact());
  CHECK(r3.lower == 2);
}

TEST_CASE("tc of small circles") {
  auto r2 = tc_exact(khalimsky_circle(2).space, 4);
  CHECK(r2.exact());
  CHECK(r2.lower == 3);
  REQUIRE(r2.witness);
  for (const auto& v : r2.witness->certificates) {
    REQUIRE(v.certificate);
    CHECK(v.homotopic());
  }

  auto r3 = tc_exact(khalimsky_circle(3).space, 3);
  CHECK(r3.exact());
  CHECK(r3.lower == 2);
  CHECK(r3.levels.front().pieces == 2);
  CHECK(r3.levels.front().outcome == LevelOutcome::exhausted);
}

TEST_CASE("cat <= tc <= cat of the square") {
  auto s2 = khalimsky_circle(2).space;
  auto cat = cat_exact(s2, 4);
  auto tc = tc_exact(s2, 4);
  auto sq = cat_exact(product(s2, s2), 4);
  REQUIRE((cat.exact() && tc.exact() && sq.exact()));
  CHECK(cat.lower <= tc.lower);
  CHECK(tc.lower <= sq.lower);
}

TEST_CASE("thread count does not change the answer") {
  auto s3 = khalimsky_circle(3).space;
  SearchConfig one;
  SearchConfig four;
  four.threads = 4;
  auto a = find_cover(s3, Invariant::tc, 3, one);
  auto b = find_cover(s3, Invariant::tc, 3, four);
  REQUIRE(a.cover);
  REQUIRE(b.cover);
  CHECK(a.cover->pieces == b.cover->pieces);
}

TEST_CASE("search limits") {
  auto s5 = khalimsky_circle(6).space;
  CHECK_THROWS_AS(find_cover(s5, Invariant::tc, 2), Error);
  SearchConfig tight;
  tight.node_budget = 1;
  auto lvl = find_cover(khalimsky_circle(3).space, Invariant::tc, 2, tight);
  CHECK(lvl.outcome == LevelOutcome::inconclusive);
  CHECK_THROWS_AS(find_cover(s5, Invariant::tc, 0), Error);
}

TEST_CASE("witness mode") {
  auto s3 = khalimsky_circle(3);
  auto y = product(s3.space, s3.space);
  Cover whole{y, {DownSet(y, y->all())}, {}};
  auto r = tc_witness(whole);
  CHECK_FALSE(r.upper);
  CHECK(r.lower == 1);

  auto found = find_cover(s3.space, Invariant::tc, 3);
  REQUIRE(found.cover);
  Cover stripped{y, found.cover->pieces, {}};
  auto w = tc_witness(stripped);
  REQUIRE(w.upper);
  CHECK(*w.upper == 2);

  Cover partial{y, {min_open(y, y->point_at(s3.b(0), s3.b(0)))}, {}};
  CHECK_THROWS_AS(tc_witness(partial), Error);
}
