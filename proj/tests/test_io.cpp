#include <doctest.h>

#include <sstream>

#include "ftc/io.hpp"
#include "support.hpp"

using namespace ftc;

TEST_CASE("space round trip") {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto x = testing::random_poset(rng, 1 + t % 9, 0.4);
    std::ostringstream out;
    write_space(out, *x);
    std::istringstream in(out.str());
    auto y = read_space(in);
    CHECK(same_order(*x, *y));
    CHECK(y->labels() == x->labels());
  }
  std::istringstream text("# a fence\nspace V 3\npoint 0 left end\npoint 1 right\npoint 2 top\ncover 0 2\ncover 1 2\n");
  auto v = read_space(text);
  CHECK(v->name() == "V");
  CHECK(v->label(0) == "left end");
  CHECK(v->leq(1, 2));
}

TEST_CASE("space parse errors") {
  auto bad = [](const std::string& s) {
    std::istringstream in(s);
    CHECK_THROWS_AS(read_space(in), Error);
  };
  bad("");
  bad("space X\n");
  bad("space X 2\npoint 0 a\n");
  bad("space X 2\npoint 0 a\npoint 1 b\ncover 0 2\n");
  bad("space X 2\npoint 0 a\npoint 1 b\ncover 0 1\ncover 1 0\n");
  bad("space X 1\npoint 0 a\nedge 0 0\n");
}

TEST_CASE("id lists") {
  auto s = parse_ids("0 3 4", 6);
  CHECK(format_ids(s) == "0 3 4");
  CHECK(parse_ids("", 3).empty());
  CHECK_THROWS_AS(parse_ids("3 1", 6), Error);
  CHECK_THROWS_AS(parse_ids("7", 6), Error);
  CHECK_THROWS_AS(parse_ids("x", 6), Error);
}

TEST_CASE("cover and coloring files") {
  auto g = square_grid(4);
  auto c = coloring_from_rows({"1001", "0011", "0110", "1100"});
  std::ostringstream cf;
  write_coloring(cf, c);
  CHECK(cf.str() == "coloring 4 2\n1001\n0011\n0110\n1100\n");
  std::istringstream cin(cf.str());
  CHECK(read_coloring(cin) == c);

  auto cover = cover_from_coloring(g, c);
  std::ostringstream out;
  write_cover(out, cover);
  std::istringstream in(out.str());
  auto back = read_cover(in, g.space);
  CHECK(back.pieces == cover.pieces);

  std::istringstream not_open("cover X 1\n1\n");
  CHECK_THROWS_AS(read_cover(not_open, g.space), Error);
}

TEST_CASE("circle map text") {
  auto f = parse_circle_map("circlemap 2 2 0 1 2 3");
  CHECK(degree(f) == 1);
  CHECK(format_circle_map(f) == "circlemap 2 2 0 1 2 3");
  CHECK_THROWS_AS(parse_circle_map("circlemap 2 2 0 1 2"), Error);
  CHECK_THROWS_AS(parse_circle_map("circlemap 2 2 0 2 0 2"), Error);
  CHECK_THROWS_AS(parse_circle_map("map 2 2 0 1 2 3"), Error);
}

TEST_CASE("fence file") {
  auto c = khalimsky_circle(3);
  auto f = constant_map(c.space, c.space, c.a(0));
  auto g = constant_map(c.space, c.space, c.b(0));
  auto v = homotopic(f, g);
  REQUIRE(v.certificate);
  std::ostringstream out;
  write_fence(out, *v.certificate);
  std::istringstream in(out.str());
  auto back = read_fence(in, c.space, c.space);
  CHECK(replay(back, f, g).ok);
}

TEST_CASE("space specs") {
  CHECK(load_space("circle:4")->size() == 8);
  CHECK(load_space("circle:3*circle:3")->size() == 36);
  CHECK(load_space("interval:0:6")->size() == 7);
  CHECK(load_space("point")->size() == 1);
  CHECK_THROWS_AS(load_space("circle:1"), Error);
  CHECK_THROWS_AS(load_space("/nonexistent/space.txt"), Error);
}
