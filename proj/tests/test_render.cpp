#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "planar/constructions.hpp"
#include "planar/coverage.hpp"
#include "planar/render.hpp"
#include "planar/search.hpp"

using namespace planar;

TEST_CASE("ascii grid renders origin at the lower left") {
  const Basis one(std::vector<Point>{{0, 0}});
  CHECK(render_ascii(one, Rect(0, 0)) == "●\n");

  const Basis corner(std::vector<Point>{{0, 0}, {2, 1}});
  // row y=1 prints first
  CHECK(render_ascii(corner, Rect(2, 1)) ==
        "· · ●\n"
        "● · ·\n");
}

TEST_CASE("ascii grid of the boundary basis matches the figure layout") {
  const auto c = boundary(Rect(6, 6));
  const std::string grid = render_ascii(c.basis, Rect(6, 6));
  // 7 rows; the half-rect boundary occupies rows y=0..3, x=0..3
  CHECK(std::count(grid.begin(), grid.end(), '\n') == 7);
  const std::string expected =
      "· · · · · · ·\n"
      "· · · · · · ·\n"
      "· · · · · · ·\n"
      "● ● ● ● · · ·\n"
      "● · · ● · · ·\n"
      "● · · ● · · ·\n"
      "● ● ● ● · · ·\n";
  CHECK(grid == expected);
}

TEST_CASE("json round trip is the identity") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> d(0, 30);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Point> pts;
    const int n = 1 + trial % 12;
    for (int i = 0; i < n; ++i) pts.push_back({d(rng), d(rng)});
    const Basis a(std::move(pts));
    CHECK(parse_basis(render_json(a, Rect(30, 30))) == a);
    CHECK(parse_basis(solution_line(a)) == a);
  }
}

TEST_CASE("json object carries rect, k and classification flags") {
  const auto c = boundary(Rect(6, 6));
  const std::string j = render_json(c.basis, Rect(6, 6));
  CHECK(j.find("\"rect\":[6,6]") != std::string::npos);
  CHECK(j.find("\"k\":12") != std::string::npos);
  CHECK(j.find("\"restricted\":true") != std::string::npos);
  CHECK(j.find("\"is_basis\":true") != std::string::npos);
}

TEST_CASE("csv renders one point per line in canonical order") {
  const Basis a(std::vector<Point>{{2, 1}, {0, 0}, {1, 0}});
  CHECK(render_csv(a) == "0,0\n1,0\n2,1\n");
}

TEST_CASE("solution lines re-read as valid bases") {
  // everything a subcommand prints must classify cleanly when parsed back
  SearchConfig cfg;
  cfg.rect = Rect(2, 2);
  cfg.k = 5;
  for (const Basis& b : find_bases(cfg).solutions) {
    const Basis back = parse_basis(solution_line(b));
    CHECK(back == b);
    const auto f = classify(back, cfg.rect);
    CHECK(f.admissible);
    CHECK(f.is_basis);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_basis("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_basis("{\"rect\":[1,1]}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_basis("[[1,2,3]]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_points_arg("1;2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_points_arg(""), std::invalid_argument);
  CHECK(parse_points_arg("0,0;1,0") ==
        Basis(std::vector<Point>{{0, 0}, {1, 0}}));
}
