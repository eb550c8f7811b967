#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "planar/constructions.hpp"
#include "planar/coverage.hpp"

using namespace planar;

namespace {

Basis basis_of(std::initializer_list<Point> pts) {
  return Basis(std::vector<Point>(pts));
}

std::vector<Point> random_points(std::mt19937& rng, int n, int max_coord) {
  std::uniform_int_distribution<int> d(0, max_coord);
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back({d(rng), d(rng)});
  return pts;
}

}  // namespace

TEST_CASE("basis is canonically ordered and duplicate-free") {
  const Basis a(std::vector<Point>{{2, 1}, {0, 0}, {2, 1}, {1, 0}});
  REQUIRE(a.size() == 3);
  CHECK(a[0] == Point{0, 0});
  CHECK(a[1] == Point{1, 0});
  CHECK(a[2] == Point{2, 1});
  CHECK(a == basis_of({{2, 1}, {1, 0}, {0, 0}}));
  CHECK_THROWS_AS(Basis(std::vector<Point>{{-1, 0}}), std::invalid_argument);
}

TEST_CASE("sumset identity case") {
  const auto grid = sumset(basis_of({{0, 0}}), Rect(0, 0));
  CHECK(grid.count_at({0, 0}) == 1);
  CHECK(grid.gap_count() == 0);
}

TEST_CASE("sumset covers the 2x2 square from the L-shaped basis") {
  const auto c = l_shaped(Rect(2, 2));
  const auto grid = sumset(c.basis, Rect(2, 2));
  CHECK(grid.gap_count() == 0);
  for (int y = 0; y <= 2; ++y)
    for (int x = 0; x <= 2; ++x) CHECK(grid.covered({x, y}));
}

TEST_CASE("sumset covers the 6-square from the boundary basis") {
  const auto c = boundary(Rect(6, 6));
  REQUIRE(c.basis.size() == 12);
  const auto grid = sumset(c.basis, Rect(6, 6));
  CHECK(grid.gap_count() == 0);
}

TEST_CASE("covers examples") {
  CHECK(covers(basis_of({{0, 0}, {1, 0}}), Rect(2, 0)));
  CHECK_FALSE(covers(basis_of({{0, 0}, {2, 0}}), Rect(2, 0)));
  CHECK(covers(basis_of({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), Rect(2, 2)));
}

TEST_CASE("gap_count examples") {
  CHECK(gap_count(sumset(basis_of({{0, 0}}), Rect(1, 1))) == 3);
  CHECK(gap_count(sumset(basis_of({{0, 0}, {1, 0}}), Rect(1, 1))) == 2);
  CHECK(gap_count(sumset(basis_of({{0, 0}, {1, 0}, {0, 1}}), Rect(1, 1))) == 0);
}

TEST_CASE("classify flags") {
  SUBCASE("boundary basis of the 6-square") {
    const auto c = boundary(Rect(6, 6));
    const auto f = classify(c.basis, Rect(6, 6));
    CHECK(f.admissible);
    CHECK(f.restricted);
    CHECK(f.is_basis);
    CHECK(f.exact);
  }
  SUBCASE("L-shaped basis of the 2x2 square is not exact") {
    const auto c = l_shaped(Rect(2, 2));
    const auto f = classify(c.basis, Rect(2, 2));
    CHECK(f.admissible);
    CHECK_FALSE(f.restricted);
    CHECK(f.is_basis);
    CHECK_FALSE(f.exact);
  }
  SUBCASE("points outside the rect are not admissible") {
    const auto f = classify(basis_of({{0, 0}, {3, 0}}), Rect(2, 0));
    CHECK_FALSE(f.admissible);
  }
  SUBCASE("restricted is reported false for odd dimensions") {
    const auto f = classify(basis_of({{0, 0}}), Rect(1, 1));
    CHECK_FALSE(f.restricted);
  }
}

TEST_CASE("sumset is invariant under input permutation") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto pts = random_points(rng, 8, 6);
    const Rect rect(9, 9);
    const auto a = sumset(Basis(pts), rect);
    std::shuffle(pts.begin(), pts.end(), rng);
    CoverageGrid b(rect);
    for (Point p : Basis(pts)) b.place(p);
    // compare cell by cell
    REQUIRE(a.counts().size() == b.counts().size());
    for (std::size_t i = 0; i < a.counts().size(); ++i)
      CHECK(a.counts()[i] == b.counts()[i]);
  }
}

TEST_CASE("coverage is monotone under adding points") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto pts = random_points(rng, 6, 5);
    const Basis small(std::vector<Point>(pts.begin(), pts.begin() + 3));
    const Basis big(pts);
    const Rect rect(8, 8);
    const auto gs = sumset(small, rect);
    const auto gb = sumset(big, rect);
    for (int y = 0; y <= rect.sy; ++y)
      for (int x = 0; x <= rect.sx; ++x)
        if (gs.covered({x, y})) CHECK(gb.covered({x, y}));
  }
}

TEST_CASE("total representation count over the whole plane is k(k+1)/2") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Basis a(random_points(rng, 7, 10));
    // a rect big enough that no sum is clipped
    const auto grid = sumset(a, Rect(40, 40));
    std::int64_t total = 0;
    for (auto c : grid.counts()) total += c;
    const std::int64_t k = static_cast<std::int64_t>(a.size());
    CHECK(total == k * (k + 1) / 2);
    // the in-rect total never exceeds that
    const auto small = sumset(a, Rect(6, 6));
    std::int64_t clipped = 0;
    for (auto c : small.counts()) clipped += c;
    CHECK(clipped <= total);
  }
}

TEST_CASE("restricted bases are exact") {
  // every restricted basis satisfies A+A = R
  const auto c = boundary(Rect(8, 4));
  const auto f = classify(c.basis, Rect(8, 4));
  REQUIRE(f.restricted);
  CHECK(f.exact);
  // and any subset of the half rect keeps sums inside the rect
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> dx(0, 4), dy(0, 2);
    std::vector<Point> pts{{0, 0}};
    for (int i = 0; i < 6; ++i) pts.push_back({dx(rng), dy(rng)});
    CHECK(classify(Basis(pts), Rect(8, 4)).exact);
  }
}

TEST_CASE("place then remove restores the grid bit for bit") {
  std::mt19937 rng(19);
  const Rect rect(7, 5);
  CoverageGrid grid(rect);
  const auto pts = random_points(rng, 6, 7);
  const Basis a(pts);
  for (Point p : a) grid.place(p);
  const std::vector<std::uint32_t> before(grid.counts().begin(),
                                          grid.counts().end());
  const auto gaps_before = grid.gap_count();

  grid.place({3, 2});
  grid.remove({3, 2});

  CHECK(grid.gap_count() == gaps_before);
  REQUIRE(grid.counts().size() == before.size());
  for (std::size_t i = 0; i < before.size(); ++i)
    CHECK(grid.counts()[i] == before[i]);
  CHECK_THROWS_AS(grid.remove({100, 100}), std::invalid_argument);
}
