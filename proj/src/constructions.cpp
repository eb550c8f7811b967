#include "planar/constructions.hpp"

#include <stdexcept>
#include <vector>

namespace planar {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_size(const Basis& basis, std::int64_t n, const char* what) {
  if (static_cast<std::int64_t>(basis.size()) != n) {
    throw std::logic_error(std::string(what) +
                           ": size formula violated after deduplication");
  }
}

}  // namespace

Construction l_shaped(Rect rect) {
  std::vector<Point> pts;
  pts.reserve(rect.sx + rect.sy + 1);
  for (int x = 0; x <= rect.sx; ++x) pts.push_back({x, 0});
  for (int y = 0; y <= rect.sy; ++y) pts.push_back({0, y});
  Basis basis{std::move(pts)};
  check_size(basis, static_cast<std::int64_t>(rect.sx) + rect.sy + 1, "l_shaped");
  return {std::move(basis), rect};
}

Construction boundary(Rect rect) {
  require(rect.even_dims() && rect.sx >= 2 && rect.sy >= 2,
          "boundary basis requires even dimensions >= 2");
  const int hx = rect.sx / 2;
  const int hy = rect.sy / 2;
  std::vector<Point> pts;
  for (int x = 0; x <= hx; ++x) {
    pts.push_back({x, 0});
    pts.push_back({x, hy});
  }
  for (int y = 0; y <= hy; ++y) {
    pts.push_back({0, y});
    pts.push_back({hx, y});
  }
  Basis basis{std::move(pts)};
  check_size(basis, static_cast<std::int64_t>(rect.sx) + rect.sy, "boundary");
  return {std::move(basis), rect};
}

Construction dense_sparse(int t_x, int t_y) {
  require(t_x >= 1 && t_y >= 1, "dense_sparse requires t_x, t_y >= 1");
  std::vector<Point> pts;
  for (int y = 0; y < t_y; ++y)
    for (int x = 0; x < t_x; ++x) pts.push_back({x, y});
  for (int cy = 0; cy <= t_y * t_y - t_y; cy += t_y)
    for (int cx = 0; cx <= t_x * t_x - t_x; cx += t_x) pts.push_back({cx, cy});
  Basis basis{std::move(pts)};
  check_size(basis, 2LL * t_x * t_y - 1, "dense_sparse");
  return {std::move(basis), Rect(t_x * t_x - 1, t_y * t_y - 1)};
}

Construction short_bars(int t_x, int t_y) {
  require(t_x >= 1 && t_y >= 1, "short_bars requires t_x, t_y >= 1");
  std::vector<Point> pts;
  for (int by = 0; by <= t_y * t_y - t_y; by += t_y)
    for (int x = 0; x < t_x; ++x) pts.push_back({x, by});
  for (int cx = 0; cx <= t_x * t_x - t_x; cx += t_x)
    for (int y = 0; y < t_y; ++y) pts.push_back({cx, y});
  Basis basis{std::move(pts)};
  check_size(basis, 2LL * t_x * t_y - 1, "short_bars");
  return {std::move(basis), Rect(t_x * t_x - 1, t_y * t_y - 1)};
}

Construction stacked_mrose(int s_y, int t) {
  require(s_y >= 0 && t >= 1, "stacked_mrose requires s_y >= 0 and t >= 1");
  const std::int64_t a = 4LL * s_y + 3;
  const std::int64_t t2 = static_cast<std::int64_t>(t) * t;
  const std::int64_t s_x = (16LL * s_y + 14) * t2 - 1;
  require(s_x <= kCoordMax, "stacked_mrose target exceeds coordinate range");

  std::vector<Point> pts;
  auto column = [&](std::int64_t x) {
    for (int y = 0; y <= s_y; ++y)
      pts.push_back({static_cast<int>(x), y});
  };
  // I_1, I_2, I_3: intervals of t+1 columns at 0, 2at^2, (3a+1)t^2.
  for (std::int64_t x = 0; x <= t; ++x) column(x);
  for (std::int64_t x = 2 * a * t2; x <= 2 * a * t2 + t; ++x) column(x);
  for (std::int64_t x = (3 * a + 1) * t2; x <= (3 * a + 1) * t2 + t; ++x)
    column(x);
  // T: t-step progression on the bottom row.
  for (std::int64_t x = 0; x <= a * t2 - t; x += t)
    pts.push_back({static_cast<int>(x), 0});
  // S: sparse (t+1)-step progression, all rows.
  for (std::int64_t x = a * t2; x <= (a + 1) * t2 - 1; x += t + 1) column(x);

  Basis basis{std::move(pts)};
  check_size(basis, (8LL * s_y + 7) * t + 3LL * s_y + 1, "stacked_mrose");
  return {std::move(basis), Rect(static_cast<int>(s_x), s_y)};
}

std::int64_t trivial_size(Rect rect) {
  if (rect.sy == 0) return (rect.sx + 1) / 2 + 1;
  if (rect.sx == 0) return (rect.sy + 1) / 2 + 1;
  if (rect.even_dims()) return static_cast<std::int64_t>(rect.sx) + rect.sy;
  return static_cast<std::int64_t>(rect.sx) + rect.sy + 1;
}

}  // namespace planar
