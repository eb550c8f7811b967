#ifndef PLANAR_GEOMETRY_HPP
#define PLANAR_GEOMETRY_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace planar {

// Coordinates live in [0, kCoordMax]; large enough for stacked-Mrose
// instances (s_x into the thousands) with plenty of headroom.
inline constexpr int kCoordMax = 65535;

struct Point {
  int x = 0;
  int y = 0;

  // Canonical order is (y, x); Basis and all rendering rely on it.
  friend constexpr auto operator<=>(const Point& a, const Point& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
  friend constexpr bool operator==(const Point&, const Point&) = default;
};

constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }

bool valid_coords(Point p);

/// Target rectangle [0,s_x] x [0,s_y], identified by its far corner.
struct Rect {
  int sx = 0;
  int sy = 0;

  Rect() = default;
  Rect(int s_x, int s_y);

  int width() const { return sx + 1; }
  int height() const { return sy + 1; }
  std::int64_t area() const {
    return static_cast<std::int64_t>(width()) * height();
  }
  bool contains(Point p) const {
    return p.x >= 0 && p.y >= 0 && p.x <= sx && p.y <= sy;
  }
  bool even_dims() const { return sx % 2 == 0 && sy % 2 == 0; }
  bool square() const { return sx == sy; }
  Rect transposed() const { return Rect(sy, sx); }
  // Half rectangle [0,s_x/2] x [0,s_y/2]; only defined for even dims.
  Rect half() const;

  friend constexpr bool operator==(const Rect&, const Rect&) = default;
  friend constexpr auto operator<=>(const Rect&, const Rect&) = default;
};

std::string to_string(Rect r);  // "SxS", e.g. "7x3"
Rect parse_rect(const std::string& text);

/// A finite duplicate-free point set in canonical (y,x) order.
/// Equality is structural; the constructor sorts and deduplicates.
class Basis {
 public:
  Basis() = default;
  explicit Basis(std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  std::span<const Point> points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  bool contains(Point p) const;

  friend bool operator==(const Basis&, const Basis&) = default;
  friend auto operator<=>(const Basis& a, const Basis& b) {
    return std::lexicographical_compare_three_way(
        a.points_.begin(), a.points_.end(), b.points_.begin(),
        b.points_.end());
  }

 private:
  std::vector<Point> points_;
};

// Point transforms about a bounding box [0,bx] x [0,by]. The box is the
// full rect for ordinary bases and the half rect for restricted ones.
constexpr Point mirror_x(Point p, int bx) { return {bx - p.x, p.y}; }
constexpr Point mirror_y(Point p, int by) { return {p.x, by - p.y}; }
constexpr Point rotate_180(Point p, int bx, int by) {
  return {bx - p.x, by - p.y};
}
constexpr Point transpose(Point p) { return {p.y, p.x}; }

Basis transposed(const Basis& a);

}  // namespace planar

#endif  // PLANAR_GEOMETRY_HPP
