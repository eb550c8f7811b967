#include "planar/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace planar {

bool valid_coords(Point p) {
  return p.x >= 0 && p.y >= 0 && p.x <= kCoordMax && p.y <= kCoordMax;
}

Rect::Rect(int s_x, int s_y) : sx(s_x), sy(s_y) {
  if (sx < 0 || sy < 0 || sx > kCoordMax || sy > kCoordMax) {
    throw std::invalid_argument("rect dimensions out of range: " +
                                std::to_string(s_x) + "x" +
                                std::to_string(s_y));
  }
}

Rect Rect::half() const {
  if (!even_dims()) {
    throw std::invalid_argument("half rect requires even dimensions, got " +
                                to_string(*this));
  }
  return Rect(sx / 2, sy / 2);
}

std::string to_string(Rect r) {
  return std::to_string(r.sx) + "x" + std::to_string(r.sy);
}

Rect parse_rect(const std::string& text) {
  const auto sep = text.find('x');
  if (sep == std::string::npos) {
    throw std::invalid_argument("rect must look like WIDTHxHEIGHT, got '" +
                                text + "'");
  }
  std::size_t ax = 0, ay = 0;
  int sx = 0, sy = 0;
  try {
    sx = std::stoi(text.substr(0, sep), &ax);
    sy = std::stoi(text.substr(sep + 1), &ay);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rect '" + text + "'");
  }
  if (ax != sep || ay != text.size() - sep - 1) {
    throw std::invalid_argument("malformed rect '" + text + "'");
  }
  return Rect(sx, sy);
}

Basis::Basis(std::vector<Point> points) : points_(std::move(points)) {
  for (const Point& p : points_) {
    if (!valid_coords(p)) {
      throw std::invalid_argument("basis point out of range: (" +
                                  std::to_string(p.x) + "," +
                                  std::to_string(p.y) + ")");
    }
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool Basis::contains(Point p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

Basis transposed(const Basis& a) {
  std::vector<Point> pts;
  pts.reserve(a.size());
  for (Point p : a) pts.push_back(transpose(p));
  return Basis(std::move(pts));
}

}  // namespace planar
