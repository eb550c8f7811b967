#include "planar/coverage.hpp"

#include <cassert>
#include <stdexcept>

namespace planar {

CoverageGrid::CoverageGrid(Rect rect)
    : rect_(rect),
      width_(rect.width()),
      gaps_(rect.area()),
      counts_(static_cast<std::size_t>(rect.area()), 0) {}

void CoverageGrid::place(Point p) {
  if (!valid_coords(p)) {
    throw std::invalid_argument("cannot place point with invalid coords");
  }
  pts_.push_back(p);
  xs_.push_back(p.x);
  ys_.push_back(p.y);
  const int n = static_cast<int>(xs_.size());
  const int px = p.x, py = p.y;
  const int sx = rect_.sx, sy = rect_.sy;
  const std::int32_t* xs = xs_.data();
  const std::int32_t* ys = ys_.data();
  std::int64_t newly = 0;
  for (int i = 0; i < n; ++i) {
    const int ux = xs[i] + px;
    const int uy = ys[i] + py;
    if (ux > sx || uy > sy) continue;
    const int c = uy * width_ + ux;
    newly += (counts_[c]++ == 0);
  }
  gaps_ -= newly;
}

void CoverageGrid::remove(Point p) {
  // Find the point; the search removes LIFO, so scan from the back.
  int at = -1;
  for (int i = static_cast<int>(pts_.size()) - 1; i >= 0; --i) {
    if (pts_[i] == p) {
      at = i;
      break;
    }
  }
  if (at < 0) {
    throw std::invalid_argument("remove: point is not in the support");
  }
  const int n = static_cast<int>(xs_.size());
  const int px = p.x, py = p.y;
  const int sx = rect_.sx, sy = rect_.sy;
  std::int64_t opened = 0;
  for (int i = 0; i < n; ++i) {
    const int ux = xs_[i] + px;
    const int uy = ys_[i] + py;
    if (ux > sx || uy > sy) continue;
    const int c = uy * width_ + ux;
    assert(counts_[c] > 0);
    opened += (--counts_[c] == 0);
  }
  gaps_ += opened;
  pts_.erase(pts_.begin() + at);
  xs_.erase(xs_.begin() + at);
  ys_.erase(ys_.begin() + at);
}

CoverageGrid sumset(const Basis& a, Rect rect) {
  CoverageGrid grid(rect);
  for (Point p : a) grid.place(p);
  return grid;
}

bool covers(const Basis& a, Rect rect) { return sumset(a, rect).covers_rect(); }

std::int64_t gap_count(const CoverageGrid& grid) { return grid.gap_count(); }

Classification classify(const Basis& a, Rect rect) {
  Classification out;
  out.admissible = true;
  for (Point p : a) {
    if (!rect.contains(p)) {
      out.admissible = false;
      break;
    }
  }
  out.restricted = false;
  if (rect.even_dims()) {
    const Rect half = rect.half();
    out.restricted = true;
    for (Point p : a) {
      if (!half.contains(p)) {
        out.restricted = false;
        break;
      }
    }
  }
  out.is_basis = covers(a, rect);
  out.exact = true;
  const auto pts = a.points();
  for (std::size_t i = 0; i < pts.size() && out.exact; ++i) {
    for (std::size_t j = i; j < pts.size(); ++j) {
      if (!rect.contains(pts[i] + pts[j])) {
        out.exact = false;
        break;
      }
    }
  }
  return out;
}

}  // namespace planar
