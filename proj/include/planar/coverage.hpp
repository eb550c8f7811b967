#ifndef PLANAR_COVERAGE_HPP
#define PLANAR_COVERAGE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "planar/geometry.hpp"

namespace planar {

/// Dense multiplicity grid over a target rectangle. Each cell counts the
/// unordered pairs {a,b} of placed points (a = b allowed) with a+b on that
/// cell; sums landing outside the rectangle are discarded. place/remove are
/// O(points placed), which is what makes backtracking search cheap.
///
/// Single-owner mutable: one grid per search worker, never shared.
class CoverageGrid {
 public:
  explicit CoverageGrid(Rect rect);

  const Rect& rect() const { return rect_; }
  std::int64_t gap_count() const { return gaps_; }
  bool covers_rect() const { return gaps_ == 0; }

  std::uint32_t count_at(Point p) const {
    return rect_.contains(p) ? counts_[cell(p)] : 0;
  }
  bool covered(Point p) const { return count_at(p) > 0; }

  /// Adds p to the support and accounts for every new pair sum {p,q},
  /// q in support (including q = p). Points may lie outside the rect.
  void place(Point p);
  /// Exact inverse of place(p); p must be in the support.
  void remove(Point p);

  std::size_t placed() const { return pts_.size(); }
  std::span<const Point> support() const { return pts_; }
  std::span<const std::uint32_t> counts() const { return counts_; }

 private:
  int cell(Point p) const { return p.y * width_ + p.x; }

  Rect rect_;
  int width_;
  std::int64_t gaps_;
  std::vector<std::uint32_t> counts_;
  std::vector<Point> pts_;
  // Hot copies of the support coordinates for the pair-sum loops.
  std::vector<std::int32_t> xs_;
  std::vector<std::int32_t> ys_;
};

struct Classification {
  bool admissible = false;  // A subset of rect
  bool restricted = false;  // A subset of half rect (even dims only)
  bool is_basis = false;    // A+A covers rect
  bool exact = false;       // no pair sum falls outside rect
};

/// Multiplicity grid of (A+A) clipped to rect.
CoverageGrid sumset(const Basis& a, Rect rect);

/// True iff A+A covers every cell of rect.
bool covers(const Basis& a, Rect rect);

std::int64_t gap_count(const CoverageGrid& grid);

Classification classify(const Basis& a, Rect rect);

}  // namespace planar

#endif  // PLANAR_COVERAGE_HPP
