#include "planar/symmetry.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace planar {

namespace {

constexpr std::array<Transform, 4> kRectGroup = {
    Transform::kIdentity,
    Transform::kMirrorX,
    Transform::kMirrorY,
    Transform::kRotate180,
};

constexpr std::array<Transform, 8> kSquareGroup = {
    Transform::kIdentity,
    Transform::kMirrorX,
    Transform::kMirrorY,
    Transform::kRotate180,
    Transform::kTranspose,
    Transform::kTransposeMirrorX,
    Transform::kTransposeMirrorY,
    Transform::kTransposeRotate180,
};

Point apply_point(Point p, Transform t, Rect box) {
  switch (t) {
    case Transform::kIdentity:
      return p;
    case Transform::kMirrorX:
      return mirror_x(p, box.sx);
    case Transform::kMirrorY:
      return mirror_y(p, box.sy);
    case Transform::kRotate180:
      return rotate_180(p, box.sx, box.sy);
    case Transform::kTranspose:
      return transpose(p);
    case Transform::kTransposeMirrorX:
      return mirror_x(transpose(p), box.sx);
    case Transform::kTransposeMirrorY:
      return mirror_y(transpose(p), box.sy);
    case Transform::kTransposeRotate180:
      return rotate_180(transpose(p), box.sx, box.sy);
  }
  throw std::logic_error("unknown transform");
}

Rect mode_box(Rect rect, SymmetryMode mode) {
  if (mode == SymmetryMode::kFullRect) return rect;
  if (!rect.even_dims()) {
    throw std::invalid_argument(
        "half-rect symmetry requires even dimensions, got " + to_string(rect));
  }
  return rect.half();
}

}  // namespace

Basis apply_transform(const Basis& a, Transform t, Rect box) {
  std::vector<Point> pts;
  pts.reserve(a.size());
  for (Point p : a) pts.push_back(apply_point(p, t, box));
  return Basis(std::move(pts));
}

std::span<const Transform> group_for(Rect box) {
  if (box.square()) return kSquareGroup;
  return kRectGroup;
}

Basis canonical(const Basis& a, Rect rect, SymmetryMode mode) {
  const Rect box = mode_box(rect, mode);
  Basis best = a;
  for (Transform t : group_for(box)) {
    if (t == Transform::kIdentity) continue;
    Basis image = apply_transform(a, t, box);
    if (image < best) best = std::move(image);
  }
  return best;
}

std::uint64_t count_unique(std::span<const Basis> solutions, Rect rect,
                           SymmetryMode mode) {
  std::set<Basis> forms;
  for (const Basis& a : solutions) forms.insert(canonical(a, rect, mode));
  return forms.size();
}

}  // namespace planar
