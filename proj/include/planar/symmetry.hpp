#ifndef PLANAR_SYMMETRY_HPP
#define PLANAR_SYMMETRY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "planar/geometry.hpp"

namespace planar {

/// Which box the symmetry group acts on: the full target rectangle, or the
/// half rectangle for restricted solutions (whose mirrors about the half box
/// are again restricted bases).
enum class SymmetryMode { kFullRect, kHalfRect };

/// The transforms mapping the domain box onto itself: identity, the two
/// mirrors and the 180-degree rotation; a square box adds the transpose
/// composites for a group of eight.
enum class Transform {
  kIdentity,
  kMirrorX,
  kMirrorY,
  kRotate180,
  kTranspose,
  kTransposeMirrorX,
  kTransposeMirrorY,
  kTransposeRotate180,
};

Basis apply_transform(const Basis& a, Transform t, Rect box);

/// Transforms applicable to the given box (4, or 8 when square).
std::span<const Transform> group_for(Rect box);

/// Lexicographically least image of A over the group; a total invariant of
/// the orbit. Half-rect mode requires even dimensions.
Basis canonical(const Basis& a, Rect rect, SymmetryMode mode);

/// Number of distinct canonical forms (the m_u statistic).
std::uint64_t count_unique(std::span<const Basis> solutions, Rect rect,
                           SymmetryMode mode);

}  // namespace planar

#endif  // PLANAR_SYMMETRY_HPP
