#ifndef PLANAR_SEARCH_HPP
#define PLANAR_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "planar/geometry.hpp"

namespace planar {

class KminCache;

enum class TraversalOrder {
  kRowwise,    // bottom row left to right, then the next row, ...
  kEdgeFirst,  // row 0, column 0, row 1, column 1, ... (default: ~37% faster)
};

struct SearchConfig {
  int k = 0;
  Rect rect;
  TraversalOrder order = TraversalOrder::kEdgeFirst;
  bool restricted = false;
  // Decisions past the seed after which subtrees become parallel work units.
  int parallel_depth = 14;
  int threads = 1;  // 0 = hardware concurrency
  bool count_only = false;
  // Test hooks; disabling either prune never changes the solution set.
  bool prune_holes = true;
  bool prune_counting = true;
};

struct SearchReport {
  int k = 0;
  Rect rect;
  bool restricted = false;
  std::vector<Basis> solutions;      // canonically sorted; empty if count_only
  std::uint64_t solution_count = 0;  // m
  std::uint64_t unique_count = 0;    // m_u (0 when count_only)
  std::uint64_t nodes_visited = 0;
  double wall_seconds = 0.0;
};

/// All admissible k-element bases of cfg.rect (branch and bound; the search
/// is seeded with {(0,0),(1,0)} since those are forced whenever s_x >= 1).
/// Rects with s_x < s_y are solved transposed and mapped back.
SearchReport find_bases(const SearchConfig& cfg);

/// All restricted k-bases, enumerated directly over the half rectangle.
/// Requires even dimensions. Cross-check oracle for the MIM method and the
/// workhorse for degenerate shapes (height 0) MIM cannot decompose.
SearchReport find_bases_restricted_direct(const SearchConfig& cfg);

struct MinKResult {
  int k = 0;
  SearchReport report;
};

/// Smallest k with a non-empty search, sweeping k upward from the counting
/// lower bound. A cache hit on (rect, restricted) skips the empty sweeps.
MinKResult min_k(Rect rect, bool restricted = false,
                 const SearchConfig& base = {}, KminCache* cache = nullptr);

}  // namespace planar

#endif  // PLANAR_SEARCH_HPP
