#ifndef PLANAR_MIM_HPP
#define PLANAR_MIM_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "planar/geometry.hpp"
#include "planar/search.hpp"

namespace planar {

class KminCache;

/// Decomposition of the half rectangle into four corner components. The
/// breaking point (a_x, a_y) is fixed at (floor(h_x/2), floor(h_y/2)) so the
/// components have roughly equal dimensions.
struct QuadrantPlan {
  Rect rect;  // full target
  int hx = 0, hy = 0;
  int ax = 0, ay = 0;  // component I spans [0,a_x] x [0,a_y]
  int bx = 0, by = 0;  // b = h - a - 1
  Rect component[4];   // I, II, III, IV in local (pre-mirror) coordinates
  int k_min[4] = {0, 0, 0, 0};
  std::int64_t cells[4] = {0, 0, 0, 0};

  int k_min_sum() const {
    return k_min[0] + k_min[1] + k_min[2] + k_min[3];
  }
};

/// How k elements are split among the four components.
struct Allocation {
  int k_i = 0, k_ii = 0, k_iii = 0, k_iv = 0;
  int sum() const { return k_i + k_ii + k_iii + k_iv; }
  friend bool operator==(const Allocation&, const Allocation&) = default;
};

struct AllocationStats {
  Allocation alloc;
  std::uint64_t raw_combinations = 0;  // product of list sizes, 0 if unknown
  std::uint64_t first_pairs_kept = 0;
  std::uint64_t second_pairs_kept = 0;
  std::uint64_t full_checks = 0;
  std::uint64_t found = 0;
  bool pruned_after_first_pair = false;
};

struct MimStats {
  std::vector<AllocationStats> allocations;
};

/// Memoized admissible-basis lists keyed by (component dims, k); identical
/// component rectangles recur across allocations and across k sweeps.
class ComponentListCache {
 public:
  std::shared_ptr<const std::vector<Basis>> get(Rect comp, int k,
                                                const SearchConfig& base);

 private:
  std::map<std::tuple<int, int, int>,
           std::shared_ptr<const std::vector<Basis>>>
      lists_;
};

struct MimOptions {
  SearchConfig base;  // traversal order / threads / prune flags for components
  KminCache* kmin_cache = nullptr;
  ComponentListCache* lists = nullptr;  // optional cross-call memo
  bool pair_prune = true;               // neighboring-pair strip pruning
  MimStats* stats = nullptr;
};

QuadrantPlan plan_quadrants(Rect rect, const SearchConfig& base = {},
                            KminCache* cache = nullptr);

/// True iff the union of the two (already mirrored, absolute-coordinate)
/// neighboring components covers the boundary strip by its own sums. A
/// failure rules out every glued solution containing the pair.
bool pair_glue_check(const Basis& a_left, const Basis& a_right, Rect strip);

/// All restricted k-bases of rect, assembled by gluing four admissible
/// corner-component bases. Requires even dimensions and h_x, h_y >= 1.
SearchReport mim_find(int k, Rect rect, const MimOptions& opts = {});

/// Smallest k with restricted solutions, sweeping upward from the sum of the
/// component minima. Degenerate shapes (h_x = 0 or h_y = 0) fall back to the
/// direct restricted search.
MinKResult min_k_restricted(Rect rect, const MimOptions& opts = {});

}  // namespace planar

#endif  // PLANAR_MIM_HPP
