#ifndef PLANAR_BOUNDS_HPP
#define PLANAR_BOUNDS_HPP

#include <cstdint>
#include <vector>

#include "planar/geometry.hpp"
#include "planar/search.hpp"

namespace planar {

// One-dimensional asymptotic constants, taken as given:
// s_x / k(s_x,0)^2 <= alpha and s_x / k*(s_x,0)^2 <= beta for s_x large.
inline constexpr double kAlphaUnrestricted = 0.45851;
inline constexpr double kBetaRestricted = 0.41983;

/// Efficiency c = N/k^2 kept as an exact integer ratio, plus the trivial-size
/// comparison delta_k = k - k_t.
struct EfficiencyReport {
  Rect rect;
  int k = 0;
  std::int64_t area = 0;       // N = (s_x+1)(s_y+1)
  std::int64_t trivial_k = 0;  // k_t
  std::int64_t delta_k = 0;    // k - k_t
  std::int64_t c_num = 0;      // N
  std::int64_t c_den = 0;      // k^2

  double c() const { return static_cast<double>(c_num) / c_den; }
  double aspect_ratio() const {
    return static_cast<double>(rect.sy + 1) / (rect.sx + 1);
  }
};

EfficiencyReport efficiency(int k, Rect rect);

/// Least k with k(k+1)/2 >= N; no basis for rect can be smaller.
int counting_lower_bound(Rect rect);

/// Asymptotic efficiency upper bounds for constant-height strips:
///   height 1            2*alpha / (1+alpha)^2            -> 0.4311
///   height 2            3*alpha / (1+2*alpha-alpha^2/2)^2 -> 0.4190
///   height 2 restricted 3*beta / 4                        -> 0.3149
///   height 4 restricted 5*beta / (2+beta)^2               -> 0.3585
/// Throws on any other (height, restricted) combination.
double upper_bound_constant(int height, bool restricted);

struct BoundSweepRow {
  int s_x = 0;
  int k = 0;
  std::int64_t area = 0;
  double c = 0.0;
  double bound = 0.0;
  bool exceeds = false;  // small-size exception; the bounds are asymptotic
};

/// Finite-size sweep of minimal-basis efficiencies against the asymptotic
/// constant. Violations at small s_x are reported, not errors.
std::vector<BoundSweepRow> empirical_bound_check(int height, bool restricted,
                                                 int s_x_max,
                                                 const SearchConfig& base = {},
                                                 KminCache* cache = nullptr);

}  // namespace planar

#endif  // PLANAR_BOUNDS_HPP
