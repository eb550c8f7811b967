#include "planar/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "planar/constructions.hpp"
#include "planar/mim.hpp"

namespace planar {

EfficiencyReport efficiency(int k, Rect rect) {
  if (k < 1) throw std::invalid_argument("efficiency: k must be >= 1");
  EfficiencyReport r;
  r.rect = rect;
  r.k = k;
  r.area = rect.area();
  r.trivial_k = trivial_size(rect);
  r.delta_k = k - r.trivial_k;
  r.c_num = r.area;
  r.c_den = static_cast<std::int64_t>(k) * k;
  return r;
}

int counting_lower_bound(Rect rect) {
  const std::int64_t n = rect.area();
  // Smallest k with k(k+1)/2 >= N. Start from the real root and fix up.
  int k = static_cast<int>((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0);
  if (k < 1) k = 1;
  while (static_cast<std::int64_t>(k) * (k + 1) / 2 >= n && k > 1) --k;
  while (static_cast<std::int64_t>(k) * (k + 1) / 2 < n) ++k;
  return k;
}

double upper_bound_constant(int height, bool restricted) {
  const double a = kAlphaUnrestricted;
  const double b = kBetaRestricted;
  if (!restricted && height == 1) {
    // rows: s_x <= alpha*k0^2 and s_x <= k0*k1; optimum at k1 = alpha*k0.
    return 2.0 * a / ((1.0 + a) * (1.0 + a));
  }
  if (!restricted && height == 2) {
    const double d = 1.0 + 2.0 * a - a * a / 2.0;
    return 3.0 * a / (d * d);
  }
  if (restricted && height == 2) {
    // k*(s_x,2) = 2 k*(s_x,0) and s_x <= beta*k0^2, so
    // c = 3(s_x+1)/(2 k0)^2 -> 3*beta/4.
    return 3.0 * b / 4.0;
  }
  if (restricted && height == 4) {
    const double d = 2.0 + b;
    return 5.0 * b / (d * d);
  }
  throw std::invalid_argument(
      "no closed-form bound for height " + std::to_string(height) +
      (restricted ? " restricted" : " unrestricted"));
}

std::vector<BoundSweepRow> empirical_bound_check(int height, bool restricted,
                                                 int s_x_max,
                                                 const SearchConfig& base,
                                                 KminCache* cache) {
  if (height != 1 && height != 2 && height != 4) {
    throw std::invalid_argument("empirical_bound_check: height must be 1, 2 or 4");
  }
  const double bound = upper_bound_constant(height, restricted);
  std::vector<BoundSweepRow> rows;
  const int step = restricted ? 2 : 1;
  for (int sx = restricted ? 2 : 1; sx <= s_x_max; sx += step) {
    const Rect rect(sx, height);
    int k = 0;
    if (restricted) {
      MimOptions opts;
      opts.base = base;
      opts.kmin_cache = cache;
      k = min_k_restricted(rect, opts).k;
    } else {
      k = min_k(rect, false, base, cache).k;
    }
    BoundSweepRow row;
    row.s_x = sx;
    row.k = k;
    row.area = rect.area();
    row.c = static_cast<double>(row.area) / (static_cast<double>(k) * k);
    row.bound = bound;
    row.exceeds = row.c > bound;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace planar
