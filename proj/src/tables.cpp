#include "planar/tables.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>

#include "planar/bounds.hpp"
#include "planar/cache.hpp"
#include "planar/constructions.hpp"
#include "planar/mim.hpp"

namespace planar {

namespace {

std::string row(std::initializer_list<std::int64_t> cells) {
  std::string line;
  bool first = true;
  for (std::int64_t v : cells) {
    if (!first) line += ',';
    line += std::to_string(v);
    first = false;
  }
  line += '\n';
  return line;
}

MinKResult restricted_minimum(Rect rect, const SearchConfig& base,
                              KminCache* cache) {
  MimOptions opts;
  opts.base = base;
  opts.kmin_cache = cache;
  return min_k_restricted(rect, opts);
}

}  // namespace

std::string table_squares(int max_s, const SearchConfig& base,
                          KminCache* cache) {
  std::string out = "s,k,m,m_u\n";
  for (int s = 0; s <= max_s; ++s) {
    const auto r = min_k(Rect(s, s), false, base, cache);
    out += row({s, r.k, static_cast<std::int64_t>(r.report.solution_count),
                static_cast<std::int64_t>(r.report.unique_count)});
  }
  return out;
}

std::string table_squares_restricted(int max_s, const SearchConfig& base,
                                     KminCache* cache) {
  std::string out = "s,k_star,m,m_u\n";
  for (int s = 0; s <= max_s; s += 2) {
    const auto r = restricted_minimum(Rect(s, s), base, cache);
    out += row({s, r.k, static_cast<std::int64_t>(r.report.solution_count),
                static_cast<std::int64_t>(r.report.unique_count)});
  }
  return out;
}

std::string table_rects(int max_sx, const SearchConfig& base,
                        KminCache* cache) {
  std::string out = "s_x,s_y,k,delta_k,m_u\n";
  for (int sx = 0; sx <= max_sx; ++sx) {
    for (int sy = 0; sy <= sx; ++sy) {
      const Rect rect(sx, sy);
      const auto r = min_k(rect, false, base, cache);
      out += row({sx, sy, r.k, r.k - trivial_size(rect),
                  static_cast<std::int64_t>(r.report.unique_count)});
    }
  }
  return out;
}

std::string table_rects_restricted(int max_sx, const SearchConfig& base,
                                   KminCache* cache) {
  std::string out = "s_x,s_y,k_star,delta_k,m_u\n";
  for (int sx = 0; sx <= max_sx; sx += 2) {
    for (int sy = 0; sy <= sx; sy += 2) {
      const Rect rect(sx, sy);
      const auto r = restricted_minimum(rect, base, cache);
      out += row({sx, sy, r.k, r.k - trivial_size(rect),
                  static_cast<std::int64_t>(r.report.unique_count)});
    }
  }
  return out;
}

std::string table_sy2_restricted(int max_sx, const SearchConfig& base,
                                 KminCache* cache) {
  std::string out = "s_x,k_star,m_u\n";
  for (int sx = 2; sx <= max_sx; sx += 2) {
    const auto r = restricted_minimum(Rect(sx, 2), base, cache);
    out += row({sx, r.k, static_cast<std::int64_t>(r.report.unique_count)});
  }
  return out;
}

}  // namespace planar
