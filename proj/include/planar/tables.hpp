#ifndef PLANAR_TABLES_HPP
#define PLANAR_TABLES_HPP

#include <string>

#include "planar/search.hpp"

namespace planar {

class KminCache;

// CSV result listings. Output depends only
// on the solution sets, so it is byte-stable across runs and thread counts.

/// "s,k,m,m_u" for squares 0..max_s.
std::string table_squares(int max_s, const SearchConfig& base = {},
                          KminCache* cache = nullptr);

/// "s,k_star,m,m_u" for even squares 0..max_s (restricted, via MIM).
std::string table_squares_restricted(int max_s, const SearchConfig& base = {},
                                     KminCache* cache = nullptr);

/// "s_x,s_y,k,delta_k,m_u" for all rectangles with s_y <= s_x <= max_sx.
std::string table_rects(int max_sx, const SearchConfig& base = {},
                        KminCache* cache = nullptr);

/// "s_x,s_y,k_star,delta_k,m_u" for even rectangles, s_y <= s_x <= max_sx.
std::string table_rects_restricted(int max_sx, const SearchConfig& base = {},
                                   KminCache* cache = nullptr);

/// "s_x,k_star,m_u" for height-2 restricted strips, even s_x in [2, max_sx].
std::string table_sy2_restricted(int max_sx, const SearchConfig& base = {},
                                 KminCache* cache = nullptr);

}  // namespace planar

#endif  // PLANAR_TABLES_HPP
