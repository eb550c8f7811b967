#ifndef PLANAR_RENDER_HPP
#define PLANAR_RENDER_HPP

#include <string>

#include "planar/geometry.hpp"

namespace planar {

/// (s_y+1)-row dot grid with the origin at the lower left; basis points
/// print as a filled dot.
std::string render_ascii(const Basis& a, Rect rect);

/// {"rect":[sx,sy],"k":n,"points":[[x,y],...],"flags":{...}} with points in
/// canonical (y,x) order; parse_basis inverts it exactly.
std::string render_json(const Basis& a, Rect rect);

/// One "x,y" line per point.
std::string render_csv(const Basis& a);

/// One basis per line for solution files: a bare JSON array [[x,y],...].
std::string solution_line(const Basis& a);

/// Accepts either the render_json object form or the bare array form.
Basis parse_basis(const std::string& text);

/// "x,y;x,y;..." command-line form.
Basis parse_points_arg(const std::string& text);

}  // namespace planar

#endif  // PLANAR_RENDER_HPP
