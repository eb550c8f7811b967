#ifndef PLANAR_CONSTRUCTIONS_HPP
#define PLANAR_CONSTRUCTIONS_HPP

#include <cstdint>

#include "planar/geometry.hpp"

namespace planar {

/// A generated basis together with the rectangle it targets. For the
/// parametric families the rectangle is implied by the parameters, so
/// returning both keeps callers from pairing a basis with the wrong target.
struct Construction {
  Basis basis;
  Rect target;
};

/// Bottom edge plus left edge; s_x+s_y+1 elements, works for any rect.
Construction l_shaped(Rect rect);

/// Boundary of the half rectangle; s_x+s_y elements, restricted.
/// Requires both dimensions even and >= 2.
Construction boundary(Rect rect);

/// Dense block B = [0,t_x-1] x [0,t_y-1] plus sparse lattice
/// C = {0,t_x,...,t_x^2-t_x} x {0,t_y,...,t_y^2-t_y}; 2*t_x*t_y - 1 elements
/// covering [0,t_x^2-1] x [0,t_y^2-1].
Construction dense_sparse(int t_x, int t_y);

/// Same size and target as dense_sparse, with the roles of the axes mixed:
/// B = [0,t_x-1] x {0,t_y,...}, C = {0,t_x,...} x [0,t_y-1].
Construction short_bars(int t_x, int t_y);

/// Constant-height construction whose efficiency exceeds 1/4: three stacked
/// intervals, a t-step progression and a sparse (t+1)-step progression.
/// (8*s_y+7)*t + 3*s_y+1 elements covering [0,(16*s_y+14)*t^2-1] x [0,s_y].
Construction stacked_mrose(int s_y, int t);

/// Size of the best applicable trivial solution: the boundary basis for
/// even dims, a one-dimensional basis of ceil(s_x/2)+1 elements for height
/// zero (transposed for width zero), the L-shaped basis otherwise.
std::int64_t trivial_size(Rect rect);

}  // namespace planar

#endif  // PLANAR_CONSTRUCTIONS_HPP
