#pragma once

#include "pnconv/distribution.hpp"
#include "pnconv/tnorm.hpp"

namespace pnconv {

/// Grid-computable triangle functions on distance distribution functions.
enum class TriangleKind {
    SupConv,      // x -> sup { T(F(u), G(v)) : u + v = x }
    InfConvDual,  // x -> inf { T*(F(u), G(v)) : u + v = x }
    Pointwise,    // x -> T(F(x), G(x))
};

/// Discretized triangle function on a shared support grid.
///
/// The sup/inf over u + v = x is replaced by a max/min over index-aligned grid
/// pairs (t_j, t_{i-j}); on a uniform grid these pairs satisfy u + v = t_i
/// exactly. After the pairwise pass a running-maximum repair makes the output
/// a valid distribution function again; the largest adjustment is reported
/// through max_repair when non-null.
///
/// Requires F and G to share the support grid (shape error otherwise) and to
/// be distance d.f.'s (value 0 at t = 0).
GridDistribution triangle_eval(TriangleKind kind, const GridDistribution& f,
                               const GridDistribution& g, const TNorm& t,
                               double* max_repair = nullptr);

} // namespace pnconv
