#ifndef ATORIC_POLYGON_HPP
#define ATORIC_POLYGON_HPP

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "atoric/exactmath.hpp"
#include "atoric/kernels.hpp"
#include "atoric/pluecker.hpp"
#include "atoric/valuation.hpp"

namespace atoric {

/// rank(P_A * V_f) = 0, 1, 2 respectively.
enum class Classification { NotHypersurface, ToricHypersurface, AlmostToric };

std::string_view to_string(Classification c);

struct EdgeMatrix {
    IntMatrix E;
    Classification classification = Classification::NotHypersurface;
};

EdgeMatrix edge_matrix(const PlueckerData& pluecker, const ValuationMatrix& valuation);

/// Direction in which the projected edges are chained. `calibrated` walks
/// counterclockwise when P(c1, c2) > 0 and clockwise otherwise; `flipped` is
/// the opposite and yields the point reflection of the calibrated polygon.
enum class Orientation { calibrated, flipped };

inline Orientation opposite(Orientation o) {
    return o == Orientation::calibrated ? Orientation::flipped : Orientation::calibrated;
}

struct NewtonPolygon {
    /// Cyclically ordered; every coordinate attains 0 on some vertex.
    std::vector<IntVector> vertices;
    /// edges[k] = vertices[k+1] - vertices[k] (cyclically).
    std::vector<IntVector> edges;
    /// Coordinates used for the 2D projection.
    std::size_t c1 = 0;
    std::size_t c2 = 1;
    Orientation orientation = Orientation::calibrated;
    Classification classification = Classification::AlmostToric;
    /// Filled by lattice_points() callers that keep the enumeration.
    std::vector<IntVector> lattice_points;
};

/// Lexicographically first (c1, c2) with P(c1, c2) != 0.
std::pair<std::size_t, std::size_t> projection_pair(const PlueckerData& pluecker);

/// Throws NotHypersurfaceError for rank 0.
NewtonPolygon assemble_polygon(const EdgeMatrix& edges, const PlueckerData& pluecker,
                               Orientation orientation = Orientation::calibrated);

/// All lattice points of the polygon, in scanline order of the projection.
std::vector<IntVector> lattice_points(const NewtonPolygon& polygon, const IntMatrix& A,
                                      kernels::Backend backend = kernels::Backend::omp);

/// The affine map from projected coordinates (v[c1], v[c2]) back onto the
/// polygon's plane {v : A v = alpha}.
kernels::AffineLift plane_lift(const IntMatrix& A, const IntVector& alpha, std::size_t c1, std::size_t c2);

}  // namespace atoric

#endif
