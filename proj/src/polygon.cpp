#include "atoric/polygon.hpp"

#include <algorithm>

#include "atoric/errors.hpp"

namespace atoric {

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::NotHypersurface: return "NotHypersurface";
        case Classification::ToricHypersurface: return "ToricHypersurface";
        case Classification::AlmostToric: return "AlmostToric";
    }
    return "?";
}

EdgeMatrix edge_matrix(const PlueckerData& pluecker, const ValuationMatrix& valuation) {
    EdgeMatrix out;
    out.E = multiply(pluecker.P, valuation.V);
    switch (rank_exact(out.E)) {
        case 0: out.classification = Classification::NotHypersurface; break;
        case 1: out.classification = Classification::ToricHypersurface; break;
        case 2: out.classification = Classification::AlmostToric; break;
        default: throw InconsistencyError("rank(P_A * V_f) exceeds 2");
    }
    return out;
}

std::pair<std::size_t, std::size_t> projection_pair(const PlueckerData& pluecker) {
    const std::size_t m = pluecker.P.rows();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (pluecker.P(i, j) != 0) return {i, j};
    throw InconsistencyError("Pluecker matrix is zero");
}

namespace {

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool same_direction(const IntVector& u, const IntVector& v) {
    if (!proportional(u, v)) return false;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != 0) return sgn(u[i]) == sgn(v[i]);
    return false;
}

// 0 for angles in [0, pi), 1 for [pi, 2 pi).
int half(const Integer& x, const Integer& y) { return (y > 0 || (y == 0 && x > 0)) ? 0 : 1; }

// Strict counterclockwise angular order starting from the positive x-axis.
bool angle_less(const Integer& ax, const Integer& ay, const Integer& bx, const Integer& by) {
    const int ha = half(ax, ay), hb = half(bx, by);
    if (ha != hb) return ha < hb;
    return ax * by - ay * bx > 0;
}

}  // namespace

NewtonPolygon assemble_polygon(const EdgeMatrix& edges, const PlueckerData& pluecker, Orientation orientation) {
    if (edges.classification == Classification::NotHypersurface) throw NotHypersurfaceError();
    const auto [c1, c2] = projection_pair(pluecker);
    const std::size_t dim = edges.E.rows();

    std::vector<IntVector> dirs;
    for (std::size_t c = 0; c < edges.E.cols(); ++c) {
        IntVector col = edges.E.column(c);
        if (is_zero(col)) continue;
        auto it = std::find_if(dirs.begin(), dirs.end(), [&](const IntVector& d) { return same_direction(d, col); });
        if (it == dirs.end()) {
            dirs.push_back(std::move(col));
        } else {
            for (std::size_t i = 0; i < dim; ++i) (*it)[i] += col[i];
        }
    }

    const bool ccw = (pluecker.P(c1, c2) > 0) == (orientation == Orientation::calibrated);
    std::sort(dirs.begin(), dirs.end(), [&, c1 = c1, c2 = c2](const IntVector& a, const IntVector& b) {
        return ccw ? angle_less(a[c1], a[c2], b[c1], b[c2]) : angle_less(b[c1], b[c2], a[c1], a[c2]);
    });

    IntVector sum(dim), low(dim);
    std::vector<IntVector> partial;
    partial.reserve(dirs.size());
    for (const auto& e : dirs) {
        partial.push_back(sum);
        for (std::size_t i = 0; i < dim; ++i) {
            sum[i] += e[i];
            if (sum[i] < low[i]) low[i] = sum[i];
        }
    }
    if (!is_zero(sum)) throw InconsistencyError("polygon edges do not close");

    NewtonPolygon out;
    out.c1 = c1;
    out.c2 = c2;
    out.orientation = orientation;
    out.classification = edges.classification;
    for (auto& s : partial) {
        for (std::size_t i = 0; i < dim; ++i) s[i] -= low[i];
        out.vertices.push_back(std::move(s));
    }
    out.edges = std::move(dirs);
    return out;
}

kernels::AffineLift plane_lift(const IntMatrix& A, const IntVector& alpha, std::size_t c1, std::size_t c2) {
    const std::size_t n = A.rows();
    const std::size_t dim = A.cols();
    std::vector<std::size_t> rest;
    for (std::size_t c = 0; c < dim; ++c)
        if (c != c1 && c != c2) rest.push_back(c);
    const RatMatrix inv = inverse(to_rational(select_columns(A, rest)));

    kernels::AffineLift lift{RatVector(dim), RatVector(dim), RatVector(dim)};
    lift.dx[c1] = 1;
    lift.dy[c2] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        Rational o = 0, x = 0, y = 0;
        for (std::size_t r = 0; r < n; ++r) {
            o += inv(k, r) * alpha[r];
            x -= inv(k, r) * A(r, c1);
            y -= inv(k, r) * A(r, c2);
        }
        lift.origin[rest[k]] = o;
        lift.dx[rest[k]] = x;
        lift.dy[rest[k]] = y;
    }
    return lift;
}

std::vector<IntVector> lattice_points(const NewtonPolygon& polygon, const IntMatrix& A, kernels::Backend backend) {
    if (polygon.vertices.empty()) return {};
    const IntVector alpha = multiply(A, polygon.vertices.front());
    const auto lift = plane_lift(A, alpha, polygon.c1, polygon.c2);
    std::vector<kernels::Point2> projected;
    projected.reserve(polygon.vertices.size());
    for (const auto& v : polygon.vertices) projected.push_back({v[polygon.c1], v[polygon.c2]});
    return kernels::scan_lattice_points(backend, projected, lift);
}

}  // namespace atoric
