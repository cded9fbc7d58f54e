#ifndef ATORIC_TESTS_SUPPORT_HPP
#define ATORIC_TESTS_SUPPORT_HPP

// Fixtures, random generators and brute-force oracles shared by the tests.

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "atoric/exactmath.hpp"
#include "atoric/implicitize.hpp"
#include "atoric/instance_io.hpp"
#include "atoric/pluecker.hpp"
#include "atoric/unipoly.hpp"

namespace testsupport {

using namespace atoric;

inline std::string data_path(const std::string& name) { return std::string(ATORIC_TEST_DATA) + "/" + name; }

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline ToricInput load(const std::string& name) { return read_instance_file(data_path(name)); }

inline IntVector iv(std::initializer_list<long> xs) {
    IntVector out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

inline std::vector<IntVector> exa_h_vertices() {
    // As printed, except the third vertex: the printed (3,8,0,6,5) has
    // A v = (14,20,10) while every other vertex has A v = (20,8,16); swapping
    // the middle entries gives the consistent (3,8,6,0,5).
    return {iv({0, 4, 16, 2, 0}), iv({2, 8, 8, 0, 4}), iv({3, 8, 6, 0, 5}),
            iv({7, 6, 0, 1, 8}),  iv({8, 4, 0, 2, 8}), iv({4, 0, 12, 4, 2})};
}

inline std::vector<IntVector> exa_z_vertices() {
    return {iv({6, 0, 0, 6}), iv({4, 0, 6, 2}), iv({2, 2, 8, 0}),
            iv({1, 4, 7, 0}), iv({0, 7, 4, 1}), iv({2, 6, 0, 4})};
}

/// True if b is a rotation of a (same cyclic sequence, same direction).
inline bool same_cycle(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t shift = 0; shift < a.size(); ++shift) {
        bool ok = true;
        for (std::size_t k = 0; k < a.size() && ok; ++k) ok = a[k] == b[(k + shift) % b.size()];
        if (ok) return true;
    }
    return a.empty();
}

/// Columns of m as a sorted multiset.
inline std::vector<IntVector> column_multiset(const IntMatrix& m) {
    std::vector<IntVector> cols;
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
    std::sort(cols.begin(), cols.end());
    return cols;
}

inline ImplicitPolynomial golden_polynomial(const std::string& name) {
    return parse_polynomial_json(slurp(data_path(name)));
}

inline bool same_polynomial(const ImplicitPolynomial& a, const ImplicitPolynomial& b) {
    auto key = [](const ImplicitPolynomial& p) {
        std::vector<std::pair<IntVector, Integer>> out;
        for (const auto& t : p.terms) out.emplace_back(t.exps, t.coeff);
        std::sort(out.begin(), out.end());
        return out;
    };
    return a.nvars == b.nvars && key(a) == key(b);
}

// ---------------------------------------------------------------------------
// Random instances (independent of the library's own generator).

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}

    long uniform(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t r;
        do {
            r = engine();
        } while (r >= limit);
        return lo + static_cast<long>(r % span);
    }
    bool coin() { return uniform(0, 1) == 1; }
};

/// n x (n+2), nonnegative, every column summing to d, rank n.
inline IntMatrix random_A(Rng& rng, std::size_t n, long d) {
    for (;;) {
        IntMatrix A(n, n + 2);
        for (std::size_t c = 0; c < n + 2; ++c) {
            long left = d;
            for (std::size_t r = 0; r + 1 < n; ++r) {
                const long take = rng.uniform(0, left);
                A(r, c) = take;
                left -= take;
            }
            A(n - 1, c) = left;
        }
        if (rank_exact(A) == n) return A;
    }
}

/// Random nonzero polynomial: a constant times a product of factors drawn
/// from small linear and irreducible quadratic pieces.
inline UPoly random_f(Rng& rng, int max_factors) {
    static const std::vector<UPoly> pieces = {
        parse_poly("x"),         parse_poly("x-1"),   parse_poly("x+1"),   parse_poly("x-2"),
        parse_poly("x+2"),       parse_poly("2*x-1"), parse_poly("x^2+1"), parse_poly("x^2+x+1"),
        parse_poly("x^2-2"),     parse_poly("3*x+2"),
    };
    UPoly f = UPoly::constant(Rational(rng.uniform(1, 3) * (rng.coin() ? 1 : -1)));
    const int count = static_cast<int>(rng.uniform(0, max_factors));
    for (int i = 0; i < count; ++i) f = f * pieces[static_cast<std::size_t>(rng.uniform(0, pieces.size() - 1))];
    return f;
}

inline ToricInput random_instance(Rng& rng, std::size_t n, long d, int max_factors) {
    IntMatrix A = random_A(rng, n, d);
    std::vector<UPoly> f;
    for (std::size_t i = 0; i < n + 2; ++i) f.push_back(random_f(rng, max_factors));
    return validate_input(std::move(A), std::move(f));
}

// ---------------------------------------------------------------------------
// Oracles

/// Determinant by cofactor expansion along the first row.
inline Integer cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Integer det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t k = 0, kk = 0; k < n; ++k)
                if (k != c) minor(r - 1, kk++) = m(r, k);
        const Integer term = m(0, c) * cofactor_det(minor);
        det += (c % 2 == 0) ? term : Integer(-term);
    }
    return det;
}

/// Every v >= 0 with A v = alpha inside the polygon with the given cyclic
/// vertices, found by enumerating the bounding box and testing membership in
/// the 2D projection onto (c1, c2) with exact cross products.
inline std::set<IntVector> brute_force_lattice_points(const IntMatrix& A, const std::vector<IntVector>& vertices,
                                                      std::size_t c1, std::size_t c2) {
    const std::size_t m = A.cols();
    const IntVector alpha = multiply(A, vertices.front());
    IntVector hi(m, Integer(0));
    for (const auto& v : vertices)
        for (std::size_t i = 0; i < m; ++i) hi[i] = std::max(hi[i], v[i]);

    auto cross = [](const Integer& ax, const Integer& ay, const Integer& bx, const Integer& by) {
        return Integer(ax * by - ay * bx);
    };
    auto inside = [&](const IntVector& p) {
        const Integer px = p[c1], py = p[c2];
        const std::size_t k = vertices.size();
        if (k == 1) return px == vertices[0][c1] && py == vertices[0][c2];
        if (k == 2) {
            const Integer ax = vertices[0][c1], ay = vertices[0][c2], bx = vertices[1][c1], by = vertices[1][c2];
            if (cross(bx - ax, by - ay, px - ax, py - ay) != 0) return false;
            const Integer dot = (px - ax) * (bx - ax) + (py - ay) * (by - ay);
            const Integer len = (bx - ax) * (bx - ax) + (by - ay) * (by - ay);
            return dot >= 0 && dot <= len;
        }
        int sign = 0;
        for (std::size_t e = 0; e < k; ++e) {
            const auto& a = vertices[e];
            const auto& b = vertices[(e + 1) % k];
            const int s = sgn(cross(b[c1] - a[c1], b[c2] - a[c2], px - a[c1], py - a[c2]));
            if (s == 0) continue;
            if (sign == 0) sign = s;
            if (s != sign) return false;
        }
        return true;
    };

    std::set<IntVector> out;
    IntVector p(m, Integer(0));
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == m) {
            if (multiply(A, p) == alpha && inside(p)) out.insert(p);
            return;
        }
        for (Integer x = 0; x <= hi[i]; ++x) {
            p[i] = x;
            walk(i + 1);
        }
        p[i] = 0;
    };
    walk(0);
    return out;
}

}  // namespace testsupport

#endif
