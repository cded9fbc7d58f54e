#include "atoric/degree.hpp"

#include <random>

#include "atoric/errors.hpp"

namespace atoric {

Integer degree_from_polygon(const NewtonPolygon& polygon) {
    if (polygon.vertices.empty()) throw std::invalid_argument("empty polygon");
    std::optional<Integer> degree;
    for (const auto& v : polygon.vertices) {
        Integer s = 0;
        for (const auto& x : v) s += x;
        if (degree && *degree != s) throw InconsistencyError("polygon is not homogeneous");
        degree = s;
    }
    return *degree;
}

namespace {

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool row_is_zero(const IntMatrix& m, std::size_t r) {
    for (const auto& x : m.row(r))
        if (x != 0) return false;
    return true;
}

struct WeightData {
    IntVector Pw;                 // (P w)_i
    IntMatrix E;                  // P V
    std::vector<Integer> vPw;     // v_j^T P w
};

WeightData weight_data(const PlueckerData& pluecker, const ValuationMatrix& valuation, const IntVector& w) {
    WeightData d{multiply(pluecker.P, w), multiply(pluecker.P, valuation.V), {}};
    for (std::size_t j = 0; j < valuation.V.cols(); ++j) d.vPw.push_back(dot(valuation.V.column(j), d.Pw));
    return d;
}

bool generic(const PlueckerData& pluecker, const WeightData& d) {
    for (std::size_t i = 0; i < d.Pw.size(); ++i)
        if (d.Pw[i] == 0 && !row_is_zero(pluecker.P, i)) return false;
    for (std::size_t j = 0; j < d.vPw.size(); ++j) {
        bool column_zero = true;
        for (std::size_t i = 0; i < d.E.rows(); ++i) column_zero = column_zero && d.E(i, j) == 0;
        if (d.vPw[j] == 0 && !column_zero) return false;
    }
    return true;
}

// The sign pattern selects the w-minimal vertex; callers pass -w to get the
// w-maximal one.
IntVector monomial_from(const WeightData& d) {
    IntVector out(d.E.rows());
    for (std::size_t i = 0; i < d.E.rows(); ++i)
        for (std::size_t j = 0; j < d.E.cols(); ++j) {
            const int s = sgn(d.E(i, j));
            if (s != 0 && sgn(d.Pw[i]) == s && sgn(d.vPw[j]) == s) out[i] += abs(d.E(i, j));
        }
    return out;
}

IntVector negated(const IntVector& w) {
    IntVector out;
    for (const auto& x : w) out.push_back(-x);
    return out;
}

}  // namespace

bool is_generic_weight(const PlueckerData& pluecker, const ValuationMatrix& valuation, const IntVector& w) {
    return generic(pluecker, weight_data(pluecker, valuation, w));
}

IntVector initial_monomial(const PlueckerData& pluecker, const ValuationMatrix& valuation, const IntVector& w) {
    const WeightData d = weight_data(pluecker, valuation, negated(w));
    if (!generic(pluecker, d)) throw GenericityError("weight vector is not generic");
    return monomial_from(d);
}

TropicalDegree degree_tropical(const PlueckerData& pluecker, const ValuationMatrix& valuation, std::uint64_t seed) {
    constexpr unsigned kAttempts = 32;
    constexpr std::uint64_t kRange = 2'000'001;  // [-10^6, 10^6]
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % kRange;
    std::mt19937_64 rng(seed);
    for (unsigned attempt = 1; attempt <= kAttempts; ++attempt) {
        IntVector w(pluecker.P.rows());
        for (auto& x : w) {
            std::uint64_t r;
            do {
                r = rng();
            } while (r >= limit);
            x = static_cast<long>(r % kRange) - 1'000'000L;
        }
        const WeightData d = weight_data(pluecker, valuation, negated(w));
        if (!generic(pluecker, d)) continue;
        TropicalDegree out;
        out.initial_monomial = monomial_from(d);
        out.degree = 0;
        for (const auto& e : out.initial_monomial) out.degree += e;
        out.weight = std::move(w);
        out.attempts = attempt;
        return out;
    }
    throw GenericityError("no generic w found");
}

PSContext ps_context(const PlueckerData& pluecker) {
    const IntMatrix& P = pluecker.P;
    for (std::size_t r1 = 0; r1 < P.rows(); ++r1) {
        if (row_is_zero(P, r1)) continue;
        for (std::size_t r2 = r1 + 1; r2 < P.rows(); ++r2) {
            if (proportional(P.row(r1), P.row(r2))) continue;
            PSContext ctx{IntMatrix(2, P.cols())};
            for (std::size_t c = 0; c < P.cols(); ++c) {
                ctx.B(0, c) = P(r1, c);
                ctx.B(1, c) = P(r2, c);
            }
            return ctx;
        }
    }
    throw InconsistencyError("Pluecker matrix has rank < 2");
}

namespace {

Integer det2(const Integer& a0, const Integer& a1, const Integer& b0, const Integer& b1) {
    return a0 * b1 - a1 * b0;
}

bool on_some_ray(const IntMatrix& B, const Integer& x, const Integer& y) {
    for (std::size_t i = 0; i < B.cols(); ++i) {
        const Integer &bx = B(0, i), &by = B(1, i);
        if (bx == 0 && by == 0) continue;
        if (det2(bx, by, x, y) == 0 && bx * x + by * y > 0) return true;
    }
    return false;
}

bool parallel_to_some_column(const IntMatrix& B, const Integer& x, const Integer& y) {
    for (std::size_t i = 0; i < B.cols(); ++i)
        if ((B(0, i) != 0 || B(1, i) != 0) && det2(B(0, i), B(1, i), x, y) == 0) return true;
    return false;
}

// (a, b) > 0 lexicographically: a > 0, or a == 0 and b > 0.
bool lex_positive(const Integer& a, const Integer& b) { return a > 0 || (a == 0 && b > 0); }

}  // namespace

PSDegree degree_ps(const IntMatrix& A, const PlueckerData& pluecker, const ValuationMatrix& valuation,
                   const PSContext& ctx) {
    // (1, t) for the first t >= 0 parallel to no b_i.
    for (long t = 0;; ++t)
        if (!parallel_to_some_column(ctx.B, Integer(1), Integer(t)))
            return degree_ps(A, pluecker, valuation, ctx, {Integer(1), Integer(t)});
}

PSDegree degree_ps(const IntMatrix& A, const PlueckerData& pluecker, const ValuationMatrix& valuation,
                   const PSContext& ctx, const std::array<Integer, 2>& z) {
    const std::size_t m = A.cols();
    const IntMatrix& B = ctx.B;
    if ((z[0] == 0 && z[1] == 0) || parallel_to_some_column(B, z[0], z[1]))
        throw std::invalid_argument("perturbation direction is parallel to a column of B");

    // |det A_[i,j]| for the simplex sigma = complement of {i, j}.
    IntMatrix minors(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) minors(i, j) = abs(maximal_minor(A, i, j));

    PSDegree out;
    for (std::size_t c = 0; c < valuation.V.cols(); ++c) {
        const IntVector v = valuation.V.column(c);
        const Integer x = dot(B.row(0), v), y = dot(B.row(1), v);
        if ((x == 0 && y == 0) || on_some_ray(B, x, y)) ++out.perturbed;

        Integer vsum = 0;
        for (const auto& vi : v) vsum += vi;
        Integer acc = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                const Integer d = det2(B(0, i), B(1, i), B(0, j), B(1, j));
                if (d == 0) continue;
                const int s = sgn(d);
                // B v = lambda b_i + mu b_j (Cramer), both scaled by sign(d).
                const Integer lam = s * det2(x, y, B(0, j), B(1, j));
                const Integer mu = s * det2(B(0, i), B(1, i), x, y);
                const Integer lam_z = s * det2(z[0], z[1], B(0, j), B(1, j));
                const Integer mu_z = s * det2(B(0, i), B(1, i), z[0], z[1]);
                if (!lex_positive(lam, lam_z) || !lex_positive(mu, mu_z)) continue;
                acc += minors(i, j) * (vsum - v[i] - v[j]);
            }
        Rational part = make_rational(-acc, pluecker.delta);
        out.degree += part;
        out.per_column.push_back(std::move(part));
    }
    return out;
}

}  // namespace atoric
