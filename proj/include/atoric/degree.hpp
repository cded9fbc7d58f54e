#ifndef ATORIC_DEGREE_HPP
#define ATORIC_DEGREE_HPP

#include <cstddef>
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "atoric/exactmath.hpp"
#include "atoric/pluecker.hpp"
#include "atoric/polygon.hpp"
#include "atoric/valuation.hpp"

namespace atoric {

/// Coordinate sum of the vertices (checked equal across vertices).
Integer degree_from_polygon(const NewtonPolygon& polygon);

/// w is generic when (P w)_i != 0 for every nonzero row i of P and
/// v^T P w != 0 for every column v of V with P v != 0.
bool is_generic_weight(const PlueckerData& pluecker, const ValuationMatrix& valuation, const IntVector& w);

/// Exponent vector of in_w p, the w-maximal vertex of the Newton polygon:
/// entry i sums |(P v_j)_i| over the pairs (i, j) where (P w')_i, (P v_j)_i
/// and v_j^T P w' share one strict sign, with w' = -w (that sign pattern
/// picks the w'-minimal vertex). Throws GenericityError if w is not generic.
IntVector initial_monomial(const PlueckerData& pluecker, const ValuationMatrix& valuation, const IntVector& w);

struct TropicalDegree {
    Integer degree;
    IntVector initial_monomial;
    IntVector weight;
    unsigned attempts = 0;
};

/// Draws w uniformly from [-10^6, 10^6]^(n+2) (seeded), up to 32 attempts.
TropicalDegree degree_tropical(const PlueckerData& pluecker, const ValuationMatrix& valuation, std::uint64_t seed);

/// Two independent rows of P_A (the lexicographically first such pair); its
/// rows span ker(A).
struct PSContext {
    IntMatrix B;
};

PSContext ps_context(const PlueckerData& pluecker);

struct PSDegree {
    Rational degree;
    /// Contribution of each column of V, in column order; they sum to degree.
    std::vector<Rational> per_column;
    /// Columns with B v = 0 or B v on a ray b_i, resolved by perturbation.
    std::size_t perturbed = 0;
};

/// Contribution of a column v of V: -(1/delta) sum_{sigma in T(v)} |A_sigma| sum_{i in sigma} v_i,
/// where sigma runs over complements of {i, j} whose open cone (b_i, b_j)
/// contains B v. The sign makes the contributions add up to the degree when
/// valuations count zeros positively and the point at infinity negatively.
/// When B v lies on the boundary of such cones it is moved to B v + eps z for
/// a fixed z parallel to no b_i; the sum is continuous in v, so the choice of
/// z does not matter.
PSDegree degree_ps(const IntMatrix& A, const PlueckerData& pluecker, const ValuationMatrix& valuation,
                   const PSContext& ctx);

/// Same, with an explicit perturbation direction (must be parallel to no b_i).
PSDegree degree_ps(const IntMatrix& A, const PlueckerData& pluecker, const ValuationMatrix& valuation,
                   const PSContext& ctx, const std::array<Integer, 2>& direction);

}  // namespace atoric

#endif
