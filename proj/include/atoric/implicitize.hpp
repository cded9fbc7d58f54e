#ifndef ATORIC_IMPLICITIZE_HPP
#define ATORIC_IMPLICITIZE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "atoric/exactmath.hpp"
#include "atoric/kernels.hpp"
#include "atoric/pluecker.hpp"
#include "atoric/polygon.hpp"
#include "atoric/unipoly.hpp"
#include "atoric/valuation.hpp"

namespace atoric {

struct Term {
    IntVector exps;
    Integer coeff;
};

/// Homogeneous polynomial in u_0..u_{nvars-1} with integer coefficients of
/// content 1, terms sorted lexicographically descending by exponent vector,
/// leading (lex-greatest) coefficient positive.
struct ImplicitPolynomial {
    std::size_t nvars = 0;
    std::vector<Term> terms;

    Integer total_degree() const;
    /// e.g. "8*u0^6*u3^6 + 52*u0^5*u1*u2*u3^5 - ..."
    std::string to_string() const;
};

/// Sorts, drops zero terms, clears denominators, divides by the content and
/// makes the lex-greatest coefficient positive.
ImplicitPolynomial normalize(std::size_t nvars, std::vector<IntVector> exps, const RatVector& coeffs);

/// alpha = A v, checked to be the same for every v in the support.
/// Throws InconsistencyError on mismatch.
IntVector common_t_monomial(std::span<const IntVector> support, const IntMatrix& A);

enum class SolveMethod {
    /// Word-size prime fields + CRT + rational reconstruction, with the
    /// result and the dimension certified exactly over Z.
    multimodular,
    /// Rational row reduction of the full evaluation matrix.
    exact,
};

struct InterpolationOptions {
    SolveMethod method = SolveMethod::multimodular;
    kernels::Backend backend = kernels::Backend::omp;
    std::size_t max_primes = 50000;
    /// First evaluation point offset; points are offset, offset-1, offset+1, ...
    long point_offset = 0;
};

struct InterpolationStats {
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    std::size_t reduced_degree = 0;
    std::size_t primes = 0;
};

/// Solves for the coefficients supported on `support` (k >= 2 lattice points).
/// Throws NullspaceError when the solution space is not one-dimensional.
ImplicitPolynomial interpolate(const ToricInput& inst, std::span<const IntVector> support,
                               const InterpolationOptions& options = {}, InterpolationStats* stats = nullptr);

struct VanishingReport {
    bool symbolic_ok = false;
    bool random_ok = false;
    std::size_t trials = 0;
    /// Description of the first failing check.
    std::optional<std::string> witness;

    bool passed() const noexcept { return symbolic_ok && random_ok; }
};

/// Substitutes u_i = t^{a_i} f_i(x): (a) expands symbolically and checks for
/// the zero polynomial, (b) evaluates at `trials` seeded random rational points.
VanishingReport verify_vanishing(const ImplicitPolynomial& p, const ToricInput& inst, std::size_t trials,
                                 std::uint64_t seed);

/// Plücker, basis, valuation and edge data shared by the CLI subcommands.
struct Analysis {
    PlueckerData pluecker;
    CoprimeBasis basis;
    ValuationMatrix valuation;
    EdgeMatrix edges;
};

Analysis analyze(const ToricInput& inst);

struct ImplicitizationResult {
    Analysis analysis;
    NewtonPolygon polygon;  // with lattice_points filled
    ImplicitPolynomial polynomial;
    bool orientation_fallback = false;
    /// m > 1 when the predicted polygon is m times the Newton polygon of the
    /// computed equation (the parameterization has degree m onto Z).
    unsigned long multiplicity = 1;
    InterpolationStats stats;
};

/// Full pipeline. If interpolation finds only the zero solution the polygon is
/// rebuilt with the opposite orientation once; if it finds several, the
/// polygon is divided by the divisors of its vertex gcd until the solution is
/// unique. Throws NotHypersurfaceError for rank 0.
ImplicitizationResult implicitize(const ToricInput& inst, const InterpolationOptions& options = {});

}  // namespace atoric

#endif
