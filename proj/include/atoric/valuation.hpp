#ifndef ATORIC_VALUATION_HPP
#define ATORIC_VALUATION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "atoric/exactmath.hpp"
#include "atoric/unipoly.hpp"

namespace atoric {

/// Valuation matrix: merged order-of-vanishing columns followed by the
/// column at infinity. Every row sums to zero.
struct ValuationMatrix {
    IntMatrix V;
    /// provenance[c] lists the coprime-basis indices merged into finite column c.
    std::vector<std::vector<std::size_t>> provenance;

    std::size_t finite_columns() const noexcept { return provenance.size(); }
};

/// True if u and v span the same line (all 2x2 cross terms vanish).
bool proportional(std::span<const Integer> u, std::span<const Integer> v);

ValuationMatrix build_valuation(std::span<const UPoly> f, const CoprimeBasis& basis);

/// (-deg f_0, ..., -deg f_{n+1}).
IntVector infinity_column(std::span<const UPoly> f);

}  // namespace atoric

#endif
