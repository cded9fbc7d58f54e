#ifndef ATORIC_PLUECKER_HPP
#define ATORIC_PLUECKER_HPP

#include <cstddef>
#include <vector>

#include "atoric/exactmath.hpp"
#include "atoric/unipoly.hpp"

namespace atoric {

/// A validated problem instance (A, f).
///
/// A is n x (n+2) of rank n with all column sums equal to d > 0; f holds n+2
/// nonzero polynomials. The columns of A are not required to span Z^n.
struct ToricInput {
    IntMatrix A;
    std::vector<UPoly> f;
    std::size_t n = 0;
    Integer d;

    std::size_t ambient() const noexcept { return n + 2; }
};

/// Throws InputError on any violated hypothesis.
ToricInput validate_input(IntMatrix A, std::vector<UPoly> f);

/// Skew-symmetric matrix of signed maximal minors of A, divided by their gcd.
struct PlueckerData {
    IntMatrix P;
    Integer delta;
};

/// p_ij = (-1)^(i+j) det(A_[i,j]) / delta for i < j (0-based; the parity is
/// the same as for 1-based indices), p_ji = -p_ij.
PlueckerData build_pluecker(const IntMatrix& A);

}  // namespace atoric

#endif
