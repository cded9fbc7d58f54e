#ifndef ATORIC_KERNELS_HPP
#define ATORIC_KERNELS_HPP

// Data-parallel inner loops of the pipeline.
//
// Each kernel exists twice with identical signatures: kernels::serial is the
// reference implementation, kernels::omp distributes independent rows over
// OpenMP threads. Results are bit-identical and in the same order; the unit
// tests and the benchmark compare the two.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "atoric/exactmath.hpp"
#include "atoric/modular.hpp"
#include "atoric/unipoly.hpp"

namespace atoric::kernels {

enum class Backend { serial, omp };

/// x -> origin + x*dx + y*dy, mapping projected coordinates back to Z^(n+2).
struct AffineLift {
    RatVector origin;
    RatVector dx;
    RatVector dy;
};

using Point2 = std::array<Integer, 2>;

/// Evaluation data for the interpolation system: row r, column v holds
/// prod_j factors[j](points[r])^exponents[v][j].
class EvalPlan {
public:
    EvalPlan(std::vector<UPoly> factors, std::vector<std::vector<unsigned>> exponents,
             std::vector<Integer> points);

    const std::vector<UPoly>& factors() const noexcept { return factors_; }
    const std::vector<Integer>& points() const noexcept { return points_; }
    std::size_t columns() const noexcept { return exponents_.size(); }
    std::size_t rows() const noexcept { return points_.size(); }
    const std::vector<std::vector<unsigned>>& exponents() const noexcept { return exponents_; }

    /// Sorted distinct exponents used for factor j.
    const std::vector<unsigned>& distinct(std::size_t j) const { return distinct_[j]; }
    /// Position of exponents[v][j] inside distinct(j).
    std::size_t slot(std::size_t v, std::size_t j) const { return slot_[v][j]; }

private:
    std::vector<UPoly> factors_;
    std::vector<std::vector<unsigned>> exponents_;
    std::vector<Integer> points_;
    std::vector<std::vector<unsigned>> distinct_;
    std::vector<std::vector<std::size_t>> slot_;
};

namespace serial {

/// Lattice points of a convex polygon (or segment) given by its projected
/// vertices in cyclic order, lifted through `lift` and kept when integral.
/// Ordered by projected row (second coordinate), then first coordinate.
std::vector<IntVector> scan_lattice_points(std::span<const Point2> polygon, const AffineLift& lift);

/// Selected rows of the evaluation matrix reduced mod p.
std::vector<std::vector<modular::Word>> evaluation_rows_mod(const EvalPlan& plan,
                                                            std::span<const std::size_t> rows,
                                                            modular::Word p);

/// Exact values sum_v coeffs[v] * M(r, v) for the selected rows.
IntVector residuals(const EvalPlan& plan, std::span<const std::size_t> rows, std::span<const Integer> coeffs);

}  // namespace serial

namespace omp {

std::vector<IntVector> scan_lattice_points(std::span<const Point2> polygon, const AffineLift& lift);
std::vector<std::vector<modular::Word>> evaluation_rows_mod(const EvalPlan& plan,
                                                            std::span<const std::size_t> rows,
                                                            modular::Word p);
IntVector residuals(const EvalPlan& plan, std::span<const std::size_t> rows, std::span<const Integer> coeffs);

}  // namespace omp

std::vector<IntVector> scan_lattice_points(Backend b, std::span<const Point2> polygon, const AffineLift& lift);
std::vector<std::vector<modular::Word>> evaluation_rows_mod(Backend b, const EvalPlan& plan,
                                                            std::span<const std::size_t> rows, modular::Word p);
IntVector residuals(Backend b, const EvalPlan& plan, std::span<const std::size_t> rows,
                    std::span<const Integer> coeffs);

namespace detail {

// Per-row building blocks shared by both backends.
std::array<Integer, 2> row_range(std::span<const Point2> polygon);
std::vector<IntVector> scan_row(std::span<const Point2> polygon, const AffineLift& lift, const Integer& y);
std::vector<modular::Word> evaluation_row_mod(const EvalPlan& plan, std::size_t row, modular::Word p);
Integer residual_row(const EvalPlan& plan, std::size_t row, std::span<const Integer> coeffs);

}  // namespace detail

}  // namespace atoric::kernels

#endif
