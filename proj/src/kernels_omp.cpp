#include <omp.h>

#include <stdexcept>

#include "atoric/kernels.hpp"

namespace atoric::kernels::omp {

std::vector<IntVector> scan_lattice_points(std::span<const Point2> polygon, const AffineLift& lift) {
    const auto [lo, hi] = detail::row_range(polygon);
    const Integer span = hi - lo + 1;
    if (!span.fits_slong_p()) throw std::length_error("polygon too tall to scan");
    const long nrows = span.get_si();

    std::vector<std::vector<IntVector>> per_row(static_cast<std::size_t>(nrows));
#pragma omp parallel for schedule(dynamic)
    for (long r = 0; r < nrows; ++r) {
        const Integer y = lo + r;
        per_row[static_cast<std::size_t>(r)] = detail::scan_row(polygon, lift, y);
    }

    std::vector<IntVector> out;
    for (auto& row : per_row)
        out.insert(out.end(), std::make_move_iterator(row.begin()), std::make_move_iterator(row.end()));
    return out;
}

std::vector<std::vector<modular::Word>> evaluation_rows_mod(const EvalPlan& plan,
                                                            std::span<const std::size_t> rows,
                                                            modular::Word p) {
    std::vector<std::vector<modular::Word>> out(rows.size());
    const long n = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k)
        out[static_cast<std::size_t>(k)] = detail::evaluation_row_mod(plan, rows[static_cast<std::size_t>(k)], p);
    return out;
}

IntVector residuals(const EvalPlan& plan, std::span<const std::size_t> rows, std::span<const Integer> coeffs) {
    if (coeffs.size() != plan.columns()) throw std::invalid_argument("coefficient count mismatch");
    IntVector out(rows.size());
    const long n = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k)
        out[static_cast<std::size_t>(k)] = detail::residual_row(plan, rows[static_cast<std::size_t>(k)], coeffs);
    return out;
}

}  // namespace atoric::kernels::omp
