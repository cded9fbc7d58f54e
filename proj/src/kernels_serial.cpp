#include "atoric/kernels.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace atoric::kernels {

EvalPlan::EvalPlan(std::vector<UPoly> factors, std::vector<std::vector<unsigned>> exponents,
                   std::vector<Integer> points)
    : factors_(std::move(factors)), exponents_(std::move(exponents)), points_(std::move(points)) {
    for (const auto& h : factors_)
        for (const auto& c : h.coeffs())
            if (c.get_den() != 1) throw std::invalid_argument("evaluation factors must have integer coefficients");
    const std::size_t m = factors_.size();
    distinct_.resize(m);
    for (const auto& e : exponents_) {
        if (e.size() != m) throw std::invalid_argument("exponent row length mismatch");
        for (std::size_t j = 0; j < m; ++j) distinct_[j].push_back(e[j]);
    }
    for (auto& d : distinct_) {
        std::sort(d.begin(), d.end());
        d.erase(std::unique(d.begin(), d.end()), d.end());
    }
    slot_.resize(exponents_.size(), std::vector<std::size_t>(m));
    for (std::size_t v = 0; v < exponents_.size(); ++v)
        for (std::size_t j = 0; j < m; ++j)
            slot_[v][j] = static_cast<std::size_t>(
                std::lower_bound(distinct_[j].begin(), distinct_[j].end(), exponents_[v][j]) - distinct_[j].begin());
}

namespace detail {

std::array<Integer, 2> row_range(std::span<const Point2> polygon) {
    if (polygon.empty()) throw std::invalid_argument("empty polygon");
    Integer lo = polygon[0][1], hi = polygon[0][1];
    for (const auto& p : polygon) {
        if (p[1] < lo) lo = p[1];
        if (p[1] > hi) hi = p[1];
    }
    return {lo, hi};
}

std::vector<IntVector> scan_row(std::span<const Point2> polygon, const AffineLift& lift, const Integer& y) {
    std::optional<Rational> lo, hi;
    auto include = [&](const Rational& x) {
        if (!lo || x < *lo) lo = x;
        if (!hi || x > *hi) hi = x;
    };
    const std::size_t m = polygon.size();
    for (std::size_t k = 0; k < m; ++k) {
        const Point2& p = polygon[k];
        const Point2& q = polygon[(k + 1) % m];
        if (p[1] == q[1]) {
            if (y == p[1]) {
                include(Rational(p[0]));
                include(Rational(q[0]));
            }
            continue;
        }
        const Integer& ylo = std::min(p[1], q[1]);
        const Integer& yhi = std::max(p[1], q[1]);
        if (y < ylo || y > yhi) continue;
        include(Rational(p[0]) + make_rational((y - p[1]) * (q[0] - p[0]), q[1] - p[1]));
    }
    std::vector<IntVector> out;
    if (!lo) return out;

    Integer xs, xe;
    mpz_cdiv_q(xs.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
    mpz_fdiv_q(xe.get_mpz_t(), hi->get_num_mpz_t(), hi->get_den_mpz_t());
    const std::size_t dim = lift.origin.size();
    RatVector base(dim);
    for (std::size_t i = 0; i < dim; ++i) base[i] = lift.origin[i] + lift.dy[i] * y;
    for (Integer x = xs; x <= xe; ++x) {
        IntVector v(dim);
        bool integral = true;
        for (std::size_t i = 0; i < dim && integral; ++i) {
            Rational c = base[i] + lift.dx[i] * x;
            if (c.get_den() != 1) {
                integral = false;
            } else {
                v[i] = c.get_num();
            }
        }
        if (integral) out.push_back(std::move(v));
    }
    return out;
}

std::vector<modular::Word> evaluation_row_mod(const EvalPlan& plan, std::size_t row, modular::Word p) {
    const std::size_t m = plan.factors().size();
    const Integer& x0 = plan.points()[row];
    std::vector<std::vector<modular::Word>> powers(m);
    for (std::size_t j = 0; j < m; ++j) {
        const modular::Word base = modular::reduce(plan.factors()[j].eval(x0), p);
        const auto& exps = plan.distinct(j);
        auto& pw = powers[j];
        pw.resize(exps.size());
        unsigned prev = 0;
        modular::Word acc = 1;
        for (std::size_t s = 0; s < exps.size(); ++s) {
            acc = modular::mul(acc, modular::pow(base, exps[s] - prev, p), p);
            prev = exps[s];
            pw[s] = acc;
        }
    }
    std::vector<modular::Word> out(plan.columns());
    for (std::size_t v = 0; v < plan.columns(); ++v) {
        modular::Word acc = 1;
        for (std::size_t j = 0; j < m; ++j) acc = modular::mul(acc, powers[j][plan.slot(v, j)], p);
        out[v] = acc;
    }
    return out;
}

Integer residual_row(const EvalPlan& plan, std::size_t row, std::span<const Integer> coeffs) {
    const std::size_t m = plan.factors().size();
    const Integer& x0 = plan.points()[row];
    std::vector<std::vector<Integer>> powers(m);
    Integer step;
    for (std::size_t j = 0; j < m; ++j) {
        const Integer base = plan.factors()[j].eval(x0);
        const auto& exps = plan.distinct(j);
        auto& pw = powers[j];
        pw.resize(exps.size());
        unsigned prev = 0;
        Integer acc = 1;
        for (std::size_t s = 0; s < exps.size(); ++s) {
            mpz_pow_ui(step.get_mpz_t(), base.get_mpz_t(), exps[s] - prev);
            acc *= step;
            prev = exps[s];
            pw[s] = acc;
        }
    }
    Integer total = 0, term;
    for (std::size_t v = 0; v < plan.columns(); ++v) {
        if (coeffs[v] == 0) continue;
        term = coeffs[v];
        for (std::size_t j = 0; j < m; ++j) term *= powers[j][plan.slot(v, j)];
        total += term;
    }
    return total;
}

}  // namespace detail

namespace serial {

std::vector<IntVector> scan_lattice_points(std::span<const Point2> polygon, const AffineLift& lift) {
    const auto [lo, hi] = detail::row_range(polygon);
    std::vector<IntVector> out;
    for (Integer y = lo; y <= hi; ++y) {
        auto row = detail::scan_row(polygon, lift, y);
        out.insert(out.end(), std::make_move_iterator(row.begin()), std::make_move_iterator(row.end()));
    }
    return out;
}

std::vector<std::vector<modular::Word>> evaluation_rows_mod(const EvalPlan& plan,
                                                            std::span<const std::size_t> rows,
                                                            modular::Word p) {
    std::vector<std::vector<modular::Word>> out;
    out.reserve(rows.size());
    for (auto r : rows) out.push_back(detail::evaluation_row_mod(plan, r, p));
    return out;
}

IntVector residuals(const EvalPlan& plan, std::span<const std::size_t> rows, std::span<const Integer> coeffs) {
    if (coeffs.size() != plan.columns()) throw std::invalid_argument("coefficient count mismatch");
    IntVector out;
    out.reserve(rows.size());
    for (auto r : rows) out.push_back(detail::residual_row(plan, r, coeffs));
    return out;
}

}  // namespace serial

std::vector<IntVector> scan_lattice_points(Backend b, std::span<const Point2> polygon, const AffineLift& lift) {
    return b == Backend::omp ? omp::scan_lattice_points(polygon, lift) : serial::scan_lattice_points(polygon, lift);
}

std::vector<std::vector<modular::Word>> evaluation_rows_mod(Backend b, const EvalPlan& plan,
                                                            std::span<const std::size_t> rows, modular::Word p) {
    return b == Backend::omp ? omp::evaluation_rows_mod(plan, rows, p) : serial::evaluation_rows_mod(plan, rows, p);
}

IntVector residuals(Backend b, const EvalPlan& plan, std::span<const std::size_t> rows,
                    std::span<const Integer> coeffs) {
    return b == Backend::omp ? omp::residuals(plan, rows, coeffs) : serial::residuals(plan, rows, coeffs);
}

}  // namespace atoric::kernels
