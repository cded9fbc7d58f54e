#include "atoric/exactmath.hpp"

#include <algorithm>
#include <stdexcept>

namespace atoric {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimensions do not agree");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

IntVector multiply(const IntMatrix& a, std::span<const Integer> v) {
    if (a.cols() != v.size()) throw std::invalid_argument("matrix/vector dimensions do not agree");
    IntVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
    return out;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
    return out;
}

namespace {

// Fraction-free forward elimination in place. Returns the rank; `swaps`
// receives the number of row exchanges.
std::size_t bareiss_eliminate(IntMatrix& m, std::size_t* swaps = nullptr) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Integer prev = 1;
    std::size_t rank = 0;
    std::size_t nswaps = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != rank) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(rank, j));
            ++nswaps;
        }
        const Integer& piv = m(rank, c);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = piv * m(i, j) - m(i, c) * m(rank, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = piv;
        ++rank;
    }
    if (swaps) *swaps = nswaps;
    return rank;
}

IntMatrix scale_to_integers(const RatMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer den = common_denominator(m.row(r));
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Rational scaled = m(r, c) * den;
            out(r, c) = scaled.get_num();
        }
    }
    return out;
}

}  // namespace

std::size_t rank_exact(const IntMatrix& m) {
    IntMatrix work = m;
    return bareiss_eliminate(work);
}

std::size_t rank_exact(const RatMatrix& m) {
    IntMatrix work = scale_to_integers(m);
    return bareiss_eliminate(work);
}

std::size_t rank_gaussian(const RatMatrix& m) {
    std::vector<std::size_t> pivots;
    rref(m, &pivots);
    return pivots.size();
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    IntMatrix work = m;
    std::size_t swaps = 0;
    if (bareiss_eliminate(work, &swaps) < m.rows()) return 0;
    Integer det = work(m.rows() - 1, m.cols() - 1);
    return swaps % 2 ? Integer(-det) : det;
}

IntMatrix select_columns(const IntMatrix& a, std::span<const std::size_t> columns) {
    IntMatrix out(a.rows(), columns.size());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < columns.size(); ++k) out(r, k) = a(r, columns[k]);
    return out;
}

Integer maximal_minor(const IntMatrix& a, std::size_t i, std::size_t j) {
    if (a.cols() != a.rows() + 2)
        throw std::invalid_argument("maximal_minor expects an n x (n+2) matrix");
    if (i >= a.cols() || j >= a.cols()) throw std::out_of_range("column index out of range");
    if (i == j) throw std::invalid_argument("deleted columns must be distinct");
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (c != i && c != j) keep.push_back(c);
    return determinant(select_columns(a, keep));
}

Integer content(std::span<const Integer> v) {
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) throw std::domain_error("zero vector has no content");
    return g;
}

RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivot_columns) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    if (pivot_columns) *pivot_columns = std::move(pivots);
    return m;
}

Nullspace nullspace(const RatMatrix& m) {
    std::vector<std::size_t> pivots;
    const RatMatrix reduced = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    Nullspace out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVector v(m.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -reduced(k, free);
        out.basis.push_back(std::move(v));
    }
    out.dimension = out.basis.size();
    return out;
}

RatMatrix inverse(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
    RatMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    std::vector<std::size_t> pivots;
    aug = rref(std::move(aug), &pivots);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
    RatMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
    return out;
}

Integer common_denominator(std::span<const Rational> v) {
    Integer l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace atoric
