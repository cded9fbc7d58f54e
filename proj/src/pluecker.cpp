#include "atoric/pluecker.hpp"

#include <string>

#include "atoric/errors.hpp"

namespace atoric {

ToricInput validate_input(IntMatrix A, std::vector<UPoly> f) {
    const std::size_t n = A.rows();
    if (n == 0) throw InputError("A must have at least one row");
    if (A.cols() != n + 2)
        throw InputError("A must have n+2 columns (got " + std::to_string(A.cols()) + " columns for n = " +
                         std::to_string(n) + ")");
    if (f.size() != n + 2)
        throw InputError("expected " + std::to_string(n + 2) + " polynomials, got " + std::to_string(f.size()));
    if (rank_exact(A) < n) throw InputError("rank(A) < n");

    Integer d;
    for (std::size_t c = 0; c < A.cols(); ++c) {
        Integer sum = 0;
        for (std::size_t r = 0; r < n; ++r) sum += A(r, c);
        if (c == 0) {
            d = sum;
        } else if (sum != d) {
            throw InputError("column sums differ");
        }
    }
    if (d <= 0) throw InputError("column sums must be positive");

    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i].is_zero()) throw InputError("f_" + std::to_string(i) + " is the zero polynomial");

    return ToricInput{std::move(A), std::move(f), n, d};
}

PlueckerData build_pluecker(const IntMatrix& A) {
    const std::size_t m = A.cols();
    IntMatrix minors(m, m);
    Integer delta = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            minors(i, j) = maximal_minor(A, i, j);
            mpz_gcd(delta.get_mpz_t(), delta.get_mpz_t(), minors(i, j).get_mpz_t());
        }
    if (delta == 0) throw InconsistencyError("all maximal minors of A vanish");

    PlueckerData out{IntMatrix(m, m), delta};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Integer p;
            mpz_divexact(p.get_mpz_t(), minors(i, j).get_mpz_t(), delta.get_mpz_t());
            if ((i + j) % 2) p = -p;
            out.P(i, j) = p;
            out.P(j, i) = -p;
        }
    return out;
}

}  // namespace atoric
