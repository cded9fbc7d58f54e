#include <doctest.h>

#include "atoric/errors.hpp"
#include "atoric/polygon.hpp"
#include "atoric/valuation.hpp"
#include "support.hpp"

using namespace atoric;
using testsupport::iv;
using testsupport::Rng;

namespace {

// p_ij straight from the definition, with the cofactor-expansion oracle.
PlueckerData pluecker_oracle(const IntMatrix& A) {
    const std::size_t m = A.cols();
    IntMatrix raw(m, m);
    Integer g = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            IntMatrix sub(A.rows(), m - 2);
            for (std::size_t r = 0; r < A.rows(); ++r)
                for (std::size_t c = 0, k = 0; c < m; ++c)
                    if (c != i && c != j) sub(r, k++) = A(r, c);
            const Integer det = testsupport::cofactor_det(sub);
            raw(i, j) = (i + j) % 2 == 0 ? det : Integer(-det);
            raw(j, i) = -raw(i, j);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) raw(i, j) /= g;
    return {raw, g};
}

void check_pluecker_invariants(const IntMatrix& A, const PlueckerData& pd) {
    const IntMatrix& P = pd.P;
    const std::size_t m = A.cols();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) CHECK(P(i, j) == -P(j, i));
    CHECK(rank_exact(P) == 2);
    for (std::size_t i = 0; i < m; ++i) {
        Integer row = 0, col = 0;
        for (std::size_t j = 0; j < m; ++j) {
            row += P(i, j);
            col += P(j, i);
        }
        CHECK(row == 0);
        CHECK(col == 0);
    }
    const IntMatrix APt = multiply(A, P.transposed());
    for (std::size_t r = 0; r < APt.rows(); ++r)
        for (std::size_t c = 0; c < APt.cols(); ++c) CHECK(APt(r, c) == 0);
}

}  // namespace

TEST_CASE("Pluecker matrix of the first golden instance") {
    const ToricInput inst = testsupport::load("exa_h.json");
    const PlueckerData pd = build_pluecker(inst.A);
    const IntMatrix printed{{0, -2, 2, 1, -1}, {2, 0, -4, 0, 2}, {-2, 4, 0, -2, 0}, {-1, 0, 2, 0, -1}, {1, -2, 0, 1, 0}};
    CHECK(pd.P == printed);
    CHECK(pd.delta == 2);
}

TEST_CASE("Pluecker matrix of the second golden instance") {
    const ToricInput inst = testsupport::load("exa_z.json");
    const PlueckerData pd = build_pluecker(inst.A);
    const PlueckerData oracle = pluecker_oracle(inst.A);
    CHECK(pd.P == oracle.P);
    CHECK(pd.delta == 3);
    CHECK(pd.P == IntMatrix{{0, -1, 2, -1}, {1, 0, -3, 2}, {-2, 3, 0, -1}, {1, -2, 1, 0}});
}

TEST_CASE("Pluecker matrix for n = 1") {
    const PlueckerData pd = build_pluecker(IntMatrix{{1, 1, 1}});
    CHECK(pd.P == IntMatrix{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
    CHECK(pd.delta == 1);
}

TEST_CASE("Pluecker invariants over random matrices") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
        const IntMatrix A = testsupport::random_A(rng, n, rng.uniform(1, 4));
        const PlueckerData pd = build_pluecker(A);
        const PlueckerData oracle = pluecker_oracle(A);
        CHECK(pd.P == oracle.P);
        CHECK(pd.delta == oracle.delta);
        check_pluecker_invariants(A, pd);
    }
}

TEST_CASE("input validation") {
    const std::vector<UPoly> f3{parse_poly("x"), parse_poly("1"), parse_poly("x+1")};
    CHECK_NOTHROW(validate_input(IntMatrix{{1, 1, 1}}, f3));
    CHECK_THROWS_AS(validate_input(IntMatrix{{1, 2, 1}}, f3), InputError);  // column sums differ
    CHECK_THROWS_AS(validate_input(IntMatrix{{0, 0, 0}}, f3), InputError);  // rank / sums
    CHECK_THROWS_AS(validate_input(IntMatrix{{1, 1}}, f3), InputError);     // shape
    CHECK_THROWS_AS(validate_input(IntMatrix{{1, 1, 1}}, {parse_poly("x"), parse_poly("1")}), InputError);
    CHECK_THROWS_AS(validate_input(IntMatrix{{1, 1, 1}}, {parse_poly("x"), UPoly{}, parse_poly("1")}), InputError);
    CHECK_THROWS_AS(validate_input(IntMatrix{{1, 1, 1, 1}, {1, 1, 1, 1}}, {f3[0], f3[1], f3[2], f3[0]}), InputError);
    CHECK_THROWS_AS(validate_input(IntMatrix{{-1, -1, -1}}, f3), InputError);
}

TEST_CASE("valuation matrix of the golden instances") {
    // Printed matrices, compared as column multisets.
    const IntMatrix printed_h{{0, 0, 2, 0, 0, -2}, {3, 1, 0, 0, 0, -4}, {1, 0, 0, 1, 0, -2},
                              {0, 0, 2, 0, 1, -3}, {0, 2, 0, 1, 0, -3}};
    const IntMatrix printed_z{{2, 1, 0, 0, 0, -3}, {0, 0, 2, 0, 0, -2}, {1, 0, 0, 2, 0, -3}, {0, 1, 0, 0, 1, -2}};
    for (const auto& [file, printed] : {std::pair{"exa_h.json", printed_h}, std::pair{"exa_z.json", printed_z}}) {
        const ToricInput inst = testsupport::load(file);
        const ValuationMatrix V = build_valuation(inst.f, coprime_basis(inst.f));
        CHECK(testsupport::column_multiset(V.V) == testsupport::column_multiset(printed));
        CHECK(V.V.column(V.V.cols() - 1) == infinity_column(inst.f));
    }
}

TEST_CASE("proportional valuation vectors are merged") {
    // f = (x(x-1)^2, x(x-1)^2, 1): the squarefree split separates x and x - 1,
    // whose vectors (1,1,0) and (2,2,0) are proportional, so one column remains.
    const std::vector<UPoly> f{parse_poly("x*(x-1)^2"), parse_poly("x*(x-1)^2"), parse_poly("1")};
    const CoprimeBasis basis = coprime_basis(f);
    CHECK(basis.elements.size() == 2);
    const ValuationMatrix V = build_valuation(f, basis);
    CHECK(V.V == IntMatrix{{3, -3}, {3, -3}, {0, 0}});
    REQUIRE(V.provenance.size() == 1);
    CHECK(V.provenance[0].size() == 2);
}

TEST_CASE("valuation invariants over random instances") {
    Rng rng(32);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
        const ToricInput inst = testsupport::random_instance(rng, n, rng.uniform(1, 3), 4);
        const ValuationMatrix V = build_valuation(inst.f, coprime_basis(inst.f));
        for (std::size_t r = 0; r < V.V.rows(); ++r) {
            Integer s = 0;
            for (std::size_t c = 0; c < V.V.cols(); ++c) s += V.V(r, c);
            CHECK(s == 0);
        }
        const std::size_t finite = V.finite_columns();
        for (std::size_t a = 0; a < finite; ++a)
            for (std::size_t b = a + 1; b < finite; ++b) CHECK_FALSE(proportional(V.V.column(a), V.V.column(b)));
    }
}
