#include <doctest.h>

#include "atoric/errors.hpp"
#include "support.hpp"

using namespace atoric;
using testsupport::Rng;

namespace {

UPoly linear(long root) { return UPoly::x() - UPoly::constant(Rational(root)); }

UPoly product_of_roots(const std::vector<long>& roots) {
    UPoly f = UPoly::constant(1);
    for (long r : roots) f = f * linear(r);
    return f;
}

}  // namespace

TEST_CASE("parse and print") {
    CHECK(parse_poly("x^2+1").to_string() == "x^2 + 1");
    CHECK(parse_poly("x^3*(x-1)").to_string() == "x^4 - x^3");
    CHECK(parse_poly("(x-1)^2*(x+1)") == product_of_roots({1, 1, -1}));
    CHECK(parse_poly("-3/2*x^2 + x - 1").to_string() == "-3/2*x^2 + x - 1");
    CHECK(parse_poly(" 2 * ( x + 3 ) ").to_string() == "2*x + 6");
    CHECK(parse_poly("1").is_constant());
    CHECK(parse_poly("x-x").is_zero());
    CHECK(parse_poly("0").to_string() == "0");
    CHECK(parse_poly("(x^2)^3").degree() == 6);
}

TEST_CASE("parse errors carry positions") {
    auto position_of = [](const char* text) -> long {
        try {
            parse_poly(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    CHECK(position_of("x+") == 2);
    CHECK(position_of("(x-1") == 4);
    CHECK(position_of("x$1") == 1);
    CHECK(position_of("y") == 0);
    CHECK(position_of("x^") == 2);
    CHECK(position_of("") == 0);
    CHECK_THROWS_AS(parse_poly("x^1000000000"), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0"), InputError);
}

TEST_CASE("evaluation and division") {
    const UPoly f = parse_poly("x^3 - 2*x + 5");
    CHECK(f.eval(Rational(2)) == 9);
    CHECK(f.eval(Integer(-3)) == -16);
    CHECK(f.eval(Rational(1, 2)) == Rational(33, 8));
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const UPoly a = testsupport::random_f(rng, 4), b = testsupport::random_f(rng, 3);
        const auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd of products with known common part") {
    Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<long> common, left, right;
        for (int i = rng.uniform(0, 3); i > 0; --i) common.push_back(rng.uniform(-4, 4));
        // cofactors use disjoint root ranges so they are coprime
        for (int i = rng.uniform(0, 3); i > 0; --i) left.push_back(rng.uniform(5, 9));
        for (int i = rng.uniform(0, 3); i > 0; --i) right.push_back(rng.uniform(10, 14));
        const UPoly g = product_of_roots(common);
        const UPoly f = g * product_of_roots(left) * UPoly::constant(Rational(rng.uniform(1, 5)));
        const UPoly h = g * product_of_roots(right) * UPoly::constant(Rational(-rng.uniform(1, 5)));
        CHECK(poly_gcd(f, h) == g);
    }
    CHECK_THROWS_AS(poly_gcd(UPoly{}, UPoly{}), std::invalid_argument);
    CHECK(poly_gcd(parse_poly("2*x+4"), UPoly{}) == parse_poly("x+2"));
}

TEST_CASE("squarefree decomposition rebuilds the input") {
    Rng rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        const UPoly f = testsupport::random_f(rng, 6);
        if (f.is_constant()) continue;
        const auto parts = squarefree_decomposition(f);
        UPoly rebuilt = UPoly::constant(f.leading());
        for (std::size_t k = 0; k < parts.size(); ++k) {
            rebuilt = rebuilt * pow(parts[k], static_cast<unsigned>(k + 1));
            if (!parts[k].is_constant()) CHECK(poly_gcd(parts[k], parts[k].derivative()).is_constant());
        }
        CHECK(rebuilt == f);
        const UPoly sf = squarefree_part(f);
        CHECK(poly_gcd(sf, sf.derivative()).is_constant());
        CHECK(divmod(f, sf).second.is_zero());
    }
}

TEST_CASE("multiplicity") {
    const UPoly f = parse_poly("x^3*(x-1)^2*(x^2+1)");
    CHECK(multiplicity(f, parse_poly("x")) == 3);
    CHECK(multiplicity(f, parse_poly("x-1")) == 2);
    CHECK(multiplicity(f, parse_poly("x^2+1")) == 1);
    CHECK(multiplicity(f, parse_poly("x+5")) == 0);
    CHECK_THROWS_AS(multiplicity(f, parse_poly("3")), std::invalid_argument);
}

TEST_CASE("coprime basis: pairwise coprime, squarefree, exact exponents") {
    Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<UPoly> fs;
        for (int i = 0; i < 5; ++i) fs.push_back(testsupport::random_f(rng, 4));
        const CoprimeBasis b = coprime_basis(fs);
        for (std::size_t j = 0; j < b.elements.size(); ++j) {
            const UPoly& g = b.elements[j];
            CHECK_FALSE(g.is_constant());
            CHECK(g.leading() == 1);
            CHECK(poly_gcd(g, g.derivative()).is_constant());
            for (std::size_t l = j + 1; l < b.elements.size(); ++l) CHECK(poly_gcd(g, b.elements[l]).is_constant());
        }
        for (std::size_t i = 0; i < fs.size(); ++i) {
            UPoly rebuilt = UPoly::constant(b.leading[i]);
            for (std::size_t j = 0; j < b.elements.size(); ++j)
                rebuilt = rebuilt * pow(b.elements[j], b.exponents[i][j]);
            CHECK(rebuilt == fs[i]);
        }
    }
}

TEST_CASE("coprime basis keeps factors of different multiplicity apart") {
    // (x-1)^2 (x-2): the two roots must land in different basis elements.
    const std::vector<UPoly> fs{parse_poly("(x-1)^2*(x-2)"), parse_poly("x")};
    const CoprimeBasis b = coprime_basis(fs);
    REQUIRE(b.elements.size() == 3);
    CHECK(b.elements[0] == parse_poly("x-2"));
    CHECK(b.elements[1] == parse_poly("x-1"));
    CHECK(b.elements[2] == parse_poly("x"));
    CHECK(b.exponents[0] == std::vector<unsigned>{1, 2, 0});
}

TEST_CASE("coprime basis of the first golden instance") {
    const ToricInput inst = testsupport::load("exa_h.json");
    const CoprimeBasis b = coprime_basis(inst.f);
    std::vector<std::string> printed;
    for (const auto& g : b.elements) printed.push_back(g.to_string());
    CHECK(printed == std::vector<std::string>{"x - 2", "x - 1", "x", "x + 1", "x^2 + 1"});
    CHECK_THROWS_AS(coprime_basis(std::vector<UPoly>{UPoly{}}), InputError);
}

TEST_CASE("primitive part") {
    const auto [h, s] = primitive_part(parse_poly("-1/2*x^2 + 3/4"));
    CHECK(h == parse_poly("2*x^2 - 3"));
    CHECK(s == -4);
}
