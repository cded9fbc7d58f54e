#include <doctest.h>

#include "atoric/errors.hpp"
#include "atoric/instance_io.hpp"
#include "support.hpp"

using namespace atoric;
using testsupport::iv;

TEST_CASE("instance integers as numbers, strings and big values") {
    const ToricInput a = parse_instance(R"({"A": [[1, 1, 1]], "f": ["1", 1, "x"]})");
    CHECK(a.n == 1);
    CHECK(a.f[1].to_string() == "1");
    const ToricInput b = parse_instance(R"({"A": [["1", "1", "1"]], "f": ["1", "1", "x"]})");
    CHECK(b.A == a.A);
    const ToricInput big =
        parse_instance(R"({"A": [["123456789012345678901234567890", "123456789012345678901234567890", "123456789012345678901234567890"]], "f": ["1", "12345678901234567890123", "x"]})");
    CHECK(big.A(0, 0).get_str() == "123456789012345678901234567890");
    CHECK(big.f[1].to_string() == "12345678901234567890123");
}

TEST_CASE("instance errors") {
    CHECK_THROWS_AS(parse_instance("{"), ParseError);
    CHECK_THROWS_AS(parse_instance("[]"), InputError);
    CHECK_THROWS_AS(parse_instance(R"({"f": ["1"]})"), InputError);
    CHECK_THROWS_AS(parse_instance(R"({"A": [[1, 1, 1]], "f": ["1", "1"]})"), InputError);
    CHECK_THROWS_AS(parse_instance(R"({"A": [[1, 1], [1]], "f": ["1", "1", "x"]})"), InputError);
    CHECK_THROWS_AS(parse_instance(R"({"A": [[1, 1.5, 1]], "f": ["1", "1", "x"]})"), InputError);
    CHECK_THROWS_AS(parse_instance(R"({"A": [[1, "1x", 1]], "f": ["1", "1", "x"]})"), InputError);
    CHECK_THROWS_AS(parse_instance(R"({"A": [[1, 1, 1]], "f": ["1", "0", "x"]})"), InputError);
    try {
        parse_instance(R"({"A": [[1, 1, 1]], "f": ["1", "x+", "x"]})");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("f[1]") != std::string::npos);
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(read_instance_file("/nonexistent/instance.json"), InputError);
}

TEST_CASE("generator is deterministic and round-trips") {
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned d = 1; d <= 3; ++d)
            for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                const std::string text = gen_instance(n, d, 2, seed);
                CHECK(text == gen_instance(n, d, 2, seed));
                const ToricInput inst = parse_instance(text);
                CHECK(inst.n == n);
                CHECK(inst.d == d);
                CHECK(rank_exact(inst.A) == n);
                std::vector<std::string> f;
                for (const auto& p : inst.f) f.push_back(p.to_string());
                CHECK(parse_instance(write_instance(inst.A, f)).A == inst.A);
            }
    CHECK(gen_instance(2, 2, 1, 1) != gen_instance(2, 2, 1, 2));
    CHECK_THROWS_AS(gen_instance(0, 1, 1, 1), InputError);
    CHECK_THROWS_AS(gen_instance(1, 0, 1, 1), InputError);
}

TEST_CASE("k = 0 gives constant coefficients") {
    const ToricInput inst = parse_instance(gen_instance(1, 1, 0, 1));
    for (const auto& f : inst.f) CHECK(f.degree() == 0);
    CHECK(analyze(inst).edges.classification == Classification::NotHypersurface);
}

TEST_CASE("polygon and polynomial JSON") {
    const ToricInput inst = testsupport::load("exa_z.json");
    const ImplicitizationResult r = implicitize(inst);
    const auto doc = nlohmann::json::parse(polygon_json(r.polygon));
    CHECK(doc["classification"] == "AlmostToric");
    CHECK(doc["vertices"].size() == 6);
    CHECK(doc["edges"].size() == 6);
    CHECK(doc["lattice_points"].size() == 20);
    CHECK(doc["vertices"][0][0].is_string());

    const ImplicitPolynomial back = parse_polynomial_json(polynomial_json(r.polynomial));
    CHECK(testsupport::same_polynomial(back, r.polynomial));
    CHECK_THROWS_AS(parse_polynomial_json(R"({"terms": [{"coeff": "1", "exps": [1, -1]}]})"), InputError);
    CHECK_THROWS_AS(parse_polynomial_json(R"({"terms": [{"coeff": "1", "exps": [1]}, {"coeff": "1", "exps": [1, 0]}]})"),
                    InputError);
    CHECK_THROWS_AS(parse_polynomial_json(R"({"terms": 3})"), InputError);
}
