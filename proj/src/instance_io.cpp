#include "atoric/instance_io.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "atoric/errors.hpp"

namespace atoric {

using nlohmann::json;

namespace {

Integer json_integer(const json& j, const std::string& where) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
        return Integer(static_cast<long>(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        Integer z;
        const bool digits = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos &&
                            s != "-";
        if (!digits || z.set_str(s, 10) != 0) throw InputError(where + ": not an integer: \"" + s + "\"");
        return z;
    }
    throw InputError(where + ": expected an integer, got " + j.dump());
}

json integer_json(const Integer& z) {
    static const Integer limit = Integer(1) << 53;
    if (abs(z) < limit) return json(z.get_si());
    return json(z.get_str());
}

json string_array(const IntVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

json string_rows(const std::vector<IntVector>& rows) {
    json out = json::array();
    for (const auto& r : rows) out.push_back(string_array(r));
    return out;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
    }
}

}  // namespace

ToricInput parse_instance(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw InputError("instance must be a JSON object");
    if (!doc.contains("A") || !doc["A"].is_array()) throw InputError("instance needs an array \"A\"");
    if (!doc.contains("f") || !doc["f"].is_array()) throw InputError("instance needs an array \"f\"");

    const json& rows = doc["A"];
    if (rows.empty()) throw InputError("A has no rows");
    std::size_t cols = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array()) throw InputError("A row " + std::to_string(i) + " is not an array");
        if (i == 0) cols = rows[i].size();
        if (rows[i].size() != cols) throw InputError("A is not rectangular");
    }
    IntMatrix A(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            A(i, j) = json_integer(rows[i][j], "A[" + std::to_string(i) + "][" + std::to_string(j) + "]");

    std::vector<UPoly> f;
    for (std::size_t i = 0; i < doc["f"].size(); ++i) {
        const json& e = doc["f"][i];
        const std::string where = "f[" + std::to_string(i) + "]";
        if (e.is_string()) {
            try {
                f.push_back(parse_poly(e.get<std::string>()));
            } catch (const ParseError& err) {
                throw ParseError(where + ": " + err.what(), err.position());
            }
        } else {
            f.push_back(UPoly::constant(Rational(json_integer(e, where))));
        }
    }
    return validate_input(std::move(A), std::move(f));
}

ToricInput read_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string write_instance(const IntMatrix& A, const std::vector<std::string>& f) {
    std::string out = "{\n  \"A\": [\n";
    for (std::size_t i = 0; i < A.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(integer_json(A(i, j)));
        out += "    " + row.dump() + (i + 1 < A.rows() ? ",\n" : "\n");
    }
    out += "  ],\n  \"f\": [\n";
    for (std::size_t i = 0; i < f.size(); ++i) out += "    " + json(f[i]).dump() + (i + 1 < f.size() ? ",\n" : "\n");
    out += "  ]\n}\n";
    return out;
}

std::string polygon_json(const NewtonPolygon& polygon) {
    json doc;
    doc["classification"] = std::string(to_string(polygon.classification));
    doc["vertices"] = string_rows(polygon.vertices);
    doc["edges"] = string_rows(polygon.edges);
    doc["lattice_points"] = string_rows(polygon.lattice_points);
    return doc.dump();
}

std::string polynomial_json(const ImplicitPolynomial& p) {
    json terms = json::array();
    for (const auto& t : p.terms) {
        json exps = json::array();
        for (const auto& e : t.exps) exps.push_back(integer_json(e));
        terms.push_back({{"coeff", t.coeff.get_str()}, {"exps", std::move(exps)}});
    }
    return json{{"terms", std::move(terms)}}.dump();
}

ImplicitPolynomial parse_polynomial_json(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array())
        throw InputError("polynomial needs an array \"terms\"");
    ImplicitPolynomial p;
    for (std::size_t k = 0; k < doc["terms"].size(); ++k) {
        const json& t = doc["terms"][k];
        const std::string where = "terms[" + std::to_string(k) + "]";
        if (!t.is_object() || !t.contains("coeff") || !t.contains("exps") || !t["exps"].is_array())
            throw InputError(where + ": needs \"coeff\" and \"exps\"");
        Term term;
        term.coeff = json_integer(t["coeff"], where + ".coeff");
        for (const auto& e : t["exps"]) {
            term.exps.push_back(json_integer(e, where + ".exps"));
            if (term.exps.back() < 0) throw InputError(where + ": negative exponent");
        }
        if (k == 0) p.nvars = term.exps.size();
        if (term.exps.size() != p.nvars) throw InputError(where + ": exponent vector length differs");
        p.terms.push_back(std::move(term));
    }
    return p;
}

namespace {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % n;
}

// Uniform degree-d exponent vector in n variables: choose the n-1 bar
// positions among d+n-1 slots (stars and bars).
IntVector random_monomial(std::mt19937_64& rng, unsigned n, unsigned d) {
    const std::uint64_t slots = std::uint64_t{d} + n - 1;
    std::set<std::uint64_t> bars;
    // Floyd's algorithm for a uniform (n-1)-subset.
    for (std::uint64_t j = slots - (n - 1); j < slots; ++j) {
        const std::uint64_t t = bounded(rng, j + 1);
        if (!bars.insert(t).second) bars.insert(j);
    }
    IntVector out;
    std::uint64_t prev = 0;
    for (auto b : bars) {
        out.emplace_back(static_cast<unsigned long>(b - prev));
        prev = b + 1;
    }
    out.emplace_back(static_cast<unsigned long>(slots - prev));
    return out;
}

std::string factor_expr(const std::array<unsigned, 5>& exps) {
    static const char* const base[] = {"(x-2)", "(x-1)", "x", "(x+1)", "(x+2)"};
    std::string out;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += base[i];
        if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace

std::string gen_instance(unsigned n, unsigned d, unsigned k, std::uint64_t seed) {
    if (n < 1) throw InputError("n must be at least 1");
    if (d < 1) throw InputError("d must be at least 1");
    Integer available;
    mpz_bin_uiui(available.get_mpz_t(), n + d - 1, d);
    const bool distinct = available >= n + 2;

    std::mt19937_64 rng(seed);
    constexpr int kAttempts = 1000;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::vector<IntVector> cols;
        std::set<IntVector> seen;
        while (cols.size() < n + 2) {
            IntVector m = random_monomial(rng, n, d);
            if (distinct && !seen.insert(m).second) continue;
            cols.push_back(std::move(m));
        }
        IntMatrix A = IntMatrix::from_columns(cols, n);
        std::vector<std::string> f;
        for (unsigned i = 0; i < n + 2; ++i) {
            std::array<unsigned, 5> exps{};
            for (auto& e : exps) e = static_cast<unsigned>(bounded(rng, std::uint64_t{k} + 1));
            f.push_back(factor_expr(exps));
        }
        if (rank_exact(A) != n) continue;
        return write_instance(A, f);
    }
    throw InputError("could not sample a full-rank A");
}

}  // namespace atoric
