#ifndef ATORIC_INSTANCE_IO_HPP
#define ATORIC_INSTANCE_IO_HPP

// JSON documents read and written by the command-line tool.

#include <cstdint>
#include <string>
#include <string_view>

#include "atoric/implicitize.hpp"
#include "atoric/pluecker.hpp"
#include "atoric/polygon.hpp"

namespace atoric {

/// {"A": [[...], ...], "f": ["<expr>", ...]}. Integers may be JSON numbers or
/// decimal strings. Throws InputError (ParseError for expressions) and
/// validates the instance.
ToricInput parse_instance(std::string_view text);
ToricInput read_instance_file(const std::string& path);

/// Inverse of parse_instance: numbers when |a| < 2^53, strings otherwise.
std::string write_instance(const IntMatrix& A, const std::vector<std::string>& f);

/// {"classification", "vertices", "edges", "lattice_points"}, integers as strings.
std::string polygon_json(const NewtonPolygon& polygon);

/// {"terms": [{"coeff": "<decimal>", "exps": [...]}]}
std::string polynomial_json(const ImplicitPolynomial& p);
ImplicitPolynomial parse_polynomial_json(std::string_view text);

/// Random instance in the style of the efficiency benchmarks: n+2 distinct
/// degree-d monomials in n variables (with repetition only when fewer than
/// n+2 exist), f_i = (x-2)^a (x-1)^b x^c (x+1)^e (x+2)^g with exponents
/// uniform in 0..k. Resamples rank-deficient A. Deterministic in seed.
std::string gen_instance(unsigned n, unsigned d, unsigned k, std::uint64_t seed);

}  // namespace atoric

#endif
