#ifndef ATORIC_UNIPOLY_HPP
#define ATORIC_UNIPOLY_HPP

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "atoric/exactmath.hpp"

namespace atoric {

/// Dense univariate polynomial over Q, lowest degree first.
///
/// No trailing zero coefficients are stored; the zero polynomial has an empty
/// coefficient vector and degree -1.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(RatVector coeffs);
    UPoly(std::initializer_list<Rational> coeffs) : UPoly(RatVector(coeffs)) {}

    static UPoly constant(const Rational& c);
    static UPoly x();

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    const RatVector& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of x^i (zero past the degree).
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    /// Leading coefficient; 0 for the zero polynomial.
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    UPoly monic() const;
    UPoly derivative() const;

    /// Horner evaluation.
    Rational eval(const Rational& x0) const;
    Integer eval(const Integer& x0) const;  // requires integer coefficients

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const Rational& c, const UPoly& a);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

private:
    void trim();
    RatVector coeffs_;
};

std::ostream& operator<<(std::ostream& os, const UPoly& f);

UPoly pow(const UPoly& f, unsigned exp);

/// Quotient and remainder of Euclidean division; throws on a zero divisor.
std::pair<UPoly, UPoly> divmod(const UPoly& f, const UPoly& g);

/// Parses expr := ['-'] term (('+'|'-') term)*, term := factor ('*' factor)*,
/// factor := base ('^' uint)?, base := int | int '/' posint | 'x' | '(' expr ')'.
/// Whitespace is ignored. Throws ParseError.
UPoly parse_poly(std::string_view text);

/// Upper bound on any single exponent accepted by parse_poly.
inline constexpr unsigned kMaxParseExponent = 100000;

/// Monic gcd; gcd(f, 0) = monic(f). Throws std::invalid_argument if both are zero.
UPoly poly_gcd(const UPoly& f, const UPoly& g);

/// Monic product of the distinct irreducible factors of a nonzero f.
UPoly squarefree_part(const UPoly& f);

/// Yun's algorithm: returns monic s_1, s_2, ... with f = lc * prod s_k^k.
/// Entry k-1 holds s_k (possibly the constant 1).
std::vector<UPoly> squarefree_decomposition(const UPoly& f);

/// Largest e with g^e | f. Throws std::invalid_argument for constant g or zero f.
unsigned multiplicity(const UPoly& f, const UPoly& g);

/// Pairwise-coprime monic squarefree non-constant g_1..g_m with
/// f_i = leading[i] * prod_j g_j^{exponents[i][j]}.
struct CoprimeBasis {
    std::vector<UPoly> elements;
    std::vector<Rational> leading;
    std::vector<std::vector<unsigned>> exponents;  // [input][element]
};

/// Throws InputError if any input is zero. Elements are ordered by degree,
/// then lexicographically by coefficient sequence (lowest degree first).
CoprimeBasis coprime_basis(std::span<const UPoly> fs);

/// Primitive integer multiple of f with positive leading coefficient, and the
/// rational scale s with primitive = s * f.
std::pair<UPoly, Rational> primitive_part(const UPoly& f);

}  // namespace atoric

#endif
