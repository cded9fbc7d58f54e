#ifndef ATORIC_MODULAR_HPP
#define ATORIC_MODULAR_HPP

// Word-size prime-field arithmetic, CRT and rational reconstruction.
//
// Used only as an accelerator for exact linear algebra: every result derived
// from these routines is either a rigorous bound (rank mod p <= rank over Q)
// or is verified exactly over the integers afterwards.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "atoric/exactmath.hpp"

namespace atoric::modular {

using Word = std::uint64_t;

inline Word add(Word a, Word b, Word p) { return a >= p - b ? a - (p - b) : a + b; }
inline Word sub(Word a, Word b, Word p) { return a >= b ? a - b : a + (p - b); }
inline Word mul(Word a, Word b, Word p) {
    return static_cast<Word>(static_cast<unsigned __int128>(a) * b % p);
}
Word pow(Word base, std::uint64_t exp, Word p);
Word inv(Word a, Word p);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(Word n);

/// The `count` largest primes below 2^62, descending. Deterministic.
const std::vector<Word>& large_primes(std::size_t count);

Word reduce(const Integer& z, Word p);
/// Throws std::domain_error when p divides the denominator.
Word reduce(const Rational& q, Word p);

/// Reduced row echelon basis over Z/p, grown one row at a time.
class EchelonBasis {
public:
    EchelonBasis(std::size_t cols, Word p) : cols_(cols), p_(p) {}

    /// Returns true if the row was independent of the rows inserted so far.
    bool insert(std::vector<Word> row);

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    /// One basis vector per free column, with a 1 in that column.
    std::vector<std::vector<Word>> nullspace() const;

private:
    std::size_t cols_;
    Word p_;
    std::vector<std::vector<Word>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Updates (residue, modulus) so that residue == r (mod p) as well.
void crt_accumulate(Integer& residue, Integer& modulus, Word r, Word p);

/// Vector form: lifts every residues[k] (mod modulus) to the residue mod
/// modulus*p that is also congruent to r[k] mod p. The caller updates modulus.
void crt_combine(std::span<Integer> residues, const Integer& modulus, std::span<const Word> r, Word p);

/// Finds n/d with |n|, d <= sqrt(modulus/2) and n == a*d (mod modulus).
std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& modulus);

}  // namespace atoric::modular

#endif
