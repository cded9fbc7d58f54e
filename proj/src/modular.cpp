#include "atoric/modular.hpp"

#include <mutex>
#include <stdexcept>

namespace atoric::modular {

Word pow(Word base, std::uint64_t exp, Word p) {
    Word result = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) result = mul(result, base, p);
        base = mul(base, base, p);
        exp >>= 1;
    }
    return result;
}

Word inv(Word a, Word p) {
    if (a % p == 0) throw std::domain_error("zero has no inverse");
    return pow(a, p - 2, p);
}

bool is_prime(Word n) {
    if (n < 2) return false;
    for (Word q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    Word d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (Word a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        Word x = pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

const std::vector<Word>& large_primes(std::size_t count) {
    static std::mutex mutex;
    static std::vector<Word> cache;
    std::lock_guard lock(mutex);
    Word candidate = cache.empty() ? (Word{1} << 62) - 1 : cache.back() - 2;
    while (cache.size() < count) {
        if (is_prime(candidate)) cache.push_back(candidate);
        candidate -= 2;
    }
    return cache;
}

Word reduce(const Integer& z, Word p) {
    return static_cast<Word>(mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p)));
}

Word reduce(const Rational& q, Word p) {
    Word den = static_cast<Word>(mpz_fdiv_ui(q.get_den_mpz_t(), static_cast<unsigned long>(p)));
    if (den == 0) throw std::domain_error("prime divides denominator");
    Word num = static_cast<Word>(mpz_fdiv_ui(q.get_num_mpz_t(), static_cast<unsigned long>(p)));
    return mul(num, inv(den, p), p);
}

bool EchelonBasis::insert(std::vector<Word> row) {
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Word factor = row[pivots_[k]];
        if (factor == 0) continue;
        const auto& basis_row = rows_[k];
        for (std::size_t j = pivots_[k]; j < cols_; ++j)
            if (basis_row[j]) row[j] = sub(row[j], mul(factor, basis_row[j], p_), p_);
    }
    std::size_t lead = 0;
    while (lead < cols_ && row[lead] == 0) ++lead;
    if (lead == cols_) return false;

    const Word scale = inv(row[lead], p_);
    for (std::size_t j = lead; j < cols_; ++j) row[j] = mul(row[j], scale, p_);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Word factor = rows_[k][lead];
        if (factor == 0) continue;
        for (std::size_t j = lead; j < cols_; ++j)
            if (row[j]) rows_[k][j] = sub(rows_[k][j], mul(factor, row[j], p_), p_);
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(lead);
    return true;
}

std::vector<std::vector<Word>> EchelonBasis::nullspace() const {
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots_) is_pivot[c] = true;
    std::vector<std::vector<Word>> out;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Word> v(cols_, 0);
        v[free] = 1;
        for (std::size_t k = 0; k < rows_.size(); ++k)
            v[pivots_[k]] = rows_[k][free] ? p_ - rows_[k][free] : 0;
        out.push_back(std::move(v));
    }
    return out;
}

void crt_combine(std::span<Integer> residues, const Integer& modulus, std::span<const Word> r, Word p) {
    if (residues.size() != r.size()) throw std::invalid_argument("residue count mismatch");
    // residue + modulus * t == r (mod p)
    const Word m_inv = inv(reduce(modulus, p), p);
    for (std::size_t k = 0; k < residues.size(); ++k) {
        const Word t = mul(sub(r[k] % p, reduce(residues[k], p), p), m_inv, p);
        if (t) residues[k] += modulus * static_cast<unsigned long>(t);
    }
}

void crt_accumulate(Integer& residue, Integer& modulus, Word r, Word p) {
    crt_combine(std::span<Integer>(&residue, 1), modulus, std::span<const Word>(&r, 1), p);
    modulus *= static_cast<unsigned long>(p);
}

std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& modulus) {
    Integer bound;
    Integer half = modulus / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());

    Integer r0 = modulus, r1 = a % modulus;
    if (r1 < 0) r1 += modulus;
    Integer t0 = 0, t1 = 1;
    Integer q, tmp;
    while (r1 > bound) {
        mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
        tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    Integer g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    return make_rational(r1, t1);
}

}  // namespace atoric::modular
