#include "atoric/implicitize.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <tuple>

#include "atoric/errors.hpp"
#include "atoric/modular.hpp"

namespace atoric {

// ---------------------------------------------------------------------------
// ImplicitPolynomial

Integer ImplicitPolynomial::total_degree() const {
    if (terms.empty()) return 0;
    Integer d = 0;
    for (const auto& e : terms.front().exps) d += e;
    return d;
}

std::string ImplicitPolynomial::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        if (first) {
            if (t.coeff < 0) os << '-';
        } else {
            os << (t.coeff < 0 ? " - " : " + ");
        }
        const Integer mag = abs(t.coeff);
        bool constant = std::all_of(t.exps.begin(), t.exps.end(), [](const Integer& e) { return e == 0; });
        bool need_star = false;
        if (mag != 1 || constant) {
            os << mag.get_str();
            need_star = true;
        }
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            if (t.exps[i] == 0) continue;
            if (need_star) os << '*';
            os << 'u' << i;
            if (t.exps[i] != 1) os << '^' << t.exps[i].get_str();
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

ImplicitPolynomial normalize(std::size_t nvars, std::vector<IntVector> exps, const RatVector& coeffs) {
    if (exps.size() != coeffs.size()) throw std::invalid_argument("term count mismatch");
    const Integer den = common_denominator(coeffs);
    std::vector<Term> terms;
    for (std::size_t k = 0; k < exps.size(); ++k) {
        if (coeffs[k] == 0) continue;
        Rational scaled = coeffs[k] * den;
        terms.push_back({std::move(exps[k]), scaled.get_num()});
    }
    if (terms.empty()) throw std::invalid_argument("cannot normalize the zero polynomial");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exps > b.exps; });

    IntVector cs;
    for (const auto& t : terms) cs.push_back(t.coeff);
    Integer g = content(cs);
    if (terms.front().coeff < 0) g = -g;
    for (auto& t : terms) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
    return ImplicitPolynomial{nvars, std::move(terms)};
}

IntVector common_t_monomial(std::span<const IntVector> support, const IntMatrix& A) {
    if (support.empty()) throw std::invalid_argument("empty support");
    const IntVector alpha = multiply(A, support.front());
    for (const auto& v : support)
        if (multiply(A, v) != alpha) throw InconsistencyError("support does not share a common t-monomial");
    return alpha;
}

// ---------------------------------------------------------------------------
// Interpolation

namespace {

// The relation sum_v c_v prod_i f_i^{v_i} = 0 rewritten over the coprime basis:
// prod_i f_i^{v_i} = scale_v * G * prod_j h_j^{reduced_v,j}, with h_j the
// primitive integer multiple of g_j and G the common factor of all terms.
struct InterpolationSystem {
    std::vector<UPoly> h;
    std::vector<std::vector<unsigned>> reduced;  // [support][j]
    RatVector scale;                             // scale_v
    std::size_t degree = 0;                      // max_v deg prod_j h_j^{reduced}
};

InterpolationSystem build_system(const ToricInput& inst, std::span<const IntVector> support) {
    const CoprimeBasis basis = coprime_basis(inst.f);
    const std::size_t m = basis.elements.size();
    const std::size_t dim = inst.ambient();

    InterpolationSystem sys;
    RatVector s(m);
    for (std::size_t j = 0; j < m; ++j) {
        auto [prim, factor] = primitive_part(basis.elements[j]);
        sys.h.push_back(std::move(prim));
        s[j] = factor;
    }

    std::vector<IntVector> mult(support.size(), IntVector(m));
    IntVector low(m);
    for (std::size_t v = 0; v < support.size(); ++v) {
        for (std::size_t j = 0; j < m; ++j) {
            Integer acc = 0;
            for (std::size_t i = 0; i < dim; ++i) acc += support[v][i] * basis.exponents[i][j];
            mult[v][j] = acc;
            if (v == 0 || acc < low[j]) low[j] = acc;
        }
    }

    for (std::size_t v = 0; v < support.size(); ++v) {
        Rational scale = 1;
        for (std::size_t i = 0; i < dim; ++i) {
            if (support[v][i] < 0 || !support[v][i].fits_ulong_p())
                throw InconsistencyError("support exponent out of range");
            Rational pw;
            mpz_pow_ui(pw.get_num_mpz_t(), basis.leading[i].get_num_mpz_t(), support[v][i].get_ui());
            mpz_pow_ui(pw.get_den_mpz_t(), basis.leading[i].get_den_mpz_t(), support[v][i].get_ui());
            pw.canonicalize();
            scale *= pw;
        }
        std::vector<unsigned> red(m);
        std::size_t deg = 0;
        for (std::size_t j = 0; j < m; ++j) {
            // prod_j g_j^{mult} = prod_j s_j^{-mult} h_j^{mult}
            if (!mult[v][j].fits_ulong_p()) throw InconsistencyError("multiplicity out of range");
            Rational sp;
            mpz_pow_ui(sp.get_num_mpz_t(), s[j].get_den_mpz_t(), mult[v][j].get_ui());
            mpz_pow_ui(sp.get_den_mpz_t(), s[j].get_num_mpz_t(), mult[v][j].get_ui());
            sp.canonicalize();
            scale *= sp;
            const Integer r = mult[v][j] - low[j];
            if (!r.fits_uint_p()) throw InconsistencyError("reduced exponent out of range");
            red[j] = static_cast<unsigned>(r.get_ui());
            deg += static_cast<std::size_t>(sys.h[j].degree()) * red[j];
        }
        sys.degree = std::max(sys.degree, deg);
        sys.reduced.push_back(std::move(red));
        sys.scale.push_back(std::move(scale));
    }
    return sys;
}

std::vector<Integer> evaluation_points(const std::vector<UPoly>& h, std::size_t count, long offset) {
    std::vector<Integer> pts;
    for (long step = 0; pts.size() < count; ++step) {
        // offset, offset-1, offset+1, offset-2, ...
        const long delta = (step % 2 == 1) ? -(step + 1) / 2 : step / 2;
        const Integer x0 = Integer(offset) + delta;
        bool root = std::any_of(h.begin(), h.end(), [&](const UPoly& hj) { return hj.eval(x0) == 0; });
        if (!root) pts.push_back(x0);
    }
    return pts;
}

std::vector<std::size_t> iota(std::size_t n) {
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = i;
    return out;
}

bool all_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

RatVector solve_exact(const kernels::EvalPlan& plan) {
    RatMatrix M(plan.rows(), plan.columns());
    for (std::size_t r = 0; r < plan.rows(); ++r) {
        std::vector<Integer> base;
        for (const auto& hj : plan.factors()) base.push_back(hj.eval(plan.points()[r]));
        for (std::size_t v = 0; v < plan.columns(); ++v) {
            Integer entry = 1, pw;
            for (std::size_t j = 0; j < base.size(); ++j) {
                mpz_pow_ui(pw.get_mpz_t(), base[j].get_mpz_t(), plan.exponents()[v][j]);
                entry *= pw;
            }
            M(r, v) = Rational(entry);
        }
    }
    Nullspace ns = nullspace(M);
    if (ns.dimension != 1) throw NullspaceError(ns.dimension);
    return ns.basis.front();
}

IntVector to_integer_vector(const RatVector& c) {
    const Integer den = common_denominator(c);
    IntVector out;
    out.reserve(c.size());
    for (const auto& q : c) out.push_back(Rational(q * den).get_num());
    return out;
}

RatVector solve_multimodular(const kernels::EvalPlan& plan, const InterpolationOptions& opt, std::size_t* primes_used) {
    using modular::Word;
    const std::size_t k = plan.columns();
    const std::vector<std::size_t> all_rows = iota(plan.rows());

    // Full rank profile under one prime: rank_p <= rank_Q gives a certified
    // lower bound, and the independent rows are kept as the working subset.
    std::vector<std::size_t> subset;
    std::vector<Word> first_solution;
    std::size_t prime_index = 0;
    const std::size_t profile_attempts = 3;
    for (std::size_t attempt = 0; attempt < profile_attempts; ++attempt, ++prime_index) {
        const Word p = modular::large_primes(prime_index + 1)[prime_index];
        const auto rows = kernels::evaluation_rows_mod(opt.backend, plan, all_rows, p);
        modular::EchelonBasis eb(k, p);
        std::vector<std::size_t> chosen;
        for (std::size_t r = 0; r < rows.size() && eb.rank() < k; ++r)
            if (eb.insert(rows[r])) chosen.push_back(r);
        if (eb.rank() == k) throw NullspaceError(0);
        if (eb.rank() == k - 1) {
            subset = std::move(chosen);
            first_solution = eb.nullspace().front();
            break;
        }
    }
    // Persistent rank deficiency: settle the dimension over Q directly.
    if (subset.empty()) return solve_exact(plan);

    std::size_t pivot = 0;
    while (first_solution[pivot] == 0) ++pivot;

    IntVector residue(k);
    Integer modulus = 1;
    auto accumulate = [&](std::vector<Word> sol, Word p) {
        const Word scale = modular::inv(sol[pivot], p);
        for (auto& x : sol) x = modular::mul(x, scale, p);
        modular::crt_combine(residue, modulus, sol, p);
        modulus *= static_cast<unsigned long>(p);
    };
    {
        const Word p = modular::large_primes(prime_index + 1)[prime_index];
        accumulate(first_solution, p);
        ++prime_index;
    }

    std::optional<RatVector> previous;
    for (; prime_index < opt.max_primes; ++prime_index) {
        const Word p = modular::large_primes(prime_index + 1)[prime_index];
        const auto rows = kernels::evaluation_rows_mod(opt.backend, plan, subset, p);
        modular::EchelonBasis eb(k, p);
        for (const auto& row : rows) eb.insert(row);
        if (eb.rank() != k - 1) continue;  // unlucky prime
        auto sol = eb.nullspace().front();
        if (sol[pivot] == 0) continue;
        accumulate(std::move(sol), p);

        RatVector candidate;
        candidate.reserve(k);
        for (std::size_t v = 0; v < k; ++v) {
            auto q = modular::rational_reconstruct(residue[v], modulus);
            if (!q) break;
            candidate.push_back(std::move(*q));
        }
        if (candidate.size() != k) {
            previous.reset();
            continue;
        }
        const bool stable = previous && *previous == candidate;
        previous = candidate;
        if (!stable) continue;

        const IntVector coeffs = to_integer_vector(candidate);
        if (!all_zero(kernels::residuals(opt.backend, plan, subset, coeffs))) continue;
        // The subset has rank exactly k-1 over Q, so its nullspace is the span
        // of `candidate`; the full system's nullspace is contained in it.
        if (!all_zero(kernels::residuals(opt.backend, plan, all_rows, coeffs))) throw NullspaceError(0);
        if (primes_used) *primes_used = prime_index + 1;
        return candidate;
    }
    throw InconsistencyError("rational reconstruction did not converge within the prime budget");
}

}  // namespace

ImplicitPolynomial interpolate(const ToricInput& inst, std::span<const IntVector> support,
                               const InterpolationOptions& options, InterpolationStats* stats) {
    const std::size_t k = support.size();
    if (k < 2) throw std::invalid_argument("interpolation needs at least two support points");
    common_t_monomial(support, inst.A);

    InterpolationSystem sys = build_system(inst, support);
    const std::size_t r = k / 2;
    const std::size_t count = std::max(2 * r + 1, sys.degree + 1);
    kernels::EvalPlan plan(sys.h, sys.reduced, evaluation_points(sys.h, count, options.point_offset));

    std::size_t primes = 0;
    RatVector scaled = options.method == SolveMethod::exact ? solve_exact(plan)
                                                            : solve_multimodular(plan, options, &primes);
    if (stats) *stats = {k, plan.rows(), sys.degree, primes};

    RatVector coeffs(k);
    for (std::size_t v = 0; v < k; ++v) coeffs[v] = scaled[v] / sys.scale[v];
    return normalize(inst.ambient(), std::vector<IntVector>(support.begin(), support.end()), coeffs);
}

// ---------------------------------------------------------------------------
// Vanishing oracle

namespace {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    // Rejection sampling keeps the draw unbiased and platform-independent.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

Rational random_nonzero_rational(std::mt19937_64& rng) {
    const long num = static_cast<long>(draw_below(rng, 2000)) - 1000;
    const long den = static_cast<long>(draw_below(rng, 1000)) + 1;
    return make_rational(Integer(num == 0 ? 1001 : num), Integer(den));
}

Rational rational_pow(const Rational& base, const Integer& exp) {
    if (!exp.fits_slong_p()) throw std::overflow_error("exponent too large");
    long e = exp.get_si();
    Rational b = base;
    if (e < 0) {
        b = 1 / b;
        e = -e;
    }
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(e));
    out.canonicalize();
    return out;
}

Integer l1_norm(const UPoly& h) {
    Integer s = 0;
    for (const auto& c : h.coeffs()) s += abs(c.get_num());
    return s;
}

Integer integer_pow(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

// Exact zero test of sum_v c_v prod_i f_i(x)^{v_i} within each class of
// equal t-monomial A v. With f_i = h_i / s_i (h_i primitive over Z) each
// class becomes an integer polynomial G(x) = sum_v w_v prod_i h_i(x)^{v_i}
// whose coefficients are bounded by C = sum_v |w_v| prod_i |h_i|_1^{v_i}.
// For X > 2C, G(X) = 0 iff G = 0 (the top nonzero coefficient dominates),
// so a single evaluation at a power of two decides the identity.
bool symbolic_vanishes(const ImplicitPolynomial& p, const ToricInput& inst, std::string* witness) {
    const std::size_t dim = inst.ambient();
    std::vector<UPoly> h(dim);
    std::vector<Rational> scale(dim);
    std::vector<Integer> norm(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        std::tie(h[i], scale[i]) = primitive_part(inst.f[i]);
        norm[i] = l1_norm(h[i]);
    }

    struct Member {
        const Term* term;
        Rational weight;
    };
    std::map<IntVector, std::vector<Member>> classes;
    for (const auto& t : p.terms) {
        Rational w(t.coeff);
        for (std::size_t i = 0; i < dim; ++i)
            if (t.exps[i] != 0) w /= rational_pow(scale[i], t.exps[i]);
        classes[multiply(inst.A, t.exps)].push_back({&t, std::move(w)});
    }

    for (const auto& [tmono, members] : classes) {
        Integer lcm = 1;
        for (const auto& m : members) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.weight.get_den_mpz_t());
        Integer bound = 0;
        std::vector<Integer> weights;
        for (const auto& m : members) {
            weights.push_back(Rational(m.weight * lcm).get_num());
            Integer b = abs(weights.back());
            for (std::size_t i = 0; i < dim; ++i)
                if (m.term->exps[i] != 0) b *= integer_pow(norm[i], m.term->exps[i].get_ui());
            bound += b;
        }
        const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2) + 2;
        Integer X = Integer(1) << static_cast<mp_bitcnt_t>(bits);

        std::vector<Integer> hx(dim);
        for (std::size_t i = 0; i < dim; ++i) hx[i] = h[i].eval(X);
        std::map<std::pair<std::size_t, unsigned long>, Integer> powers;
        Integer total = 0;
        for (std::size_t k = 0; k < members.size(); ++k) {
            Integer value = weights[k];
            for (std::size_t i = 0; i < dim; ++i) {
                const unsigned long e = members[k].term->exps[i].get_ui();
                if (e == 0) continue;
                auto it = powers.find({i, e});
                if (it == powers.end()) it = powers.emplace(std::pair{i, e}, integer_pow(hx[i], e)).first;
                value *= it->second;
            }
            total += value;
        }
        if (total != 0) {
            if (witness) {
                std::ostringstream os;
                os << "coefficient of t^(";
                for (std::size_t r = 0; r < tmono.size(); ++r) os << (r ? "," : "") << tmono[r].get_str();
                os << ") is a nonzero polynomial in x";
                *witness = os.str();
            }
            return false;
        }
    }
    return true;
}

}  // namespace

VanishingReport verify_vanishing(const ImplicitPolynomial& p, const ToricInput& inst, std::size_t trials,
                                 std::uint64_t seed) {
    VanishingReport report;
    std::string witness;
    report.symbolic_ok = symbolic_vanishes(p, inst, &witness);
    if (!report.symbolic_ok) report.witness = witness;

    std::mt19937_64 rng(seed);
    const std::size_t dim = inst.ambient();
    report.random_ok = true;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        Rational x;
        RatVector fx(dim);
        for (;;) {
            x = random_nonzero_rational(rng);
            bool ok = true;
            for (std::size_t i = 0; i < dim && ok; ++i) {
                fx[i] = inst.f[i].eval(x);
                ok = fx[i] != 0;
            }
            if (ok) break;
        }
        RatVector t(inst.n);
        for (auto& tr : t) tr = random_nonzero_rational(rng);

        RatVector u(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            Rational ui = fx[i];
            for (std::size_t r = 0; r < inst.n; ++r) ui *= rational_pow(t[r], inst.A(r, i));
            u[i] = ui;
        }
        Rational value = 0;
        for (const auto& term : p.terms) {
            Rational mono = Rational(term.coeff);
            for (std::size_t i = 0; i < dim; ++i)
                if (term.exps[i] != 0) mono *= rational_pow(u[i], term.exps[i]);
            value += mono;
        }
        ++report.trials;
        if (value != 0) {
            report.random_ok = false;
            if (!report.witness) {
                std::ostringstream os;
                os << "p(u) = " << value.get_str() << " at x = " << x.get_str() << ", t = (";
                for (std::size_t r = 0; r < t.size(); ++r) os << (r ? "," : "") << t[r].get_str();
                os << ")";
                report.witness = os.str();
            }
            break;
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Pipeline

Analysis analyze(const ToricInput& inst) {
    Analysis a;
    a.pluecker = build_pluecker(inst.A);
    a.basis = coprime_basis(inst.f);
    a.valuation = build_valuation(inst.f, a.basis);
    a.edges = edge_matrix(a.pluecker, a.valuation);
    return a;
}

namespace {

NewtonPolygon shrink(const NewtonPolygon& polygon, unsigned long m) {
    NewtonPolygon out = polygon;
    for (auto& v : out.vertices)
        for (auto& x : v) x /= m;
    for (auto& e : out.edges)
        for (auto& x : e) x /= m;
    out.lattice_points.clear();
    return out;
}

// Divisors > 1 of the gcd of all vertex coordinates, largest first.
std::vector<unsigned long> vertex_divisors(const NewtonPolygon& polygon) {
    Integer g = 0;
    for (const auto& v : polygon.vertices)
        for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    std::vector<unsigned long> out;
    if (!g.fits_ulong_p()) return out;
    const unsigned long n = g.get_ui();
    for (unsigned long m = n; m > 1; --m)
        if (n % m == 0) out.push_back(m);
    return out;
}

}  // namespace

ImplicitizationResult implicitize(const ToricInput& inst, const InterpolationOptions& options) {
    ImplicitizationResult out;
    out.analysis = analyze(inst);
    if (out.analysis.edges.classification == Classification::NotHypersurface) throw NotHypersurfaceError();

    auto attempt = [&](NewtonPolygon polygon) {
        polygon.lattice_points = lattice_points(polygon, inst.A, options.backend);
        out.polynomial = interpolate(inst, polygon.lattice_points, options, &out.stats);
        out.polygon = std::move(polygon);
    };

    NewtonPolygon polygon = assemble_polygon(out.analysis.edges, out.analysis.pluecker);
    try {
        attempt(polygon);
        return out;
    } catch (const NullspaceError& e) {
        if (e.dimension() == 0) {
            out.orientation_fallback = true;
            attempt(assemble_polygon(out.analysis.edges, out.analysis.pluecker, opposite(polygon.orientation)));
            return out;
        }
        // Several independent solutions: the parameterization covers Z more
        // than once and the polygon is m times the Newton polygon of the
        // reduced equation. Smaller copies than the true one admit no
        // solution at all, so the first one-dimensional hit is it.
        for (unsigned long m : vertex_divisors(polygon)) {
            try {
                attempt(shrink(polygon, m));
                out.multiplicity = m;
                return out;
            } catch (const NullspaceError& inner) {
                if (inner.dimension() > 1) throw;
            }
        }
        throw;
    }
}

}  // namespace atoric
