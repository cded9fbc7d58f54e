#include "atoric/unipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "atoric/errors.hpp"

namespace atoric {

UPoly::UPoly(RatVector coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(RatVector{c}); }
UPoly UPoly::x() { return UPoly(RatVector{0, 1}); }

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    const Rational lc = leading();
    RatVector c = coeffs_;
    for (auto& a : c) a /= lc;
    return UPoly(std::move(c));
}

UPoly UPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    RatVector c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return UPoly(std::move(c));
}

Rational UPoly::eval(const Rational& x0) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + *it;
    return acc;
}

Integer UPoly::eval(const Integer& x0) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (it->get_den() != 1) throw std::domain_error("integer evaluation of a non-integer polynomial");
        acc = acc * x0 + it->get_num();
    }
    return acc;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    RatVector c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a) {
    RatVector c = a.coeffs_;
    for (auto& x : c) x = -x;
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RatVector c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UPoly(std::move(c));
}

UPoly operator*(const Rational& s, const UPoly& a) {
    RatVector c = a.coeffs_;
    for (auto& x : c) x *= s;
    return UPoly(std::move(c));
}

UPoly pow(const UPoly& f, unsigned exp) {
    UPoly result = UPoly::constant(1);
    UPoly base = f;
    while (exp) {
        if (exp & 1) result = result * base;
        exp >>= 1;
        if (exp) base = base * base;
    }
    return result;
}

std::pair<UPoly, UPoly> divmod(const UPoly& f, const UPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (f.degree() < g.degree()) return {UPoly{}, f};
    RatVector rem = f.coeffs();
    RatVector quot(f.degree() - g.degree() + 1);
    const Rational lc = g.leading();
    const auto& gc = g.coeffs();
    for (int k = f.degree() - g.degree(); k >= 0; --k) {
        const Rational q = rem[k + g.degree()] / lc;
        quot[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j < gc.size(); ++j) rem[k + j] -= q * gc[j];
    }
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

// ---------------------------------------------------------------------------
// Printing and parsing

std::string UPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const Rational mag = abs(c);
        if (k == 0 || mag != 1) {
            os << mag.get_str();
            if (k > 0) os << '*';
        }
        if (k >= 1) os << 'x';
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const UPoly& f) { return os << f.to_string(); }

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    UPoly parse() {
        UPoly result = expr();
        skip_space();
        if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return result;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    UPoly expr() {
        bool negate = accept('-');
        UPoly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    UPoly term() {
        UPoly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    UPoly factor() {
        UPoly b = base();
        if (accept('^')) {
            skip_space();
            const std::size_t start = pos_;
            Integer e = digits("exponent");
            if (e > kMaxParseExponent) throw ParseError("exponent overflow", start);
            b = pow(b, static_cast<unsigned>(e.get_ui()));
        }
        return b;
    }

    UPoly base() {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == 'x') {
            ++pos_;
            return UPoly::x();
        }
        if (c == '(') {
            ++pos_;
            UPoly inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = digits("integer");
            if (accept('/')) {
                skip_space();
                const std::size_t start = pos_;
                Integer den = digits("denominator");
                if (den == 0) throw ParseError("zero denominator", start);
                return UPoly::constant(make_rational(num, den));
            }
            return UPoly::constant(Rational(num));
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    Integer digits(const char* what) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError(std::string("expected ") + what, start);
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

UPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------------------
// gcd and factor structure

UPoly poly_gcd(const UPoly& f, const UPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    UPoly a = f.monic();
    UPoly b = g.monic();
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

UPoly squarefree_part(const UPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
    if (f.is_constant()) return UPoly::constant(1);
    return divmod(f, poly_gcd(f, f.derivative())).first.monic();
}

std::vector<UPoly> squarefree_decomposition(const UPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
    std::vector<UPoly> out;
    if (f.is_constant()) return out;
    const UPoly fm = f.monic();
    const UPoly d = fm.derivative();
    UPoly a = poly_gcd(fm, d);
    UPoly b = divmod(fm, a).first;
    UPoly c = divmod(d, a).first;
    UPoly e = c - b.derivative();
    while (!b.is_constant()) {
        UPoly s = poly_gcd(b, e);
        out.push_back(s);
        b = divmod(b, s).first;
        c = divmod(e, s).first;
        e = c - b.derivative();
    }
    return out;
}

unsigned multiplicity(const UPoly& f, const UPoly& g) {
    if (g.is_constant()) throw std::invalid_argument("multiplicity with respect to a constant");
    if (f.is_zero()) throw std::invalid_argument("multiplicity in the zero polynomial");
    unsigned e = 0;
    UPoly rest = f;
    for (;;) {
        auto [q, r] = divmod(rest, g);
        if (!r.is_zero()) return e;
        rest = std::move(q);
        ++e;
    }
}

namespace {

bool canonical_less(const UPoly& a, const UPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                        b.coeffs().end());
}

void push_unique(std::vector<UPoly>& set, UPoly p) {
    if (p.is_constant()) return;
    if (std::find(set.begin(), set.end(), p) == set.end()) set.push_back(std::move(p));
}

}  // namespace

CoprimeBasis coprime_basis(std::span<const UPoly> fs) {
    std::vector<UPoly> work;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].is_zero()) throw InputError("f_" + std::to_string(i) + " is the zero polynomial");
        for (auto& s : squarefree_decomposition(fs[i])) push_unique(work, std::move(s));
    }

    // Split non-coprime pairs {p, q} into {gcd, p/gcd, q/gcd} until none remain.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < work.size() && !changed; ++a) {
            for (std::size_t b = a + 1; b < work.size() && !changed; ++b) {
                UPoly g = poly_gcd(work[a], work[b]);
                if (g.is_constant()) continue;
                UPoly pa = divmod(work[a], g).first.monic();
                UPoly pb = divmod(work[b], g).first.monic();
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(b));
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(a));
                std::vector<UPoly> next;
                for (auto& p : work) push_unique(next, std::move(p));
                push_unique(next, std::move(g));
                push_unique(next, std::move(pa));
                push_unique(next, std::move(pb));
                work = std::move(next);
                changed = true;
            }
        }
    }
    std::sort(work.begin(), work.end(), canonical_less);

    CoprimeBasis basis;
    basis.elements = std::move(work);
    for (const auto& f : fs) {
        std::vector<unsigned> exps;
        UPoly rebuilt = UPoly::constant(f.leading());
        for (const auto& g : basis.elements) {
            exps.push_back(multiplicity(f, g));
            rebuilt = rebuilt * pow(g, exps.back());
        }
        if (!(rebuilt == f)) throw InconsistencyError("coprime basis does not reconstruct " + f.to_string());
        basis.leading.push_back(f.leading());
        basis.exponents.push_back(std::move(exps));
    }
    return basis;
}

std::pair<UPoly, Rational> primitive_part(const UPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("primitive part of the zero polynomial");
    Integer den = common_denominator(f.coeffs());
    IntVector nums;
    for (const auto& c : f.coeffs()) nums.push_back(Rational(c * den).get_num());
    Integer g = content(nums);
    Rational scale = make_rational(den, g);
    if (f.leading() < 0) scale = -scale;
    return {scale * f, scale};
}

}  // namespace atoric
