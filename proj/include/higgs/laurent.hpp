#ifndef HIGGS_LAURENT_HPP
#define HIGGS_LAURENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "higgs/rational.hpp"
#include "higgs/varset.hpp"

namespace higgs {

// Exponent vector over a VarSet; entries may be negative.
using Monomial = std::vector<std::int64_t>;

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);
Monomial mono_pow(const Monomial& a, std::int64_t k);
Monomial mono_one(int arity);

// What a variable gets substituted to in specialize(): either a monomial
// over the same VarSet or a rational constant.
struct Binding {
    bool is_monomial = false;
    Monomial mono;
    Rational value;

    static Binding to_monomial(Monomial m) {
        Binding b;
        b.is_monomial = true;
        b.mono = std::move(m);
        return b;
    }
    static Binding to_constant(Rational r) {
        Binding b;
        b.value = std::move(r);
        return b;
    }
};

// Sparse multivariate Laurent polynomial over Q. Terms are kept in a map
// keyed lexicographically on the exponent vector, which fixes the canonical
// iteration order; no zero coefficients are ever stored.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    explicit LaurentPoly(VarSet vs) : vs_(std::move(vs)) {}
    LaurentPoly(VarSet vs, const Rational& c);

    static LaurentPoly zero(const VarSet& vs) { return LaurentPoly(vs); }
    static LaurentPoly one(const VarSet& vs) { return LaurentPoly(vs, 1); }
    static LaurentPoly term(const VarSet& vs, Monomial m, const Rational& c);
    static LaurentPoly variable(const VarSet& vs, int var, std::int64_t e = 1);

    const VarSet& varset() const { return vs_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly operator*(const Rational& c) const;
    LaurentPoly mul_monomial(const Monomial& m, const Rational& c = 1) const;

    bool operator==(const LaurentPoly& o) const {
        return vs_ == o.vs_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    std::string to_text() const;

private:
    VarSet vs_;
    TermMap terms_;
};

// Exact quotient n/d in the Laurent ring (monomials are units), or nullopt
// when d does not divide n. Leading-term elimination under the canonical
// order after shifting both operands to non-negative exponents.
std::optional<LaurentPoly> exact_div(const LaurentPoly& n, const LaurentPoly& d);

// Adams operation psi_k: every variable exponent multiplied by k.
LaurentPoly frobenius(const LaurentPoly& p, std::int64_t k);

// Simultaneous substitution. A variable bound to a monomial must not occur
// in that monomial.
LaurentPoly specialize(const LaurentPoly& p, const std::map<int, Binding>& bindings);

}  // namespace higgs

#endif
