#ifndef HIGGS_RATFUNC_HPP
#define HIGGS_RATFUNC_HPP

#include <variant>
#include <vector>

#include "higgs/laurent.hpp"

namespace higgs {

struct DenFactor {
    LaurentPoly poly;
    int mult = 1;
};

struct NotPolynomial {
    std::vector<DenFactor> residual;
};

// Split f into unit * canonical: strip monomial content, make integer
// coefficients primitive, fix the sign of the canonically-first term.
// f = unit_coef * x^unit_mono * result.
LaurentPoly canonical_factor(const LaurentPoly& f, Monomial& unit_mono, Rational& unit_coef);

// Rational function kept as a polynomial numerator over a multiset of
// canonicalized binomial-type denominator factors. Cancellation is trial
// exact division; "is a Laurent polynomial" means the denominator empties.
class FactoredRat {
public:
    explicit FactoredRat(LaurentPoly num) : num_(std::move(num)) {}
    FactoredRat(LaurentPoly num, const std::vector<LaurentPoly>& den_factors);

    static FactoredRat zero(const VarSet& vs) { return FactoredRat(LaurentPoly::zero(vs)); }
    static FactoredRat one(const VarSet& vs) { return FactoredRat(LaurentPoly::one(vs)); }

    const LaurentPoly& num() const { return num_; }
    const std::vector<DenFactor>& den() const { return den_; }
    const VarSet& varset() const { return num_.varset(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    // Push one denominator factor (raw, any unit content) with multiplicity.
    void push_den(const LaurentPoly& factor, int mult = 1);

    FactoredRat operator*(const FactoredRat& o) const;
    FactoredRat operator*(const LaurentPoly& p) const;
    FactoredRat operator*(const Rational& c) const;
    FactoredRat operator+(const FactoredRat& o) const;
    FactoredRat operator-() const;

    // Divide num by denominator factors until nothing divides; strips unit
    // (single-term) factors into num.
    void reduce();

    std::variant<LaurentPoly, NotPolynomial> to_poly() const;
    // Convenience: to_poly or throw.
    LaurentPoly to_poly_or_throw(const std::string& what) const;

    // Fully expanded denominator product (for equality tests / diagnostics).
    LaurentPoly den_product() const;

    friend FactoredRat rf_frobenius(const FactoredRat& a, std::int64_t k);
    friend FactoredRat rf_specialize(const FactoredRat& a,
                                     const std::map<int, Binding>& bindings);
    // Exact equality as rational functions (cross-multiplied).
    friend bool rf_equal(const FactoredRat& a, const FactoredRat& b);

    // Sum of many values over a common denominator; reduces once at the end.
    static FactoredRat sum(const std::vector<FactoredRat>& parts, const VarSet& vs);

private:
    FactoredRat add_impl(const FactoredRat& o) const;  // no final reduce

    LaurentPoly num_;
    std::vector<DenFactor> den_;
};

LaurentPoly poly_pow(const LaurentPoly& p, int k);

}  // namespace higgs

#endif
