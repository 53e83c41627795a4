#ifndef HIGGS_SERIES_HPP
#define HIGGS_SERIES_HPP

#include <vector>

#include "higgs/ratfunc.hpp"

namespace higgs {

// Truncated power series in T with FactoredRat coefficients c_0..c_R.
class TSeries {
public:
    TSeries(VarSet vs, int order);

    int order() const { return order_; }
    const VarSet& varset() const { return vs_; }
    const FactoredRat& coeff(int r) const;
    void set_coeff(int r, FactoredRat c);

    static TSeries one(const VarSet& vs, int order);

    friend TSeries series_mul(const TSeries& a, const TSeries& b);
    // termwise scalar multiplication by a polynomial
    TSeries scale(const LaurentPoly& p) const;

    bool equals(const TSeries& o) const;  // coefficientwise rf_equal

private:
    VarSet vs_;
    int order_;
    std::vector<FactoredRat> coeffs_;
};

// Formal log: requires c_0 = 1.
TSeries series_log(const TSeries& f);
// Formal exp: requires c_0 = 0.
TSeries series_exp(const TSeries& g);

// Adams operation on a TSeries: index dilation r -> k*r plus rf_frobenius
// on coefficients.
TSeries series_frobenius(const TSeries& f, int k);

// Plethystic log: pLog f = sum_k (mobius(k)/k) psi_k(log f); c_0 must be 1.
TSeries plog(const TSeries& f);
// Plethystic exp: pExp g = exp(sum_k psi_k(g)/k); c_0 must be 0.
TSeries pexp(const TSeries& g);

int mobius(int n);

}  // namespace higgs

#endif
