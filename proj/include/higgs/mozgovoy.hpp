#ifndef HIGGS_MOZGOVOY_HPP
#define HIGGS_MOZGOVOY_HPP

#include "higgs/partitions.hpp"
#include "higgs/series.hpp"

namespace higgs {

// Pipeline parameters shared by both series.
struct HiggsContext {
    int genus;
    int order;  // truncation R
    int threads = 1;
    VarSet vs;

    HiggsContext(int g, int R, int threads_ = 1)
        : genus(g), order(R), threads(threads_), vs(VarSet::standard(g)) {
        if (g < 0) throw Error("HiggsContext: genus must be >= 0");
        if (R < 1) throw Error("HiggsContext: order must be >= 1");
    }
};

// Cell-product term of Omega_g for one partition:
//   prod over cells  prod_i (z^(a+1) - alpha_i q^l)(z^a - alpha_i^-1 q^(l+1))
//                    / ((z^(a+1) - q^l)(z^a - q^(l+1)))
FactoredRat omega_g_term(const Partition& mu, const HiggsContext& ctx);

// Omega_g truncated at ctx.order; c_n sums omega_g_term over |mu| = n.
TSeries omega_g_series(const HiggsContext& ctx);

// H_g = -(1-q)(1-z) pLog Omega_g
TSeries h_series(const HiggsContext& ctx);

// -(1-q)(1-z) in the context varset
LaurentPoly plog_scalar(const VarSet& vs);

// Coefficient H_{g,r} forced to a Laurent polynomial; throws with the
// surviving denominator factors if cancellation fails.
LaurentPoly h_poly(const TSeries& h, int r);

// A_{g,r} = H_{g,r} at z = 1
LaurentPoly a_poly(const TSeries& h, int r);

// E-polynomial in (x, y): q -> xy, alpha_i -> x in A, times (xy)^(1+(g-1)r^2)
LaurentPoly e_poly(const TSeries& h, const HiggsContext& ctx, int r);

// Poincare polynomial in s = q^(1/2): q -> s^2, alpha_i -> s in A,
// times s^(2(1+(g-1)r^2))
LaurentPoly poincare_poly(const TSeries& h, const HiggsContext& ctx, int r);

}  // namespace higgs

#endif
