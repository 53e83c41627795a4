#ifndef HIGGS_SCHIFFMANN_HPP
#define HIGGS_SCHIFFMANN_HPP

#include "higgs/mozgovoy.hpp"
#include "higgs/verification.hpp"

namespace higgs {

// P(x) = prod_{k=1}^g (1 - alpha_k^-1 x) with x a Laurent monomial.
LaurentPoly p_poly(const Monomial& x, const VarSet& vs, int genus);

// The symmetrized function f evaluated at the given Laurent monomials
// (which may be formal z_i variables of an extended varset). Arguments
// must be pairwise distinct.
FactoredRat f_eval(const std::vector<Monomial>& args, const VarSet& vs, int genus);
FactoredRat f_eval(const std::vector<Monomial>& args, const VarSet& vs, int genus,
                   int threads);

// f at z_i(mu)
FactoredRat f_mu(const Partition& mu, const HiggsContext& ctx);

// Schiffmann's term Omega_mu = f_mu * prod_i N_mu(alpha_i^-1) / N_mu(1)
FactoredRat omega_prime_term(const Partition& mu, const HiggsContext& ctx);
FactoredRat omega_prime_term(const Partition& mu, const HiggsContext& ctx,
                             const FactoredRat& fmu);

TSeries omega_prime_series(const HiggsContext& ctx);
// H' = -(1-q)(1-z) pLog Omega'
TSeries h_prime_series(const HiggsContext& ctx);

// The individual factors of N_mu (two per cell), unexpanded.
std::vector<LaurentPoly> n_mu_factors(const Partition& mu, const NmuArg& arg,
                                      const VarSet& vs);

// Residual denominator factors of H'_r involve only q.
VerificationRecord check_laurent_in_z(const TSeries& h_prime, int r);

// H'_r and H_r agree after z = 1.
VerificationRecord compare_at_z1(const TSeries& h_prime, const TSeries& h, int r);

// L_n = 1 symmetrization identity (formal z_1..z_n, no alphas).
VerificationRecord l_n_identity(int n);

// Regularity: f(1, z_1..z_n) = f(q z_1, .., q z_n) with formal z_i.
VerificationRecord regularity_check(int n, int genus);

// f_mu * prod over cells P(z^(a+1) q^-l) P(z^-a q^(l+1)) is a Laurent
// polynomial.
VerificationRecord denominator_bound_check(const Partition& mu, const HiggsContext& ctx);
VerificationRecord denominator_bound_check(const Partition& mu, const HiggsContext& ctx,
                                           const FactoredRat& fmu);

// N_mu(1) * Omega_mu is a Laurent polynomial.
VerificationRecord nmu_bound_check(const Partition& mu, const HiggsContext& ctx);
VerificationRecord nmu_bound_check(const Partition& mu, const HiggsContext& ctx,
                               const FactoredRat& fmu);

// Interpolation: f at the padded sequence z^(mu_i) q^(i-n), i = 1..n,
// equals f_mu for n >= l(mu).
VerificationRecord interpolation_check(const Partition& mu, int n, const HiggsContext& ctx);

}  // namespace higgs

#endif
