#ifndef HIGGS_IDENTITIES_HPP
#define HIGGS_IDENTITIES_HPP

#include "higgs/partitions.hpp"
#include "higgs/verification.hpp"

namespace higgs {

// E_{mu,nu} = sum_{cell in mu} z^(-a_nu) q^(l_mu + 1)
//           + sum_{cell in nu} z^(a_mu + 1) q^(-l_nu)
LaurentPoly e_direct(const Partition& mu, const Partition& nu, const VarSet& vs);

// closed form zq B_mu + B_nu^* - (z-1)(q-1) B_mu B_nu^*
LaurentPoly e_closed(const Partition& mu, const Partition& nu, const VarSet& vs);

VerificationRecord check_arm_leg_sum(const Partition& mu, const Partition& nu);

// sum_i z_i(mu) = q^(1-l) ((z-1) B_mu + sum_{i=0}^{l-1} q^i)
VerificationRecord check_sumz(const Partition& mu);

// (1-q) sum_{i<j} z_i/z_j = (z^-1 - 1) sum_cells z^(a+1) q^-l + sum_i (z_i(mu) - 1)
VerificationRecord check_ratio_sum(const Partition& mu);

// prod_{i<j} (1 - q u z_i/z_j)/(1 - u z_i/z_j) rewritten as a product over
// cells and rows, with formal u; compared after cross-multiplication.
VerificationRecord check_armleg_product(const Partition& mu);

// q^((g-1)<mu,mu>) J_mu = prod_i N_mu(alpha_i^-1) / N_mu(1) * A B C D
// at z_i = z_i(mu)
VerificationRecord check_j_factorization(const Partition& mu, int genus);

// N_mu(1) equals the Omega_g cell-product denominator of the simple series.
VerificationRecord check_nmu_matches_omega_denominator(const Partition& mu);

}  // namespace higgs

#endif
