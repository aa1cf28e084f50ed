#pragma once

#include "vertexforge/partitions.hpp"

namespace vf {

enum class EH { E, H };

/// e_i(q^rho) = q^{-i(i-1)/4} / ([1]...[i]); 1 for i = 0, 0 for i < 0
QRational e_rho(int i);
/// h_i(q^rho) = q^{i(i-1)/4} / ([1]...[i]); 1 for i = 0, 0 for i < 0
QRational h_rho(int i);

/**
 * @brief e_i or h_i at the principal specialization q^{lambda+rho}.
 *
 * Computed through the generating-function identities relating the series at
 * q^{lambda+rho} to the series at q^rho by a finite product of binomial
 * factors; coefficient tables are cached per lambda.
 */
QRational eh_principal(EH kind, int i, const Partition& lambda);

/**
 * @brief Skew Schur function s_{mu/nu}(q^{lambda+rho}) by the Jacobi-Trudi
 *        determinant det(h_{mu_i - nu_j - i + j}).
 *
 * Zero unless nu is contained in mu.  Memoized on (mu, nu, lambda).
 */
QRational skew_schur_principal(const Partition& mu, const Partition& nu, const Partition& lambda);

/**
 * @brief Three-point vertex amplitude
 *        C_{l1,l2,l3} = q^{kappa(l3)/2} s_{l2}(q^rho)
 *                       sum_eta s_{l1/eta}(q^{l2^t+rho}) s_{l3^t/eta}(q^{l2+rho}).
 *
 * The eta sum is finite: |eta| <= min(|l1|, |l3|).  This entry point memoizes
 * on the cyclically normalized key; cyclic symmetry itself is covered by the
 * test suite against three_point_direct.
 */
QRational three_point(const Partition& l1, const Partition& l2, const Partition& l3);

/// same value as three_point, computed for the arguments exactly as given
QRational three_point_direct(const Partition& l1, const Partition& l2, const Partition& l3);

/**
 * @brief Two-point amplitude
 *        W_{mu,nu} = (-1)^{|mu|+|nu|} q^{(kappa(mu)+kappa(nu))/2}
 *                    sum_eta s_{mu/eta}(q^{-rho}) s_{nu/eta}(q^{-rho}),
 * with q^{-rho} values obtained from the q^rho ones by the bar involution.
 */
QRational two_point(const Partition& mu, const Partition& nu);

/// drop all symfun memo tables (specialization tables, skew and vertex caches)
void clear_symfun_caches();

} // namespace vf
