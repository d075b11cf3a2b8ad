#ifndef VOA_NAMED_HPP
#define VOA_NAMED_HPP

#include "voa/fock.hpp"

namespace voa {

/* sum_i u_i(-1) u^i(-1) |0> over dual bases of the Cartan subalgebra;
   independent of the chosen basis */
State cartan_casimir(const FockSpace& f);

/* Sugawara conformal vector of the full affine algebra,
   c = k dim(g) / (k + h_vee) */
State omega_affine(const FockSpace& f);

/* conformal vector of the rank-many free bosons, c = rank */
State omega_heisenberg(const FockSpace& f);

/* their difference; the conformal vector of the parafermion algebra,
   c = k dim(g)/(k + h_vee) - rank */
State omega_parafermion(const FockSpace& f);

/* parafermion conformal vector of the sl2 along positive root r at the
   rescaled level k_r, c = 2(k_r - 1)/(k_r + 2) */
State omega_sl2(const FockSpace& f, int r);

/* weight-3 generator of the same rank-one parafermion algebra */
State w3_sl2(const FockSpace& f, int r);

/* x_theta(-1)^{k+1} |0>, the generating singular vector */
State theta_singular(const FockSpace& f);

/* x_{-theta}(0)^{k+1} x_theta(-1)^{k+1} |0>, its charge-zero shadow */
State parafermion_singular(const FockSpace& f);

}  // namespace voa

#endif
