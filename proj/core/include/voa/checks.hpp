#ifndef VOA_CHECKS_HPP
#define VOA_CHECKS_HPP

#include <string>
#include <vector>

#include "voa/report.hpp"

namespace voa {

/* one batch run; command specific fields are ignored elsewhere */
struct RunConfig {
  std::string algebra = "A1";
  long level = 1;
  long max_weight = 4;
  long slack = 0;                     // extra mode product truncation margin
  std::string which = "charge-zero";  // generator target, see check_generators
  std::vector<int> word;              // simple reflections, 1-based
  bool truncation_regression = false;
  long bucket_cap = 20000;
  double time_cap_s = 1800.0;
};

/* Sugawara, Heisenberg, and coset conformal vectors: Virasoro
 * relations plus the exact central charges k dim g/(k+h) and rank */
CheckReport check_virasoro(const RunConfig& cfg);

/* every Cartan mode h_i(m), 0 <= m <= 3, annihilates the rank one
 * coset vectors of all positive roots and the coset conformal vector */
CheckReport check_commutant(const RunConfig& cfg);

/* closure comparisons, selected by cfg.which:
 *   charge-zero: Cartan currents + paired root vectors generate the
 *                whole charge zero subspace
 *   commutant:   the rank one coset vectors generate the commutant;
 *                adjoining the Cartan currents recovers charge zero
 *   quotient:    the same vectors together with the maximal ideal fill
 *                the commutant, so their images generate the quotient */
CheckReport check_generators(const RunConfig& cfg);

/* the ideal generated inside the commutant equals the intersection of
 * the module ideal with the commutant; singular vectors of every root
 * are members */
CheckReport check_ideal(const RunConfig& cfg);

/* lifted Weyl reflection word: mode product homomorphism on samples,
 * permutation of the module ideal buckets, image of the commutant
 * singular vector stays in the ideal */
CheckReport check_weyl(const RunConfig& cfg);

/* dimension tables: charge zero, commutant, its maximal ideal, the
 * quotient; checks the Heisenberg factorization of the charge zero
 * character */
CheckReport graded_dims(const RunConfig& cfg);

}  // namespace voa

#endif
