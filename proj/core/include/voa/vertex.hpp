#ifndef VOA_VERTEX_HPP
#define VOA_VERTEX_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "voa/fock.hpp"

namespace voa {

struct VirasoroReport {
  Rational central_charge;
  bool commutator_ok = false;
  bool derivative_ok = false;
  long pairs_checked = 0;
  long states_checked = 0;
  std::string first_failure;
  bool ok() const { return commutator_ok && derivative_ok; }
};

struct PrimaryReport {
  bool annihilated = false;   // L(n) u = 0 for 1 <= n <= upto
  bool eigenvector = false;   // L(0) u = weight * u
  Rational weight;
  bool ok() const { return annihilated && eigenvector; }
};

/* Mode products u_n v on the vacuum module.
 *
 * The empty word acts as the identity field, a single current x(-1)|0>
 * acts by its modes, and a general u = a(-m) w reduces through
 *
 *   (a(-m) w)_n = sum_{j>=0} C(m+j-1, j)
 *       [ a(-m-j) w_{n+j} - (-1)^m w_{n-m-j} a(j) ]
 *
 * with both sums finite on any fixed argument: the first because modes
 * beyond the total weight annihilate, the second because a(j) kills
 * anything of weight below j. truncation_slack widens both windows;
 * results must not depend on it. */
class VertexEngine {
 public:
  explicit VertexEngine(std::shared_ptr<FockSpace> fock,
                        long truncation_slack = 0);

  const FockSpace& fock() const { return *fock_; }
  std::shared_ptr<FockSpace> fock_ptr() const { return fock_; }
  long truncation_slack() const { return slack_; }

  State mode_product(const Monomial& u, long n, const Monomial& v) const;
  State mode_product(const State& u, long n, const State& v) const;

  /* L(n) = omega_{n+1} */
  State l_mode(const State& omega, long n, const State& v) const {
    return mode_product(omega, n + 1, v);
  }

  /* c from 2 <L(2) L(-2)>; commutators checked against
   * [L(m), L(n)] = (m-n) L(m+n) + delta_{m+n,0} (m^3-m)/12 c
   * for -window <= m < n <= window on every monomial of weight at most
   * weight_cap, and L(-1) u = u_{-2}|0> on the given samples (defaults
   * to descendants of omega, the largest set valid for any Virasoro
   * vector inside a bigger space). */
  VirasoroReport virasoro_check(const State& omega, long weight_cap,
                                int mode_window,
                                std::vector<State> derivative_samples = {}) const;

  /* L(n) u = 0 for 1 <= n <= upto and L(0)-eigenvalue of u */
  PrimaryReport primary_check(const State& omega, const State& u,
                              long upto) const;

  std::size_t memo_size() const;

 private:
  State mode_product_uncached(const Monomial& u, long n,
                              const Monomial& v) const;

  std::shared_ptr<FockSpace> fock_;
  long slack_ = 0;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::tuple<Monomial, long, Monomial>, State> memo_;
};

}  // namespace voa

#endif
