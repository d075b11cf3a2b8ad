#ifndef VOA_FOCK_HPP
#define VOA_FOCK_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "voa/lie.hpp"

namespace voa {

/* one mode a(m); basis indexes the LieData basis */
struct Factor {
  int mode = 0;
  int basis = 0;
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

/* product of modes applied to the vacuum, left to right; empty = |0>.
   Canonical form: modes strictly negative, depth non-increasing, ties
   broken by non-decreasing basis index. */
using Monomial = std::vector<Factor>;

long mono_weight(const Monomial& m);
Coords mono_charge(const LieData& g, const Monomial& m);
bool is_canonical(const Monomial& m);

/* finite linear combination of canonical monomials */
struct State {
  std::map<Monomial, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const Monomial& m, const Rational& c);
  State& operator+=(const State& o);
  State& operator-=(const State& o);
  State& operator*=(const Rational& s);
  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) { return a -= b; }
  friend State operator*(const Rational& s, State a) { return a *= s; }
  friend bool operator==(const State&, const State&) = default;

  /* coefficient of the vacuum monomial */
  Rational vacuum_coefficient() const;

  static State vacuum() {
    State s;
    s.terms[{}] = 1;
    return s;
  }
  static State single(Monomial m, Rational c = 1) {
    State s;
    if (c != 0) s.terms.emplace(std::move(m), std::move(c));
    return s;
  }
};

/* picks which reducible position to rewrite next; arguments are the
   word and the positions of all reducible spots, returns an index into
   that list. Used to exercise confluence; the default takes the first. */
using DefectPicker =
    std::function<std::size_t(const Monomial&, const std::vector<std::size_t>&)>;

/* Level-k vacuum module of the affine algebra on LieData, presented as
 * the free bosonic Fock space over the canonical monomial basis. All
 * structure lives in straighten: a(m)b(n) = b(n)a(m) + [a,b](m+n)
 * + m <a,b> delta_{m+n,0} k, non-negative modes kill |0>. */
class FockSpace {
 public:
  FockSpace(std::shared_ptr<const LieData> g, long level);

  const LieData& algebra() const { return *g_; }
  std::shared_ptr<const LieData> algebra_ptr() const { return g_; }
  long level() const { return level_; }

  /* rewrite coeff * word |0> into canonical form */
  State straighten(const Monomial& word, const Rational& coeff = 1) const;
  State straighten_choice(const Monomial& word, const Rational& coeff,
                          const DefectPicker& pick) const;

  /* a(mode) v for a basis vector or a general algebra element */
  State apply_mode(int basis, int mode, const State& v) const;
  State apply(const AlgElem& a, int mode, const State& v) const;

  /* lift of an algebra automorphism, factor by factor */
  State weyl_apply(const WeylAutomorphism& s, const State& v) const;

  /* all canonical monomials of the given total weight, every charge,
     in increasing monomial order; cached */
  const std::vector<Monomial>& monomials(long weight) const;

  static std::vector<std::size_t> defects(const Monomial& w);

  std::string format(const Monomial& m) const;
  std::string format(const State& v) const;

 private:
  std::shared_ptr<const LieData> g_;
  long level_ = 0;
  mutable std::mutex cache_mutex_;
  mutable std::map<long, std::vector<Monomial>> weight_cache_;
};

}  // namespace voa

#endif
