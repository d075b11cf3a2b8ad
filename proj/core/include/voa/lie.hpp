#ifndef VOA_LIE_HPP
#define VOA_LIE_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "voa/rational.hpp"
#include "voa/util.hpp"

namespace voa {

/* integer coordinates in the simple-root basis */
using Coords = std::vector<int>;

/* sparse element of the algebra over the ordered basis of LieData */
struct AlgElem {
  std::map<int, Rational> c;

  bool is_zero() const { return c.empty(); }
  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);
  AlgElem& operator*=(const Rational& s);
  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator*(const Rational& s, AlgElem a) { return a *= s; }
  friend bool operator==(const AlgElem& a, const AlgElem& b) = default;

  static AlgElem unit(int basis) {
    AlgElem e;
    e.c[basis] = 1;
    return e;
  }
};

struct Root {
  Coords coords;
  int height = 0;
};

class LieData;

/* lift of a Weyl group element; image[b] is the image of basis vector b */
struct WeylAutomorphism {
  std::vector<int> word;  // 1-based simple reflection indices
  std::vector<AlgElem> image;
  const LieData* algebra = nullptr;

  AlgElem apply(const AlgElem& a) const;
  Coords apply_charge(const Coords& c) const;
};

struct Sl2Triple {
  AlgElem e, h, f;
  long rescaled_level = 0;  // k_alpha
};

/* Simple Lie algebra over Q in a Chevalley basis.
 *
 * Basis order: x_{-beta} for beta in Delta+ by decreasing height, then
 * t_{alpha_1}..t_{alpha_l}, then x_beta by increasing height.  Ties at
 * equal height follow the fixed total order on Delta+ (height, then
 * lexicographic coordinates), which is also the order used to seed the
 * structure-constant signs: for every non-simple gamma the smallest
 * special pair (alpha, beta) with alpha + beta = gamma gets
 * N_{alpha,beta} = +(p+1); everything else follows from antisymmetry,
 * the opposite-pair rule N_{-a,-b} = -N_{a,b} and the four-root sum
 * identity.  Any consistent choice gives an isomorphic algebra; tests
 * only assert convention-independent facts.
 *
 * The invariant form is normalized so long roots have square length 2.
 */
class LieData {
 public:
  static std::shared_ptr<const LieData> build(std::string_view name,
                                              int rank_cap = 4);
  static std::shared_ptr<const LieData> build(char series, int rank,
                                              int rank_cap = 4);

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  int dim() const { return static_cast<int>(2 * positive_.size() + rank_); }
  long dual_coxeter() const { return dual_coxeter_; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }
  int theta() const { return num_positive() - 1; }  // highest root index
  bool is_root(const Coords& c) const;
  /* <alpha,alpha> for positive root index r */
  const Rational& root_norm2(int r) const { return norm2_[r]; }
  /* square length of an arbitrary vector in the root lattice */
  Rational norm2(const Coords& c) const;
  int cartan(int i, int j) const { return cart_[i * rank_ + j]; }

  /* basis bookkeeping */
  int x_index(int r, bool negative) const {
    return negative ? num_positive() - 1 - r : num_positive() + rank_ + r;
  }
  int t_index(int i) const { return num_positive() + i; }
  bool is_cartan(int b) const {
    return b >= num_positive() && b < num_positive() + rank_;
  }
  /* root coordinates of basis vector b; all-zero for Cartan elements */
  const Coords& charge(int b) const { return charge_[b]; }
  std::string label(int b) const;
  std::string root_name(int r) const;

  AlgElem x_plus(int r) const { return AlgElem::unit(x_index(r, false)); }
  AlgElem x_minus(int r) const { return AlgElem::unit(x_index(r, true)); }
  AlgElem t(int i) const { return AlgElem::unit(t_index(i)); }
  /* h_alpha = 2 t_alpha / <alpha,alpha> expanded over the t basis */
  const AlgElem& coroot(int r) const { return coroot_[r]; }

  const AlgElem& bracket_basis(int a, int b) const {
    return brackets_[a * dim() + b];
  }
  AlgElem bracket(const AlgElem& a, const AlgElem& b) const;
  const Rational& form_basis(int a, int b) const {
    return form_[a * dim() + b];
  }
  Rational form(const AlgElem& a, const AlgElem& b) const;

  /* k_alpha = (<theta,theta>/<alpha,alpha>) k, always an integer */
  long level_rescale(int r, long level) const;
  Sl2Triple sl2_triple(int r, long level) const;

  WeylAutomorphism weyl_element(const std::vector<int>& word) const;

 private:
  LieData() = default;
  void build_roots(const std::vector<int>& cart);
  void build_constants();
  Rational general_n(const Coords& mu, const Coords& nu) const;
  int root_index(const Coords& c) const;

  std::string name_;
  int rank_ = 0;
  std::vector<int> cart_;
  std::vector<Rational> d_;  // <alpha_i,alpha_i>/2, max normalized to 1
  std::vector<Root> positive_;
  std::map<Coords, int> root_index_;
  std::vector<Rational> norm2_;
  long dual_coxeter_ = 0;
  std::vector<Coords> charge_;
  std::vector<AlgElem> coroot_;
  std::vector<AlgElem> brackets_;
  std::vector<Rational> form_;
  std::map<std::pair<int, int>, Integer> special_;  // N for positive pairs
};

}  // namespace voa

#endif
