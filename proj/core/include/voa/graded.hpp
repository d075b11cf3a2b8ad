#ifndef VOA_GRADED_HPP
#define VOA_GRADED_HPP

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "voa/vertex.hpp"

namespace voa {

/* one graded piece: fixed total weight and root-lattice charge */
struct BucketKey {
  long weight = 0;
  Coords charge;
  friend auto operator<=>(const BucketKey&, const BucketKey&) = default;
};

/* canonical monomials per bucket, cached, with positional lookup */
class BasisTable {
 public:
  explicit BasisTable(std::shared_ptr<FockSpace> fock, Limits limits = {});

  const FockSpace& fock() const { return *fock_; }
  std::shared_ptr<FockSpace> fock_ptr() const { return fock_; }

  const std::vector<Monomial>& bucket(const BucketKey& key) const;
  long bucket_size(const BucketKey& key) const;
  /* position of a canonical monomial inside its bucket */
  long position(const BucketKey& key, const Monomial& m) const;
  std::vector<BucketKey> buckets_at(long weight) const;
  long total_at(long weight) const;

 private:
  const std::map<Coords, std::vector<Monomial>>& weight_slice(long w) const;

  std::shared_ptr<FockSpace> fock_;
  Limits limits_;
  mutable std::mutex mutex_;
  mutable std::map<long, std::map<Coords, std::vector<Monomial>>> cache_;
};

/* sparse vector over bucket positions, sorted by index */
using SparseRow = std::vector<std::pair<long, Rational>>;

/* row space in reduced echelon form over one bucket */
class EchelonBasis {
 public:
  /* reduce against the rows; true and absorb if independent */
  bool insert(SparseRow row);
  /* residual with every pivot cleared, scaled to coprime integers */
  SparseRow reduce(SparseRow row) const;
  bool contains(SparseRow row) const { return reduce(std::move(row)).empty(); }
  long dim() const { return static_cast<long>(rows_.size()); }
  const std::vector<SparseRow>& rows() const { return rows_; }

 private:
  // strictly increasing pivots, coprime integer entries, positive lead
  std::vector<SparseRow> rows_;
};

BucketKey state_bucket(const LieData& g, const State& v);  // homogeneous only
SparseRow state_to_row(const BasisTable& t, const BucketKey& key, const State& v);
State row_to_state(const BasisTable& t, const BucketKey& key, const SparseRow& r);

/* graded subspace: one echelon basis per bucket */
class Subspace {
 public:
  explicit Subspace(std::shared_ptr<const BasisTable> table)
      : table_(std::move(table)) {}

  const BasisTable& table() const { return *table_; }
  std::shared_ptr<const BasisTable> table_ptr() const { return table_; }

  bool insert(const State& v);          // true if the dimension grew
  bool contains(const State& v) const;
  State reduce(const State& v) const;   // residual, up to positive scale

  long dim(const BucketKey& key) const;
  long weight_dim(long weight) const;   // aggregated over charges
  std::map<BucketKey, long> dims() const;
  std::vector<State> basis_states(const BucketKey& key) const;
  std::vector<State> all_basis_states(long max_weight) const;
  std::vector<BucketKey> keys() const;
  const EchelonBasis* bucket(const BucketKey& key) const;

 private:
  friend Subspace intersect(const Subspace&, const Subspace&);
  std::shared_ptr<const BasisTable> table_;
  std::map<BucketKey, EchelonBasis> buckets_;
};

/* every monomial of charge zero up to max_weight */
Subspace charge_zero_space(std::shared_ptr<const BasisTable> table,
                           long max_weight);

/* joint kernel of h_i(m), 1 <= m <= weight, inside the given charge */
Subspace highest_weight_space(std::shared_ptr<const BasisTable> table,
                              long max_weight, const Coords& charge);

/* span of iterated generator modes applied to |0>, weights <= max */
Subspace generated_subalgebra(const VertexEngine& eng,
                              std::shared_ptr<const BasisTable> table,
                              const std::vector<State>& generators,
                              long max_weight, const Limits& limits = {});

/* AffineFixpoint: close under single current modes; valid when the
 * ambient space is the whole module, where iterated current modes
 * exhaust all u_n with intermediate weights staying inside the window.
 * SpanFixpoint: close under u_n for u running over a basis of the
 * given ambient subspace, re-spanning until stable. */
enum class IdealStrategy { AffineFixpoint, SpanFixpoint };

Subspace generated_ideal(const VertexEngine& eng,
                         std::shared_ptr<const BasisTable> table,
                         const std::vector<State>& generators, long max_weight,
                         IdealStrategy strategy,
                         const Subspace* ambient = nullptr,
                         const Limits& limits = {});

/* bucketwise Zassenhaus intersection */
Subspace intersect(const Subspace& a, const Subspace& b);

bool contains_subspace(const Subspace& big, const Subspace& small,
                       long max_weight);
bool subspace_equal(const Subspace& a, const Subspace& b, long max_weight);

std::vector<long> weight_dims(const Subspace& s, long max_weight);
std::vector<long> quotient_dims(const Subspace& big, const Subspace& small,
                                long max_weight);
std::vector<long> full_weight_dims(const BasisTable& t, long max_weight);

}  // namespace voa

#endif
