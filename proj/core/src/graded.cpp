#include "voa/graded.hpp"

#include <algorithm>

namespace voa {

BasisTable::BasisTable(std::shared_ptr<FockSpace> fock, Limits limits)
    : fock_(std::move(fock)), limits_(limits) {
  if (!fock_) throw Error("null Fock space");
}

const std::map<Coords, std::vector<Monomial>>& BasisTable::weight_slice(
    long w) const {
  std::scoped_lock lock(mutex_);
  auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;
  std::map<Coords, std::vector<Monomial>> slice;
  for (const auto& m : fock_->monomials(w))
    slice[mono_charge(fock_->algebra(), m)].push_back(m);
  for (auto& [c, v] : slice)
    limits_.check_bucket(static_cast<long>(v.size()),
                         "basis bucket at weight " + std::to_string(w));
  return cache_.emplace(w, std::move(slice)).first->second;
}

const std::vector<Monomial>& BasisTable::bucket(const BucketKey& key) const {
  static const std::vector<Monomial> empty;
  const auto& slice = weight_slice(key.weight);
  auto it = slice.find(key.charge);
  return it == slice.end() ? empty : it->second;
}

long BasisTable::bucket_size(const BucketKey& key) const {
  return static_cast<long>(bucket(key).size());
}

long BasisTable::position(const BucketKey& key, const Monomial& m) const {
  const auto& b = bucket(key);
  auto it = std::lower_bound(b.begin(), b.end(), m);
  if (it == b.end() || !(*it == m)) throw Error("monomial outside its bucket");
  return static_cast<long>(it - b.begin());
}

std::vector<BucketKey> BasisTable::buckets_at(long weight) const {
  std::vector<BucketKey> out;
  for (const auto& [c, v] : weight_slice(weight)) out.push_back({weight, c});
  return out;
}

long BasisTable::total_at(long weight) const {
  return static_cast<long>(fock_->monomials(weight).size());
}

namespace {

// scale to coprime integer entries with a positive lead; naive rational
// elimination lets entry sizes compound across insertions until every
// gmp op runs on huge operands, stripping content after each step keeps
// them at the intrinsic size of the subspace
void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [i, v] : row) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            mpq_numref(v.get_mpq_t()));
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            mpq_denref(v.get_mpq_t()));
  }
  Rational scale(den_lcm);
  scale /= Rational(num_gcd);
  if (row.front().second < 0) scale = -scale;
  if (scale == 1) return;
  for (auto& [i, v] : row) v *= scale;
}

// fraction free elimination step: pivot_val * a - coeff * b, zeros dropped
SparseRow eliminate(const SparseRow& a, const SparseRow& b,
                    const Rational& pivot_val, const Rational& coeff) {
  SparseRow merged;
  merged.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      merged.emplace_back(i->first, pivot_val * i->second);
      ++i;
    } else if (i == a.end() || j->first < i->first) {
      merged.emplace_back(j->first, -coeff * j->second);
      ++j;
    } else {
      Rational v = pivot_val * i->second - coeff * j->second;
      if (v != 0) merged.emplace_back(i->first, v);
      ++i;
      ++j;
    }
  }
  return merged;
}

}  // namespace

bool EchelonBasis::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  long pivot = row.front().first;
  const Rational& pv = row.front().second;
  // clear the new pivot from existing rows
  for (auto& r : rows_) {
    Rational coeff = 0;
    for (const auto& [i, v] : r)
      if (i == pivot) {
        coeff = v;
        break;
      }
    if (coeff == 0) continue;
    r = eliminate(r, row, pv, coeff);
    make_primitive(r);
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                              [](const SparseRow& r, long p) {
                                return r.front().first < p;
                              });
  rows_.insert(pos, std::move(row));
  return true;
}

SparseRow EchelonBasis::reduce(SparseRow row) const {
  make_primitive(row);
  for (const auto& r : rows_) {
    if (row.empty()) break;
    long pivot = r.front().first;
    Rational coeff = 0;
    for (const auto& [i, v] : row) {
      if (i == pivot) {
        coeff = v;
        break;
      }
      if (i > pivot) break;
    }
    if (coeff == 0) continue;
    row = eliminate(row, r, r.front().second, coeff);
    make_primitive(row);
  }
  return row;
}

BucketKey state_bucket(const LieData& g, const State& v) {
  if (v.is_zero()) throw Error("zero state has no bucket");
  auto it = v.terms.begin();
  BucketKey key{mono_weight(it->first), mono_charge(g, it->first)};
  for (; it != v.terms.end(); ++it)
    if (mono_weight(it->first) != key.weight ||
        mono_charge(g, it->first) != key.charge)
      throw Error("state is not homogeneous");
  return key;
}

SparseRow state_to_row(const BasisTable& t, const BucketKey& key,
                       const State& v) {
  SparseRow row;
  row.reserve(v.terms.size());
  for (const auto& [m, c] : v.terms) row.emplace_back(t.position(key, m), c);
  std::sort(row.begin(), row.end());
  return row;
}

State row_to_state(const BasisTable& t, const BucketKey& key,
                   const SparseRow& r) {
  const auto& monos = t.bucket(key);
  State out;
  for (const auto& [i, v] : r) out.terms.emplace(monos[i], v);
  return out;
}

bool Subspace::insert(const State& v) {
  if (v.is_zero()) return false;
  BucketKey key = state_bucket(table_->fock().algebra(), v);
  return buckets_[key].insert(state_to_row(*table_, key, v));
}

bool Subspace::contains(const State& v) const {
  return reduce(v).is_zero();
}

State Subspace::reduce(const State& v) const {
  if (v.is_zero()) return {};
  BucketKey key = state_bucket(table_->fock().algebra(), v);
  auto it = buckets_.find(key);
  SparseRow row = state_to_row(*table_, key, v);
  if (it != buckets_.end()) row = it->second.reduce(std::move(row));
  return row_to_state(*table_, key, row);
}

long Subspace::dim(const BucketKey& key) const {
  auto it = buckets_.find(key);
  return it == buckets_.end() ? 0 : it->second.dim();
}

long Subspace::weight_dim(long weight) const {
  long d = 0;
  for (const auto& [key, basis] : buckets_)
    if (key.weight == weight) d += basis.dim();
  return d;
}

std::map<BucketKey, long> Subspace::dims() const {
  std::map<BucketKey, long> out;
  for (const auto& [key, basis] : buckets_)
    if (basis.dim() > 0) out.emplace(key, basis.dim());
  return out;
}

std::vector<State> Subspace::basis_states(const BucketKey& key) const {
  std::vector<State> out;
  auto it = buckets_.find(key);
  if (it == buckets_.end()) return out;
  for (const auto& r : it->second.rows())
    out.push_back(row_to_state(*table_, key, r));
  return out;
}

std::vector<State> Subspace::all_basis_states(long max_weight) const {
  std::vector<State> out;
  for (const auto& [key, basis] : buckets_) {
    if (key.weight > max_weight) continue;
    for (const auto& r : basis.rows())
      out.push_back(row_to_state(*table_, key, r));
  }
  return out;
}

std::vector<BucketKey> Subspace::keys() const {
  std::vector<BucketKey> out;
  for (const auto& [key, basis] : buckets_)
    if (basis.dim() > 0) out.push_back(key);
  return out;
}

const EchelonBasis* Subspace::bucket(const BucketKey& key) const {
  auto it = buckets_.find(key);
  return it == buckets_.end() ? nullptr : &it->second;
}

Subspace charge_zero_space(std::shared_ptr<const BasisTable> table,
                           long max_weight) {
  Subspace out(table);
  Coords zero(table->fock().algebra().rank(), 0);
  for (long w = 0; w <= max_weight; ++w)
    for (const auto& m : table->bucket({w, zero}))
      out.insert(State::single(m));
  return out;
}

Subspace highest_weight_space(std::shared_ptr<const BasisTable> table,
                              long max_weight, const Coords& charge) {
  const FockSpace& f = table->fock();
  const LieData& g = f.algebra();
  Subspace out(table);
  for (long w = 0; w <= max_weight; ++w) {
    BucketKey key{w, charge};
    const auto& monos = table->bucket(key);
    if (monos.empty()) continue;
    const long n = static_cast<long>(monos.size());
    // equations: for every constraint h_i(m), target monomial y:
    // sum_j <h_i(m) x_j, y> c_j = 0
    EchelonBasis equations;
    for (int i = 0; i < g.rank(); ++i)
      for (long m = 1; m <= w; ++m) {
        std::map<Monomial, SparseRow> rows;
        for (long j = 0; j < n; ++j) {
          State img = f.apply_mode(g.t_index(i), static_cast<int>(m),
                                   State::single(monos[j]));
          for (const auto& [y, c] : img.terms) rows[y].emplace_back(j, c);
        }
        for (auto& [y, row] : rows) equations.insert(std::move(row));
      }
    // free columns parameterize the kernel
    std::vector<bool> is_pivot(n, false);
    for (const auto& r : equations.rows()) is_pivot[r.front().first] = true;
    for (long fcol = 0; fcol < n; ++fcol) {
      if (is_pivot[fcol]) continue;
      SparseRow sol{{fcol, 1}};
      for (const auto& r : equations.rows()) {
        for (const auto& [idx, v] : r)
          if (idx == fcol && v != 0) {
            sol.emplace_back(r.front().first, -v / r.front().second);
            break;
          }
      }
      std::sort(sol.begin(), sol.end());
      out.insert(row_to_state(*table, key, sol));
    }
  }
  return out;
}

// all three fixpoints below push the raw product, never its reduced
// residual: residual entries inherit the whole basis and compound
// generation over generation until the rationals dwarf the algebra,
// while raw products only stack structure constants along a chain
Subspace generated_subalgebra(const VertexEngine& eng,
                              std::shared_ptr<const BasisTable> table,
                              const std::vector<State>& generators,
                              long max_weight, const Limits& limits) {
  const LieData& g = table->fock().algebra();
  Subspace out(table);
  std::vector<State> frontier;
  out.insert(State::vacuum());
  frontier.push_back(State::vacuum());
  while (!frontier.empty()) {
    limits.check_time("generated_subalgebra");
    State w = std::move(frontier.back());
    frontier.pop_back();
    long ww = state_bucket(g, w).weight;
    for (const State& s : generators) {
      if (s.is_zero()) continue;
      long ws = state_bucket(g, s).weight;
      // result weight ws + ww - n - 1 in [0, max_weight]
      for (long n = ws + ww - 1 - max_weight; n <= ws + ww - 1; ++n) {
        State prod = eng.mode_product(s, n, w);
        if (prod.is_zero()) continue;
        BucketKey key = state_bucket(g, prod);
        if (out.dim(key) == table->bucket_size(key)) continue;
        if (!out.insert(prod)) continue;
        frontier.push_back(std::move(prod));
      }
    }
  }
  return out;
}

namespace {

Subspace ideal_affine_fixpoint(std::shared_ptr<const BasisTable> table,
                               const std::vector<State>& generators,
                               long max_weight, const Limits& limits) {
  const FockSpace& f = table->fock();
  const LieData& g = f.algebra();
  Subspace out(table);
  std::vector<State> frontier;
  for (const State& s : generators) {
    if (s.is_zero()) continue;
    if (state_bucket(g, s).weight > max_weight)
      throw Error("ideal generator outside the weight window");
    if (!out.insert(s)) continue;
    frontier.push_back(s);
  }
  while (!frontier.empty()) {
    limits.check_time("generated_ideal");
    State v = std::move(frontier.back());
    frontier.pop_back();
    long wv = state_bucket(g, v).weight;
    for (int b = 0; b < g.dim(); ++b)
      for (long m = wv - max_weight; m <= wv; ++m) {
        State img = f.apply_mode(b, static_cast<int>(m), v);
        if (img.is_zero()) continue;
        BucketKey key = state_bucket(g, img);
        if (out.dim(key) == table->bucket_size(key)) continue;
        if (!out.insert(img)) continue;
        frontier.push_back(std::move(img));
      }
  }
  return out;
}

Subspace ideal_span_fixpoint(const VertexEngine& eng,
                             std::shared_ptr<const BasisTable> table,
                             const std::vector<State>& generators,
                             long max_weight, const Subspace& ambient,
                             const Limits& limits) {
  const LieData& g = table->fock().algebra();
  Subspace out(table);
  std::vector<State> frontier;
  for (const State& s : generators) {
    if (s.is_zero()) continue;
    if (state_bucket(g, s).weight > max_weight)
      throw Error("ideal generator outside the weight window");
    if (!out.insert(s)) continue;
    frontier.push_back(s);
  }
  const std::vector<State> acting = ambient.all_basis_states(max_weight);
  while (!frontier.empty()) {
    limits.check_time("generated_ideal");
    State w = std::move(frontier.back());
    frontier.pop_back();
    long ww = state_bucket(g, w).weight;
    for (const State& u : acting) {
      long wu = state_bucket(g, u).weight;
      for (long n = wu + ww - 1 - max_weight; n <= wu + ww - 1; ++n) {
        State prod = eng.mode_product(u, n, w);
        if (prod.is_zero()) continue;
        BucketKey key = state_bucket(g, prod);
        if (out.dim(key) == table->bucket_size(key)) continue;
        if (!out.insert(prod)) continue;
        frontier.push_back(std::move(prod));
      }
    }
  }
  return out;
}

}  // namespace

Subspace generated_ideal(const VertexEngine& eng,
                         std::shared_ptr<const BasisTable> table,
                         const std::vector<State>& generators, long max_weight,
                         IdealStrategy strategy, const Subspace* ambient,
                         const Limits& limits) {
  if (strategy == IdealStrategy::AffineFixpoint)
    return ideal_affine_fixpoint(table, generators, max_weight, limits);
  if (!ambient)
    throw ConfigError("span fixpoint needs an ambient subspace");
  return ideal_span_fixpoint(eng, table, generators, max_weight, *ambient,
                             limits);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  Subspace out(a.table_ptr());
  for (const auto& [key, abase] : a.buckets_) {
    const EchelonBasis* bbase = b.bucket(key);
    if (!bbase || abase.dim() == 0 || bbase->dim() == 0) continue;
    const long c = a.table().bucket_size(key);
    // [u | u] and [v | 0]; reduced rows with every column < c cleared
    // carry an intersection vector in their right half
    EchelonBasis zass;
    for (const auto& r : abase.rows()) {
      SparseRow wide = r;
      for (const auto& [i, v] : r) wide.emplace_back(i + c, v);
      zass.insert(std::move(wide));
    }
    for (const auto& r : bbase->rows()) zass.insert(SparseRow(r));
    for (const auto& r : zass.rows()) {
      if (r.front().first < c) continue;
      SparseRow shifted;
      shifted.reserve(r.size());
      for (const auto& [i, v] : r) shifted.emplace_back(i - c, v);
      out.insert(row_to_state(a.table(), key, shifted));
    }
  }
  return out;
}

bool contains_subspace(const Subspace& big, const Subspace& small,
                       long max_weight) {
  for (const State& v : small.all_basis_states(max_weight))
    if (!big.contains(v)) return false;
  return true;
}

bool subspace_equal(const Subspace& a, const Subspace& b, long max_weight) {
  std::map<BucketKey, long> da, db;
  for (const auto& [key, d] : a.dims())
    if (key.weight <= max_weight) da.emplace(key, d);
  for (const auto& [key, d] : b.dims())
    if (key.weight <= max_weight) db.emplace(key, d);
  if (da != db) return false;
  return contains_subspace(b, a, max_weight);
}

std::vector<long> weight_dims(const Subspace& s, long max_weight) {
  std::vector<long> out(max_weight + 1, 0);
  for (long w = 0; w <= max_weight; ++w) out[w] = s.weight_dim(w);
  return out;
}

std::vector<long> quotient_dims(const Subspace& big, const Subspace& small,
                                long max_weight) {
  std::vector<long> out(max_weight + 1, 0);
  for (long w = 0; w <= max_weight; ++w)
    out[w] = big.weight_dim(w) - small.weight_dim(w);
  return out;
}

std::vector<long> full_weight_dims(const BasisTable& t, long max_weight) {
  std::vector<long> out(max_weight + 1, 0);
  for (long w = 0; w <= max_weight; ++w) out[w] = t.total_at(w);
  return out;
}

}  // namespace voa
