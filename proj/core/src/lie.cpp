#include "voa/lie.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

namespace voa {

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  for (const auto& [b, v] : o.c) {
    auto it = c.find(b);
    if (it == c.end()) {
      if (v != 0) c.emplace(b, v);
    } else {
      it->second += v;
      if (it->second == 0) c.erase(it);
    }
  }
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
  for (const auto& [b, v] : o.c) {
    auto it = c.find(b);
    if (it == c.end()) {
      if (v != 0) c.emplace(b, -v);
    } else {
      it->second -= v;
      if (it->second == 0) c.erase(it);
    }
  }
  return *this;
}

AlgElem& AlgElem::operator*=(const Rational& s) {
  if (s == 0) {
    c.clear();
    return *this;
  }
  for (auto& [b, v] : c) v *= s;
  return *this;
}

namespace {

Coords add(const Coords& a, const Coords& b) {
  Coords r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Coords sub(const Coords& a, const Coords& b) {
  Coords r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Coords neg(const Coords& a) {
  Coords r(a);
  for (auto& v : r) v = -v;
  return r;
}

int height_of(const Coords& a) {
  int h = 0;
  for (int v : a) h += v;
  return h;
}

std::vector<int> cartan_matrix(char series, int l) {
  auto at = [l](std::vector<int>& m, int i, int j) -> int& {
    return m[i * l + j];
  };
  std::vector<int> a(l * l, 0);
  for (int i = 0; i < l; ++i) at(a, i, i) = 2;
  auto edge = [&](int i, int j, int aij, int aji) {
    at(a, i, j) = aij;
    at(a, j, i) = aji;
  };
  switch (series) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) edge(i, i + 1, -1, -1);
      break;
    case 'B':  // alpha_l short
      for (int i = 0; i + 2 < l; ++i) edge(i, i + 1, -1, -1);
      edge(l - 2, l - 1, -1, -2);
      break;
    case 'C':  // alpha_l long
      for (int i = 0; i + 2 < l; ++i) edge(i, i + 1, -1, -1);
      edge(l - 2, l - 1, -2, -1);
      break;
    case 'D':
      for (int i = 0; i + 2 < l; ++i) edge(i, i + 1, -1, -1);
      edge(l - 3, l - 1, -1, -1);
      break;
    case 'E':  // chain 1-3-4-...-l with 2 attached to 4
      edge(0, 2, -1, -1);
      edge(1, 3, -1, -1);
      for (int i = 2; i + 1 < l; ++i) edge(i, i + 1, -1, -1);
      break;
    case 'F':  // alpha_3, alpha_4 short
      edge(0, 1, -1, -1);
      edge(1, 2, -1, -2);
      edge(2, 3, -1, -1);
      break;
    case 'G':  // alpha_2 short
      edge(0, 1, -1, -3);
      break;
  }
  return a;
}

bool rank_ok(char series, int l) {
  switch (series) {
    case 'A': return l >= 1;
    case 'B': return l >= 2;
    case 'C': return l >= 2;
    case 'D': return l >= 3;
    case 'E': return l >= 6 && l <= 8;
    case 'F': return l == 4;
    case 'G': return l == 2;
    default: return false;
  }
}

}  // namespace

std::shared_ptr<const LieData> LieData::build(std::string_view name,
                                              int rank_cap) {
  if (name.size() < 2 || !std::isalpha(static_cast<unsigned char>(name[0])))
    throw ConfigError("unsupported algebra '" + std::string(name) + "'");
  char series = static_cast<char>(std::toupper(name[0]));
  int rank = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      throw ConfigError("unsupported algebra '" + std::string(name) + "'");
    rank = rank * 10 + (name[i] - '0');
  }
  return build(series, rank, rank_cap);
}

std::shared_ptr<const LieData> LieData::build(char series, int rank,
                                              int rank_cap) {
  if (!rank_ok(series, rank))
    throw ConfigError("unsupported algebra '" + std::string(1, series) +
                      std::to_string(rank) + "'");
  if (rank > rank_cap)
    throw ConfigError("rank " + std::to_string(rank) +
                      " above the configured cap " + std::to_string(rank_cap));

  auto g = std::shared_ptr<LieData>(new LieData());
  g->name_ = std::string(1, series) + std::to_string(rank);
  g->rank_ = rank;
  g->cart_ = cartan_matrix(series, rank);

  // symmetrizer: d_i a_ij = d_j a_ji, largest root length normalized to 2
  g->d_.assign(rank, 0);
  g->d_[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) {
        if (g->cartan(i, j) == 0 || g->d_[i] == 0 || g->d_[j] != 0) continue;
        g->d_[j] = g->d_[i] * g->cartan(i, j) / g->cartan(j, i);
        changed = true;
      }
  }
  Rational dmax = g->d_[0];
  for (const auto& v : g->d_) dmax = std::max(dmax, v);
  for (auto& v : g->d_) v /= dmax;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (g->d_[i] * g->cartan(i, j) != g->d_[j] * g->cartan(j, i))
        throw Error("Cartan matrix symmetrization failed");

  g->build_roots(g->cart_);
  g->build_constants();
  return g;
}

void LieData::build_roots(const std::vector<int>& cart) {
  std::map<Coords, bool> seen;
  std::vector<Coords> frontier;
  for (int i = 0; i < rank_; ++i) {
    Coords c(rank_, 0);
    c[i] = 1;
    seen[c] = true;
    frontier.push_back(c);
  }
  while (!frontier.empty()) {
    std::vector<Coords> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < rank_; ++i) {
        Coords alpha(rank_, 0);
        alpha[i] = 1;
        if (beta == alpha) continue;
        int p = 0;
        for (Coords down = sub(beta, alpha); seen.count(down);
             down = sub(down, alpha))
          ++p;
        int pairing = 0;
        for (int j = 0; j < rank_; ++j) pairing += cart[i * rank_ + j] * beta[j];
        if (p - pairing >= 1) {
          Coords up = add(beta, alpha);
          if (!seen.count(up)) {
            seen[up] = true;
            next.push_back(up);
          }
        }
      }
    }
    frontier = std::move(next);
  }

  positive_.clear();
  for (const auto& [c, _] : seen) positive_.push_back({c, height_of(c)});
  std::sort(positive_.begin(), positive_.end(),
            [](const Root& a, const Root& b) {
              return std::pair(a.height, a.coords) < std::pair(b.height, b.coords);
            });
  const int np = num_positive();
  for (int r = 0; r < np; ++r) root_index_[positive_[r].coords] = r;
  if (np >= 2 && positive_[np - 1].height == positive_[np - 2].height)
    throw Error("highest root is not unique");

  norm2_.resize(np);
  for (int r = 0; r < np; ++r) norm2_[r] = norm2(positive_[r].coords);
  if (norm2_[theta()] != 2) throw Error("highest root normalization failed");

  Rational hd = 1;
  for (int i = 0; i < rank_; ++i)
    hd += positive_[theta()].coords[i] * d_[i];
  if (!is_integer(hd)) throw Error("dual Coxeter number is not an integer");
  dual_coxeter_ = static_cast<long>(hd.get_num().get_si());

  charge_.assign(dim(), Coords(rank_, 0));
  for (int r = 0; r < np; ++r) {
    charge_[x_index(r, false)] = positive_[r].coords;
    charge_[x_index(r, true)] = neg(positive_[r].coords);
  }

  coroot_.resize(np);
  for (int r = 0; r < np; ++r) {
    Rational dr = norm2_[r] / 2;
    for (int i = 0; i < rank_; ++i)
      if (positive_[r].coords[i] != 0)
        coroot_[r].c[t_index(i)] = Rational(positive_[r].coords[i]) / dr;
  }
}

bool LieData::is_root(const Coords& c) const {
  return root_index_.count(c) > 0 || root_index_.count(neg(c)) > 0;
}

int LieData::root_index(const Coords& c) const {
  auto it = root_index_.find(c);
  return it == root_index_.end() ? -1 : it->second;
}

Rational LieData::norm2(const Coords& c) const {
  Rational n = 0;
  for (int i = 0; i < rank_; ++i) {
    if (c[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      n += Rational(c[i]) * c[j] * d_[i] * cartan(i, j);
  }
  return n;
}

/* N_{mu,nu} for arbitrary roots with mu + nu a root; reduces to the
   table of special positive pairs through antisymmetry, the opposite
   rule N_{-a,-b} = -N_{a,b} and the cyclic rule for triples summing to
   zero, descending in the height of the pair's sum */
Rational LieData::general_n(const Coords& mu, const Coords& nu) const {
  int im = root_index(mu), in = root_index(nu);
  if (im >= 0 && in >= 0) {
    auto key = im < in ? std::pair(im, in) : std::pair(in, im);
    auto it = special_.find(key);
    if (it == special_.end()) throw Error("missing structure constant");
    Rational v(it->second);
    return im < in ? v : -v;
  }
  if (im < 0 && in < 0) return -general_n(neg(mu), neg(nu));
  if (im >= 0) {  // mu positive, nu negative
    Coords tau = neg(nu);
    Coords sigma = add(mu, nu);
    if (root_index(sigma) >= 0)
      return norm2(sigma) / norm2(mu) * general_n(sigma, tau);
    return norm2(neg(sigma)) / norm2(tau) * general_n(neg(sigma), mu);
  }
  return -general_n(nu, mu);
}

void LieData::build_constants() {
  const int np = num_positive();
  const int nb = dim();

  auto string_p = [&](int xi, int eta) {
    int p = 0;
    for (Coords c = sub(positive_[eta].coords, positive_[xi].coords);
         is_root(c); c = sub(c, positive_[xi].coords))
      ++p;
    return p;
  };

  for (int gi = 0; gi < np; ++gi) {
    if (positive_[gi].height < 2) continue;
    const Coords& gamma = positive_[gi].coords;
    std::vector<std::pair<int, int>> pairs;
    for (int xi = 0; xi < np; ++xi) {
      int eta = root_index(sub(gamma, positive_[xi].coords));
      if (eta > xi) pairs.emplace_back(xi, eta);
    }
    if (pairs.empty()) throw Error("non-simple root with no decomposition");
    auto [ea, eb] = pairs.front();
    special_[{ea, eb}] = string_p(ea, eb) + 1;
    const Coords& alpha = positive_[ea].coords;
    const Coords& beta = positive_[eb].coords;
    for (std::size_t t = 1; t < pairs.size(); ++t) {
      auto [xi, eta] = pairs[t];
      const Coords& xc = positive_[xi].coords;
      const Coords& ec = positive_[eta].coords;
      Rational acc = 0;
      if (is_root(sub(beta, xc)))
        acc += general_n(beta, neg(xc)) * general_n(alpha, neg(ec)) /
               norm2(sub(beta, xc));
      if (is_root(sub(alpha, xc)))
        acc += general_n(neg(xc), alpha) * general_n(beta, neg(ec)) /
               norm2(sub(alpha, xc));
      Rational val = norm2(gamma) / Rational(special_[{ea, eb}]) * acc;
      if (!is_integer(val)) throw Error("structure constant is not an integer");
      Integer n = val.get_num();
      if (abs(n) != string_p(xi, eta) + 1)
        throw Error("structure constant magnitude check failed");
      special_[{xi, eta}] = n;
    }
  }

  // pairing <alpha_i, beta> for basis vector b in the root space of beta
  auto cartan_eigen = [&](int i, int b) {
    Rational e = 0;
    for (int j = 0; j < rank_; ++j)
      e += d_[i] * cartan(i, j) * charge_[b][j];
    return e;
  };

  brackets_.assign(static_cast<std::size_t>(nb) * nb, AlgElem{});
  form_.assign(static_cast<std::size_t>(nb) * nb, Rational(0));

  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      form_[t_index(i) * nb + t_index(j)] = d_[i] * cartan(i, j);
  for (int r = 0; r < np; ++r) {
    Rational v = 2 / norm2_[r];
    form_[x_index(r, false) * nb + x_index(r, true)] = v;
    form_[x_index(r, true) * nb + x_index(r, false)] = v;
  }

  for (int a = 0; a < nb; ++a) {
    for (int b = 0; b < nb; ++b) {
      AlgElem& out = brackets_[a * nb + b];
      bool ac = is_cartan(a), bc = is_cartan(b);
      if (ac && bc) continue;
      if (ac || bc) {
        int i = (ac ? a : b) - num_positive();
        int v = ac ? b : a;
        Rational e = cartan_eigen(i, v);
        if (e != 0) {
          out.c[v] = ac ? e : -e;
        }
        continue;
      }
      const Coords& mu = charge_[a];
      const Coords& nu = charge_[b];
      Coords s = add(mu, nu);
      if (height_of(s) == 0 && s == Coords(rank_, 0)) {
        int r = root_index(mu);
        if (r >= 0)
          out = coroot_[r];
        else {
          out = coroot_[root_index(nu)];
          out *= -1;
        }
        continue;
      }
      if (!is_root(s)) continue;
      Rational n = general_n(mu, nu);
      int si = root_index(s);
      int target = si >= 0 ? x_index(si, false) : x_index(root_index(neg(s)), true);
      if (n != 0) out.c[target] = n;
    }
  }
}

AlgElem LieData::bracket(const AlgElem& a, const AlgElem& b) const {
  AlgElem out;
  for (const auto& [i, ci] : a.c)
    for (const auto& [j, cj] : b.c) {
      AlgElem t = bracket_basis(i, j);
      t *= ci * cj;
      out += t;
    }
  return out;
}

Rational LieData::form(const AlgElem& a, const AlgElem& b) const {
  Rational out = 0;
  for (const auto& [i, ci] : a.c)
    for (const auto& [j, cj] : b.c) out += ci * cj * form_basis(i, j);
  return out;
}

long LieData::level_rescale(int r, long level) const {
  Rational v = Rational(2) / norm2_[r] * level;
  if (!is_integer(v)) throw Error("rescaled level is not an integer");
  return static_cast<long>(v.get_num().get_si());
}

Sl2Triple LieData::sl2_triple(int r, long level) const {
  return {x_plus(r), coroot(r), x_minus(r), level_rescale(r, level)};
}

std::string LieData::root_name(int r) const {
  if (r < 26) return std::string(1, static_cast<char>('a' + r));
  return "r" + std::to_string(r);
}

std::string LieData::label(int b) const {
  const int np = num_positive();
  if (b < np) return "x[-" + root_name(np - 1 - b) + "]";
  if (b < np + rank_) return "t[" + std::to_string(b - np + 1) + "]";
  return "x[" + root_name(b - np - rank_) + "]";
}

namespace {

AlgElem exp_ad(const LieData& g, const AlgElem& x, AlgElem v) {
  AlgElem acc = v;
  for (long n = 1; !v.is_zero(); ++n) {
    if (n > 64) throw Error("exp(ad x) did not terminate");
    v = g.bracket(x, v);
    v *= Rational(1, n);
    acc += v;
  }
  return acc;
}

}  // namespace

AlgElem WeylAutomorphism::apply(const AlgElem& a) const {
  AlgElem out;
  for (const auto& [b, v] : a.c) {
    AlgElem t = image[b];
    t *= v;
    out += t;
  }
  return out;
}

Coords WeylAutomorphism::apply_charge(const Coords& c) const {
  if (!algebra) throw Error("detached automorphism");
  Coords out = c;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it - 1;
    long pairing = 0;
    for (int j = 0; j < algebra->rank(); ++j)
      pairing += algebra->cartan(i, j) * out[j];
    out[i] -= static_cast<int>(pairing);
  }
  return out;
}

WeylAutomorphism LieData::weyl_element(const std::vector<int>& word) const {
  for (int i : word)
    if (i < 1 || i > rank_)
      throw ConfigError("reflection index " + std::to_string(i) +
                        " outside 1.." + std::to_string(rank_));
  WeylAutomorphism w;
  w.word = word;
  w.algebra = this;
  w.image.resize(dim());
  for (int b = 0; b < dim(); ++b) {
    AlgElem v = AlgElem::unit(b);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      Coords sc(rank_, 0);
      sc[*it - 1] = 1;
      int r = root_index(sc);
      AlgElem e = x_plus(r), f = x_minus(r);
      AlgElem mf = f;
      mf *= -1;
      v = exp_ad(*this, e, exp_ad(*this, mf, exp_ad(*this, e, v)));
    }
    w.image[b] = v;
  }
  return w;
}

}  // namespace voa
