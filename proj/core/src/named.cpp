#include "voa/named.hpp"

#include <vector>

namespace voa {

namespace {

/* Gauss-Jordan inverse of a small symmetric rational matrix */
std::vector<Rational> invert(std::vector<Rational> m, int n) {
  std::vector<Rational> inv(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r * n + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw Error("degenerate Cartan form");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(m[pivot * n + j], m[col * n + j]);
        std::swap(inv[pivot * n + j], inv[col * n + j]);
      }
    Rational p = m[col * n + col];
    for (int j = 0; j < n; ++j) {
      m[col * n + j] /= p;
      inv[col * n + j] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r * n + col] == 0) continue;
      Rational factor = m[r * n + col];
      for (int j = 0; j < n; ++j) {
        m[r * n + j] -= factor * m[col * n + j];
        inv[r * n + j] -= factor * inv[col * n + j];
      }
    }
  }
  return inv;
}

/* product of modes of algebra elements applied to |0>, left to right */
State word_state(const FockSpace& f,
                 const std::vector<std::pair<AlgElem, int>>& factors,
                 Rational coeff = 1) {
  State cur = State::single({}, coeff);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    cur = f.apply(it->first, it->second, cur);
  return cur;
}

}  // namespace

State cartan_casimir(const FockSpace& f) {
  const LieData& g = f.algebra();
  const int l = g.rank();
  std::vector<Rational> gram(static_cast<std::size_t>(l) * l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      gram[i * l + j] = g.form_basis(g.t_index(i), g.t_index(j));
  auto inv = invert(std::move(gram), l);
  State out;
  for (int i = 0; i < l; ++i) {
    AlgElem dual;
    for (int j = 0; j < l; ++j)
      if (inv[j * l + i] != 0) dual.c[g.t_index(j)] = inv[j * l + i];
    out += word_state(f, {{g.t(i), -1}, {dual, -1}});
  }
  return out;
}

State omega_affine(const FockSpace& f) {
  const LieData& g = f.algebra();
  State sum = cartan_casimir(f);
  for (int r = 0; r < g.num_positive(); ++r) {
    Rational dr = g.root_norm2(r) / 2;
    sum += dr * word_state(f, {{g.x_plus(r), -1}, {g.x_minus(r), -1}});
    sum += dr * word_state(f, {{g.x_minus(r), -1}, {g.x_plus(r), -1}});
  }
  sum *= Rational(1) / (2 * (f.level() + g.dual_coxeter()));
  return sum;
}

State omega_heisenberg(const FockSpace& f) {
  State sum = cartan_casimir(f);
  sum *= frac(1, 2 * f.level());
  return sum;
}

State omega_parafermion(const FockSpace& f) {
  return omega_affine(f) - omega_heisenberg(f);
}

State omega_sl2(const FockSpace& f, int r) {
  const LieData& g = f.algebra();
  const long ka = g.level_rescale(r, f.level());
  const AlgElem h = g.coroot(r);
  State sum = word_state(f, {{h, -2}}, -Rational(ka));
  sum -= word_state(f, {{h, -1}, {h, -1}});
  sum += word_state(f, {{g.x_plus(r), -1}, {g.x_minus(r), -1}}, 2 * ka);
  sum *= frac(1, 2 * ka * (ka + 2));
  return sum;
}

State w3_sl2(const FockSpace& f, int r) {
  const LieData& g = f.algebra();
  const Rational ka(g.level_rescale(r, f.level()));
  const AlgElem h = g.coroot(r);
  const AlgElem xp = g.x_plus(r), xm = g.x_minus(r);
  State sum = word_state(f, {{h, -3}}, ka * ka);
  sum += word_state(f, {{h, -2}, {h, -1}}, 3 * ka);
  sum += word_state(f, {{h, -1}, {h, -1}, {h, -1}}, 2);
  sum += word_state(f, {{h, -1}, {xp, -1}, {xm, -1}}, -6 * ka);
  sum += word_state(f, {{xp, -2}, {xm, -1}}, 3 * ka * ka);
  sum += word_state(f, {{xp, -1}, {xm, -2}}, -3 * ka * ka);
  return sum;
}

State theta_singular(const FockSpace& f) {
  const LieData& g = f.algebra();
  State cur = State::vacuum();
  for (long i = 0; i <= f.level(); ++i)
    cur = f.apply_mode(g.x_index(g.theta(), false), -1, cur);
  return cur;
}

State parafermion_singular(const FockSpace& f) {
  const LieData& g = f.algebra();
  State cur = theta_singular(f);
  for (long i = 0; i <= f.level(); ++i)
    cur = f.apply_mode(g.x_index(g.theta(), true), 0, cur);
  return cur;
}

}  // namespace voa
