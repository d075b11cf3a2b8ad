#include "voa/fock.hpp"

#include <algorithm>

namespace voa {

long mono_weight(const Monomial& m) {
  long w = 0;
  for (const auto& f : m) w -= f.mode;
  return w;
}

Coords mono_charge(const LieData& g, const Monomial& m) {
  Coords c(g.rank(), 0);
  for (const auto& f : m)
    for (int i = 0; i < g.rank(); ++i) c[i] += g.charge(f.basis)[i];
  return c;
}

bool is_canonical(const Monomial& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].mode >= 0) return false;
    if (i + 1 < m.size() && m[i + 1] < m[i]) return false;
  }
  return true;
}

void State::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

State& State::operator+=(const State& o) {
  for (const auto& [m, c] : o.terms) add_term(m, c);
  return *this;
}

State& State::operator-=(const State& o) {
  for (const auto& [m, c] : o.terms) add_term(m, -c);
  return *this;
}

State& State::operator*=(const Rational& s) {
  if (s == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [m, c] : terms) c *= s;
  return *this;
}

Rational State::vacuum_coefficient() const {
  auto it = terms.find(Monomial{});
  return it == terms.end() ? Rational(0) : it->second;
}

FockSpace::FockSpace(std::shared_ptr<const LieData> g, long level)
    : g_(std::move(g)), level_(level) {
  if (!g_) throw Error("null algebra");
  if (level_ < 1) throw ConfigError("level must be a positive integer");
}

/* Reducible positions: a non-negative mode that either sits last (kills
   the vacuum) or precedes a negative mode (commute right), and adjacent
   negative modes out of canonical order. Two adjacent non-negative
   modes are left alone; the rightmost one is consumed at the word end
   first, which keeps every rewrite strictly decreasing. */
std::vector<std::size_t> FockSpace::defects(const Monomial& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].mode >= 0) {
      if (i + 1 == w.size() || w[i + 1].mode < 0) out.push_back(i);
      continue;
    }
    if (i + 1 < w.size() && w[i + 1].mode < 0 && w[i + 1] < w[i])
      out.push_back(i);
  }
  return out;
}

State FockSpace::straighten_choice(const Monomial& word, const Rational& coeff,
                                   const DefectPicker& pick) const {
  std::map<Monomial, Rational> pending, done;
  if (coeff != 0) pending.emplace(word, coeff);
  const int nb = g_->dim();
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Monomial& w = node.key();
    const Rational c = std::move(node.mapped());
    if (c == 0) continue;
    auto spots = defects(w);
    if (spots.empty()) {
      auto it = done.find(w);
      if (it == done.end())
        done.emplace(w, c);
      else
        it->second += c;
      continue;
    }
    std::size_t choice = pick(w, spots);
    if (choice >= spots.size()) throw Error("defect picker out of range");
    std::size_t i = spots[choice];
    const Factor a = w[i];
    if (a.mode >= 0 && i + 1 == w.size()) continue;  // kills |0>
    const Factor b = w[i + 1];
    auto push = [&](Monomial&& m, Rational v) {
      if (v == 0) return;
      auto it = pending.find(m);
      if (it == pending.end())
        pending.emplace(std::move(m), std::move(v));
      else
        it->second += v;
    };
    Monomial swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    push(std::move(swapped), c);
    if (a.basis >= nb || b.basis >= nb || a.basis < 0 || b.basis < 0)
      throw Error("factor outside the algebra basis");
    const AlgElem& br = g_->bracket_basis(a.basis, b.basis);
    for (const auto& [t, v] : br.c) {
      Monomial contracted;
      contracted.reserve(w.size() - 1);
      contracted.insert(contracted.end(), w.begin(), w.begin() + i);
      contracted.push_back({a.mode + b.mode, t});
      contracted.insert(contracted.end(), w.begin() + i + 2, w.end());
      push(std::move(contracted), c * v);
    }
    if (a.mode + b.mode == 0) {
      const Rational& f = g_->form_basis(a.basis, b.basis);
      if (f != 0) {
        Monomial cut;
        cut.reserve(w.size() - 2);
        cut.insert(cut.end(), w.begin(), w.begin() + i);
        cut.insert(cut.end(), w.begin() + i + 2, w.end());
        push(std::move(cut), c * a.mode * f * level_);
      }
    }
  }
  State out;
  for (auto& [m, c] : done)
    if (c != 0) out.terms.emplace(m, std::move(c));
  return out;
}

State FockSpace::straighten(const Monomial& word, const Rational& coeff) const {
  return straighten_choice(word, coeff,
                           [](const Monomial&, const std::vector<std::size_t>&) {
                             return std::size_t{0};
                           });
}

State FockSpace::apply_mode(int basis, int mode, const State& v) const {
  State out;
  for (const auto& [m, c] : v.terms) {
    Monomial w;
    w.reserve(m.size() + 1);
    w.push_back({mode, basis});
    w.insert(w.end(), m.begin(), m.end());
    out += straighten(w, c);
  }
  return out;
}

State FockSpace::apply(const AlgElem& a, int mode, const State& v) const {
  State out;
  for (const auto& [b, cb] : a.c) {
    State t = apply_mode(b, mode, v);
    t *= cb;
    out += t;
  }
  return out;
}

State FockSpace::weyl_apply(const WeylAutomorphism& s, const State& v) const {
  State out;
  for (const auto& [m, c] : v.terms) {
    State cur = State::single({}, c);
    for (auto it = m.rbegin(); it != m.rend(); ++it)
      cur = apply(s.apply(AlgElem::unit(it->basis)), it->mode, cur);
    out += cur;
  }
  return out;
}

namespace {

void enumerate_rec(int nb, long rem, long max_depth, int min_basis,
                   Monomial& cur, std::vector<Monomial>& out) {
  if (rem == 0) {
    out.push_back(cur);
    return;
  }
  for (long d = std::min(rem, max_depth); d >= 1; --d) {
    int b0 = d == max_depth ? min_basis : 0;
    for (int b = b0; b < nb; ++b) {
      cur.push_back({static_cast<int>(-d), b});
      enumerate_rec(nb, rem - d, d, b, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

const std::vector<Monomial>& FockSpace::monomials(long weight) const {
  if (weight < 0) throw Error("negative weight");
  std::scoped_lock lock(cache_mutex_);
  auto it = weight_cache_.find(weight);
  if (it != weight_cache_.end()) return it->second;
  std::vector<Monomial> out;
  Monomial cur;
  enumerate_rec(g_->dim(), weight, weight, 0, cur, out);
  std::sort(out.begin(), out.end());
  return weight_cache_.emplace(weight, std::move(out)).first->second;
}

std::string FockSpace::format(const Monomial& m) const {
  std::string out;
  for (const auto& f : m) {
    out += g_->label(f.basis);
    out += "(" + std::to_string(f.mode) + ") ";
  }
  out += "|0>";
  return out;
}

std::string FockSpace::format(const State& v) const {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : v.terms) {
    Rational a = c;
    if (first) {
      if (c < 0) {
        out += "-";
        a = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) a = -c;
    }
    if (a != 1) out += to_string(a) + " ";
    out += format(m);
    first = false;
  }
  return out;
}

}  // namespace voa
