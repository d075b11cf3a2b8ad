#include "voa/vertex.hpp"

namespace voa {

VertexEngine::VertexEngine(std::shared_ptr<FockSpace> fock,
                           long truncation_slack)
    : fock_(std::move(fock)), slack_(truncation_slack) {
  if (!fock_) throw Error("null Fock space");
  if (slack_ < 0) throw ConfigError("truncation slack must be non-negative");
}

State VertexEngine::mode_product(const Monomial& u, long n,
                                 const Monomial& v) const {
  if (!is_canonical(u) || !is_canonical(v))
    throw Error("mode products expect canonical monomials");
  auto key = std::tuple(u, n, v);
  {
    std::scoped_lock lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  State out = mode_product_uncached(u, n, v);
  std::scoped_lock lock(memo_mutex_);
  return memo_.emplace(std::move(key), std::move(out)).first->second;
}

State VertexEngine::mode_product_uncached(const Monomial& u, long n,
                                          const Monomial& v) const {
  if (u.empty()) return n == -1 ? State::single(v) : State();
  const Factor head = u.front();
  const long m = -head.mode;
  const Monomial w(u.begin() + 1, u.end());
  const long wt_w = mono_weight(w), wt_v = mono_weight(v);
  State out;
  for (long j = 0; j + n <= wt_w + wt_v - 1 + slack_; ++j) {
    State inner = mode_product(w, n + j, v);
    if (inner.is_zero()) continue;
    State outer = fock_->apply_mode(head.basis, static_cast<int>(-(m + j)), inner);
    outer *= Rational(binomial(m + j - 1, j));
    out += outer;
  }
  const Rational tail_sign = m % 2 == 0 ? -1 : 1;  // -(-1)^m
  for (long j = 0; j <= wt_v + slack_; ++j) {
    State av = fock_->apply_mode(head.basis, static_cast<int>(j),
                                 State::single(v));
    if (av.is_zero()) continue;
    State term;
    for (const auto& [mv, cv] : av.terms) {
      State part = mode_product(w, n - m - j, mv);
      part *= cv;
      term += part;
    }
    term *= tail_sign * Rational(binomial(m + j - 1, j));
    out += term;
  }
  return out;
}

State VertexEngine::mode_product(const State& u, long n, const State& v) const {
  State out;
  for (const auto& [mu, cu] : u.terms)
    for (const auto& [mv, cv] : v.terms) {
      State part = mode_product(mu, n, mv);
      part *= cu * cv;
      out += part;
    }
  return out;
}

VirasoroReport VertexEngine::virasoro_check(
    const State& omega, long weight_cap, int mode_window,
    std::vector<State> derivative_samples) const {
  VirasoroReport rep;
  rep.central_charge = 2 * mode_product(omega, 3, omega).vacuum_coefficient();

  auto fail = [&](const std::string& what) {
    if (rep.first_failure.empty()) rep.first_failure = what;
  };

  rep.commutator_ok = true;
  for (long wt = 0; wt <= weight_cap; ++wt) {
    for (const auto& mono : fock_->monomials(wt)) {
      State v = State::single(mono);
      ++rep.states_checked;
      for (int mm = -mode_window; mm <= mode_window; ++mm)
        for (int nn = mm + 1; nn <= mode_window; ++nn) {
          State lhs = l_mode(omega, mm, l_mode(omega, nn, v)) -
                      l_mode(omega, nn, l_mode(omega, mm, v));
          State rhs = l_mode(omega, mm + nn, v);
          rhs *= Rational(mm - nn);
          if (mm + nn == 0) {
            State central = v;
            central *= frac(static_cast<long>(mm) * mm * mm - mm, 12) *
                       rep.central_charge;
            rhs += central;
          }
          ++rep.pairs_checked;
          if (!(lhs == rhs)) {
            rep.commutator_ok = false;
            fail("[L(" + std::to_string(mm) + "), L(" + std::to_string(nn) +
                 ")] mismatch on " + fock_->format(v));
          }
        }
    }
  }

  if (derivative_samples.empty()) {
    derivative_samples.push_back(State::vacuum());
    derivative_samples.push_back(omega);
    for (long n : {0, -1, -2})
      derivative_samples.push_back(l_mode(omega, n, omega));
  }
  rep.derivative_ok = true;
  for (const auto& u : derivative_samples) {
    State lhs = l_mode(omega, -1, u);
    State rhs = mode_product(u, -2, State::vacuum());
    if (!(lhs == rhs)) {
      rep.derivative_ok = false;
      fail("translation generator mismatch on " + fock_->format(u));
    }
  }
  return rep;
}

PrimaryReport VertexEngine::primary_check(const State& omega, const State& u,
                                          long upto) const {
  PrimaryReport rep;
  rep.annihilated = true;
  for (long n = 1; n <= upto; ++n)
    if (!l_mode(omega, n, u).is_zero()) rep.annihilated = false;
  State l0 = l_mode(omega, 0, u);
  if (u.is_zero()) {
    rep.eigenvector = l0.is_zero();
    return rep;
  }
  const auto& [m0, c0] = *u.terms.begin();
  auto it = l0.terms.find(m0);
  rep.weight = it == l0.terms.end() ? Rational(0) : it->second / c0;
  State scaled = u;
  scaled *= rep.weight;
  rep.eigenvector = l0 == scaled;
  return rep;
}

std::size_t VertexEngine::memo_size() const {
  std::scoped_lock lock(memo_mutex_);
  return memo_.size();
}

}  // namespace voa
