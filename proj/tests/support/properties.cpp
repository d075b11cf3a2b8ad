#include "properties.hpp"

#include <optional>
#include <random>
#include <vector>

#include "voa/fock.hpp"

namespace voa::props {

namespace {

struct Space {
  std::shared_ptr<const LieData> g;
  std::shared_ptr<FockSpace> fock;
};

std::vector<Space> rotation() {
  std::vector<Space> out;
  for (auto [name, level] : std::initializer_list<std::pair<const char*, long>>{
           {"A1", 1}, {"A1", 2}, {"A2", 1}, {"C2", 1}}) {
    auto g = LieData::build(name);
    out.push_back({g, std::make_shared<FockSpace>(g, level)});
  }
  return out;
}

State random_state(const FockSpace& f, std::mt19937& rng, long wmax) {
  std::uniform_int_distribution<long> wpick(0, wmax);
  std::uniform_int_distribution<int> npick(1, 3);
  std::uniform_int_distribution<int> cpick(0, 4);
  const Rational coeffs[] = {1, -1, 2, Rational(1, 2), Rational(-3, 2)};
  State v;
  int nterms = npick(rng);
  for (int t = 0; t < nterms; ++t) {
    const auto& monos = f.monomials(wpick(rng));
    std::uniform_int_distribution<std::size_t> mpick(0, monos.size() - 1);
    v.add_term(monos[mpick(rng)], coeffs[cpick(rng)]);
  }
  return v;
}

/* homogeneous weight, or nullopt for 0 or mixed */
std::optional<long> state_weight(const State& v) {
  std::optional<long> w;
  for (const auto& [m, c] : v.terms) {
    long mw = mono_weight(m);
    if (w && *w != mw) return std::nullopt;
    w = mw;
  }
  return w;
}

std::optional<Coords> state_charge(const LieData& g, const State& v) {
  std::optional<Coords> ch;
  for (const auto& [m, c] : v.terms) {
    Coords mc = mono_charge(g, m);
    if (ch && *ch != mc) return std::nullopt;
    ch = mc;
  }
  return ch;
}

void note_failure(SuiteResult& res, const std::string& what) {
  ++res.failures;
  if (res.failures <= 3) res.detail += what + "\n";
}

}  // namespace

SuiteResult bracket_on_module(long cases, unsigned seed) {
  SuiteResult res;
  std::mt19937 rng(seed);
  auto spaces = rotation();
  std::uniform_int_distribution<int> mode(-3, 3);
  for (long i = 0; i < cases; ++i) {
    const auto& sp = spaces[i % spaces.size()];
    const auto& f = *sp.fock;
    std::uniform_int_distribution<int> bpick(0, sp.g->dim() - 1);
    int a = bpick(rng), b = bpick(rng);
    int m = mode(rng), n = mode(rng);
    State v = random_state(f, rng, 3);
    State lhs = f.apply_mode(a, m, f.apply_mode(b, n, v)) -
                f.apply_mode(b, n, f.apply_mode(a, m, v));
    State rhs = f.apply(sp.g->bracket_basis(a, b), m + n, v);
    if (m + n == 0) {
      State central = v;
      central *= Rational(m) * sp.g->form_basis(a, b) * f.level();
      rhs += central;
    }
    ++res.cases;
    if (!(lhs == rhs))
      note_failure(res, sp.g->name() + " [" + sp.g->label(a) + "(" +
                            std::to_string(m) + "), " + sp.g->label(b) + "(" +
                            std::to_string(n) + ")] on " + f.format(v));
  }
  return res;
}

SuiteResult grading_additivity(long cases, unsigned seed) {
  SuiteResult res;
  std::mt19937 rng(seed);
  auto spaces = rotation();
  std::uniform_int_distribution<int> mode(-4, 4);
  for (long i = 0; i < cases; ++i) {
    const auto& sp = spaces[i % spaces.size()];
    const auto& f = *sp.fock;
    std::uniform_int_distribution<int> bpick(0, sp.g->dim() - 1);
    std::uniform_int_distribution<long> wpick(0, 4);
    int b = bpick(rng), m = mode(rng);
    const auto& monos = f.monomials(wpick(rng));
    std::uniform_int_distribution<std::size_t> mpick(0, monos.size() - 1);
    const Monomial& start = monos[mpick(rng)];
    State v = State::single(start);
    State av = f.apply_mode(b, m, v);
    ++res.cases;
    if (av.is_zero()) continue;
    auto w = state_weight(av);
    auto ch = state_charge(*sp.g, av);
    Coords expect_ch = mono_charge(*sp.g, start);
    for (int j = 0; j < sp.g->rank(); ++j) expect_ch[j] += sp.g->charge(b)[j];
    if (!w || *w != mono_weight(start) - m || !ch || *ch != expect_ch)
      note_failure(res, sp.g->name() + " " + sp.g->label(b) + "(" +
                            std::to_string(m) + ") " + f.format(v));
  }
  return res;
}

SuiteResult straightening_confluence(long cases, unsigned seed) {
  SuiteResult res;
  std::mt19937 rng(seed);
  auto spaces = rotation();
  std::uniform_int_distribution<int> len(0, 5);
  std::uniform_int_distribution<int> mode(-3, 2);
  for (long i = 0; i < cases; ++i) {
    const auto& sp = spaces[i % spaces.size()];
    const auto& f = *sp.fock;
    std::uniform_int_distribution<int> bpick(0, sp.g->dim() - 1);
    Monomial word(len(rng));
    for (auto& fac : word) fac = {mode(rng), bpick(rng)};
    State first = f.straighten(word);
    std::mt19937 pick_rng(seed ^ (0x9e37u + static_cast<unsigned>(i)));
    State second = f.straighten_choice(
        word, 1,
        [&pick_rng](const Monomial&, const std::vector<std::size_t>& spots) {
          std::uniform_int_distribution<std::size_t> d(0, spots.size() - 1);
          return d(pick_rng);
        });
    bool canon = true;
    for (const auto& [m, c] : first.terms)
      if (!is_canonical(m)) canon = false;
    ++res.cases;
    if (!(first == second) || !canon)
      note_failure(res, sp.g->name() + " word " + f.format(word));
  }
  return res;
}

}  // namespace voa::props
