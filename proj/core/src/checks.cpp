#include "voa/checks.hpp"

#include <chrono>
#include <memory>
#include <sstream>

#include "voa/graded.hpp"
#include "voa/named.hpp"
#include "voa/vertex.hpp"

namespace voa {

namespace {

struct Workspace {
  std::shared_ptr<const LieData> g;
  std::shared_ptr<FockSpace> fock;
  std::shared_ptr<VertexEngine> eng;
  std::shared_ptr<BasisTable> table;
  Limits limits;
};

Workspace open_workspace(const RunConfig& cfg, long slack_override = -1) {
  if (cfg.max_weight < 0) throw ConfigError("max weight must be nonnegative");
  Workspace w;
  w.g = LieData::build(cfg.algebra);
  w.fock = std::make_shared<FockSpace>(w.g, cfg.level);
  w.eng = std::make_shared<VertexEngine>(
      w.fock, slack_override >= 0 ? slack_override : cfg.slack);
  w.limits = Limits(cfg.bucket_cap, cfg.time_cap_s);
  w.table = std::make_shared<BasisTable>(w.fock, w.limits);
  return w;
}

struct Timer {
  CheckReport& rep;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  explicit Timer(CheckReport& r) : rep(r) {}
  ~Timer() {
    rep.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
  }
};

CheckReport base_report(const char* name, const RunConfig& cfg) {
  CheckReport rep;
  rep.name = name;
  rep.algebra = cfg.algebra;
  rep.level = cfg.level;
  rep.max_weight = cfg.max_weight;
  return rep;
}

/* first basis state separating the two spans, if any */
std::string diff_witness(const FockSpace& f, const Subspace& a,
                         const Subspace& b, long max_weight) {
  for (const auto& v : b.all_basis_states(max_weight))
    if (!a.contains(v)) return f.format(v);
  for (const auto& v : a.all_basis_states(max_weight))
    if (!b.contains(v)) return f.format(v);
  return "";
}

/* coefficients of prod_n (1-q^n)^-colors */
std::vector<long> colored_partitions(int colors, long max_weight) {
  std::vector<long> p(max_weight + 1, 0);
  p[0] = 1;
  for (int c = 0; c < colors; ++c)
    for (long n = 1; n <= max_weight; ++n)
      for (long w = n; w <= max_weight; ++w) p[w] += p[w - n];
  return p;
}

std::vector<State> cartan_currents(const FockSpace& f) {
  std::vector<State> out;
  for (int i = 0; i < f.algebra().rank(); ++i)
    out.push_back(State::single({{-1, f.algebra().t_index(i)}}));
  return out;
}

std::vector<State> paired_root_generators(const FockSpace& f) {
  std::vector<State> out;
  for (int r = 0; r < f.algebra().num_positive(); ++r)
    out.push_back(f.straighten({{-2, f.algebra().x_index(r, true)},
                                {-1, f.algebra().x_index(r, false)}}));
  return out;
}

std::vector<State> coset_generators(const FockSpace& f) {
  std::vector<State> out;
  for (int r = 0; r < f.algebra().num_positive(); ++r) {
    out.push_back(omega_sl2(f, r));
    out.push_back(w3_sl2(f, r));
  }
  return out;
}

/* x_{-a}(0)^{m+1} x_a(-1)^{m+1} |0> at the root's rescaled level m */
State root_singular(const FockSpace& f, int r) {
  long m = f.algebra().level_rescale(r, f.level());
  Monomial word(m + 1, Factor{-1, f.algebra().x_index(r, false)});
  State v = f.straighten(word);
  for (long i = 0; i <= m; ++i)
    v = f.apply_mode(f.algebra().x_index(r, true), 0, v);
  return v;
}

Subspace commutant_ideal(const Workspace& ws, long max_weight,
                         const Subspace& ambient) {
  if (ws.fock->level() + 1 > max_weight) return Subspace(ws.table);
  return generated_ideal(*ws.eng, ws.table,
                         {parafermion_singular(*ws.fock)}, max_weight,
                         IdealStrategy::SpanFixpoint, &ambient, ws.limits);
}

}  // namespace

CheckReport check_virasoro(const RunConfig& cfg) {
  CheckReport rep = base_report("check-virasoro", cfg);
  Timer timer(rep);
  if (cfg.max_weight < 2)
    throw ConfigError("virasoro relations need max weight >= 2");
  Workspace ws = open_workspace(cfg);
  long cap = std::min(cfg.max_weight, 3L);

  struct Item {
    const char* tag;
    State vec;
    Rational expected;
  };
  Rational c_full =
      frac(cfg.level * ws.g->dim(), cfg.level + ws.g->dual_coxeter());
  Rational c_heis = ws.g->rank();
  std::vector<Item> items;
  items.push_back({"sugawara", omega_affine(*ws.fock), c_full});
  items.push_back({"heisenberg", omega_heisenberg(*ws.fock), c_heis});
  items.push_back({"coset", omega_parafermion(*ws.fock), c_full - c_heis});

  rep.pass = true;
  for (const auto& it : items) {
    VirasoroReport vr = ws.eng->virasoro_check(it.vec, cap, 3);
    bool good = vr.ok() && vr.central_charge == it.expected;
    rep.constants.emplace_back(std::string("central_charge_") + it.tag,
                               to_string(vr.central_charge));
    if (!good && rep.witness.empty()) {
      rep.witness = !vr.first_failure.empty()
                        ? vr.first_failure
                        : std::string(it.tag) + ": central charge " +
                              to_string(vr.central_charge) +
                              " != " + to_string(it.expected);
    }
    rep.pass = rep.pass && good;
  }
  return rep;
}

CheckReport check_commutant(const RunConfig& cfg) {
  CheckReport rep = base_report("check-commutant", cfg);
  Timer timer(rep);
  Workspace ws = open_workspace(cfg);

  std::vector<std::pair<std::string, State>> vectors;
  for (int r = 0; r < ws.g->num_positive(); ++r) {
    vectors.emplace_back("omega[" + ws.g->root_name(r) + "]",
                         omega_sl2(*ws.fock, r));
    vectors.emplace_back("w3[" + ws.g->root_name(r) + "]",
                         w3_sl2(*ws.fock, r));
  }
  vectors.emplace_back("omega_coset", omega_parafermion(*ws.fock));

  rep.pass = true;
  long checked = 0;
  for (const auto& [tag, vec] : vectors) {
    for (int i = 0; i < ws.g->rank(); ++i)
      for (int m = 0; m <= 3; ++m) {
        ++checked;
        if (ws.fock->apply_mode(ws.g->t_index(i), m, vec).is_zero()) continue;
        rep.pass = false;
        if (rep.witness.empty()) {
          std::ostringstream os;
          os << "t[" << (i + 1) << "](" << m << ") does not annihilate "
             << tag;
          rep.witness = os.str();
        }
      }
  }
  rep.constants.emplace_back("vectors_checked",
                             std::to_string(vectors.size()));
  rep.constants.emplace_back("cartan_modes_checked", std::to_string(checked));
  return rep;
}

CheckReport check_generators(const RunConfig& cfg) {
  CheckReport rep = base_report("check-generators", cfg);
  rep.options.emplace_back("which", cfg.which);
  Timer timer(rep);
  Workspace ws = open_workspace(cfg);
  long n = cfg.max_weight;
  Coords zero(ws.g->rank(), 0);

  if (cfg.which == "charge-zero") {
    std::vector<State> gens = cartan_currents(*ws.fock);
    for (auto& v : paired_root_generators(*ws.fock)) gens.push_back(v);
    Subspace sub = generated_subalgebra(*ws.eng, ws.table, gens, n, ws.limits);
    Subspace target = charge_zero_space(ws.table, n);
    rep.tables.emplace_back("generated", weight_dims(sub, n));
    rep.tables.emplace_back("charge_zero", weight_dims(target, n));
    rep.pass = subspace_equal(sub, target, n);
    if (!rep.pass) rep.witness = diff_witness(*ws.fock, sub, target, n);
    if (cfg.truncation_regression) {
      Workspace ws2 = open_workspace(cfg, cfg.slack + 2);
      Subspace again =
          generated_subalgebra(*ws2.eng, ws2.table, gens, n, ws2.limits);
      bool stable = weight_dims(again, n) == weight_dims(sub, n);
      rep.constants.emplace_back("truncation_stable", stable ? "yes" : "no");
      rep.pass = rep.pass && stable;
    }
  } else if (cfg.which == "commutant") {
    std::vector<State> gens = coset_generators(*ws.fock);
    Subspace sub = generated_subalgebra(*ws.eng, ws.table, gens, n, ws.limits);
    Subspace target = highest_weight_space(ws.table, n, zero);
    rep.tables.emplace_back("generated", weight_dims(sub, n));
    rep.tables.emplace_back("commutant", weight_dims(target, n));
    bool first = subspace_equal(sub, target, n);
    if (!first) rep.witness = diff_witness(*ws.fock, sub, target, n);

    for (auto& v : cartan_currents(*ws.fock)) gens.push_back(v);
    Subspace widened =
        generated_subalgebra(*ws.eng, ws.table, gens, n, ws.limits);
    Subspace cz = charge_zero_space(ws.table, n);
    rep.tables.emplace_back("widened", weight_dims(widened, n));
    bool second = subspace_equal(widened, cz, n);
    if (!second && rep.witness.empty())
      rep.witness = diff_witness(*ws.fock, widened, cz, n);
    rep.constants.emplace_back("cartan_adjoined_fills_charge_zero",
                               second ? "yes" : "no");
    rep.pass = first && second;
  } else if (cfg.which == "quotient") {
    Subspace n0 = highest_weight_space(ws.table, n, zero);
    Subspace ideal = commutant_ideal(ws, n, n0);
    Subspace sub = generated_subalgebra(*ws.eng, ws.table,
                                        coset_generators(*ws.fock), n,
                                        ws.limits);
    Subspace joined(ws.table);
    for (const auto& v : sub.all_basis_states(n)) joined.insert(v);
    for (const auto& v : ideal.all_basis_states(n)) joined.insert(v);
    rep.tables.emplace_back("generated", weight_dims(sub, n));
    rep.tables.emplace_back("generated_plus_ideal", weight_dims(joined, n));
    rep.tables.emplace_back("commutant", weight_dims(n0, n));
    rep.pass = subspace_equal(joined, n0, n);
    if (!rep.pass) rep.witness = diff_witness(*ws.fock, joined, n0, n);
  } else {
    throw ConfigError("unknown generator target: " + cfg.which);
  }
  return rep;
}

CheckReport check_ideal(const RunConfig& cfg) {
  CheckReport rep = base_report("check-ideal", cfg);
  Timer timer(rep);
  Workspace ws = open_workspace(cfg);
  long n = cfg.max_weight;
  if (cfg.level + 1 > n)
    throw ConfigError("max weight too small for the singular vector");
  Coords zero(ws.g->rank(), 0);

  Subspace n0 = highest_weight_space(ws.table, n, zero);
  Subspace inner = commutant_ideal(ws, n, n0);
  Subspace whole =
      generated_ideal(*ws.eng, ws.table, {theta_singular(*ws.fock)}, n,
                      IdealStrategy::AffineFixpoint, nullptr, ws.limits);
  Subspace cut = intersect(whole, n0);
  rep.tables.emplace_back("commutant_ideal", weight_dims(inner, n));
  rep.tables.emplace_back("module_ideal_cut", weight_dims(cut, n));
  bool agree = subspace_equal(inner, cut, n);
  if (!agree) rep.witness = diff_witness(*ws.fock, inner, cut, n);
  rep.constants.emplace_back("two_sided_agreement", agree ? "yes" : "no");

  bool members = true;
  long skipped = 0;
  for (int r = 0; r < ws.g->num_positive(); ++r) {
    long m = ws.g->level_rescale(r, cfg.level);
    std::string key = "member_" + ws.g->root_name(r);
    if (m + 1 > n) {
      ++skipped;
      rep.constants.emplace_back(key, "skipped");
      continue;
    }
    bool in = inner.contains(root_singular(*ws.fock, r));
    rep.constants.emplace_back(key, in ? "yes" : "no");
    if (!in && rep.witness.empty())
      rep.witness = "root " + ws.g->root_name(r) +
                    " singular vector escapes the ideal";
    members = members && in;
  }
  rep.constants.emplace_back("memberships_skipped", std::to_string(skipped));
  rep.pass = agree && members;

  if (cfg.truncation_regression) {
    Workspace ws2 = open_workspace(cfg, cfg.slack + 2);
    Subspace n0b = highest_weight_space(ws2.table, n, zero);
    Subspace again = commutant_ideal(ws2, n, n0b);
    bool stable = weight_dims(again, n) == weight_dims(inner, n);
    rep.constants.emplace_back("truncation_stable", stable ? "yes" : "no");
    rep.pass = rep.pass && stable;
  }
  return rep;
}

CheckReport check_weyl(const RunConfig& cfg) {
  CheckReport rep = base_report("check-weyl", cfg);
  Timer timer(rep);
  Workspace ws = open_workspace(cfg);
  long n = cfg.max_weight;
  std::vector<int> word = cfg.word.empty() ? std::vector<int>{1} : cfg.word;
  {
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i)
      os << (i ? "," : "") << word[i];
    rep.options.emplace_back("word", os.str());
  }
  WeylAutomorphism sigma = ws.g->weyl_element(word);

  /* mode products commute with the lift */
  std::vector<State> us = {State::single({{-1, ws.g->t_index(0)}}),
                           State::single({{-1, ws.g->x_index(0, true)}}),
                           omega_affine(*ws.fock)};
  std::vector<State> vs = {State::vacuum(),
                           State::single({{-1, ws.g->x_index(0, false)}}),
                           State::single({{-2, ws.g->t_index(0)}})};
  bool hom = true;
  long samples = 0;
  for (const auto& u : us)
    for (const auto& v : vs)
      for (long m = -2; m <= 1; ++m) {
        ++samples;
        State lhs = ws.fock->weyl_apply(sigma, ws.eng->mode_product(u, m, v));
        State rhs = ws.eng->mode_product(ws.fock->weyl_apply(sigma, u), m,
                                         ws.fock->weyl_apply(sigma, v));
        if (lhs == rhs) continue;
        hom = false;
        if (rep.witness.empty())
          rep.witness = "lift breaks on " + ws.fock->format(u) + " mode " +
                        std::to_string(m) + " of " + ws.fock->format(v);
      }
  rep.constants.emplace_back("homomorphism_samples", std::to_string(samples));
  rep.constants.emplace_back("homomorphism", hom ? "yes" : "no");

  /* the module ideal is carried onto itself, bucket for bucket */
  bool stable = true, symmetric = true, image_ok = true;
  long mapped = 0;
  if (cfg.level + 1 <= n) {
    Subspace whole =
        generated_ideal(*ws.eng, ws.table, {theta_singular(*ws.fock)}, n,
                        IdealStrategy::AffineFixpoint, nullptr, ws.limits);
    for (const auto& b : whole.all_basis_states(n)) {
      ++mapped;
      if (whole.contains(ws.fock->weyl_apply(sigma, b))) continue;
      stable = false;
      if (rep.witness.empty())
        rep.witness = "ideal vector leaves the ideal: " + ws.fock->format(b);
      break;
    }
    for (const auto& key : whole.keys()) {
      BucketKey moved{key.weight, sigma.apply_charge(key.charge)};
      if (whole.dim(key) == whole.dim(moved)) continue;
      symmetric = false;
      if (rep.witness.empty()) rep.witness = "ideal bucket dims move";
    }
    State image = ws.fock->weyl_apply(sigma, parafermion_singular(*ws.fock));
    image_ok = !image.is_zero() && whole.contains(image) &&
               state_bucket(*ws.g, image) ==
                   BucketKey{cfg.level + 1, Coords(ws.g->rank(), 0)};
    rep.constants.emplace_back("singular_image_in_ideal",
                               image_ok ? "yes" : "no");
  } else {
    rep.constants.emplace_back("singular_image_in_ideal", "skipped");
  }
  rep.constants.emplace_back("ideal_basis_mapped", std::to_string(mapped));
  rep.pass = hom && stable && symmetric && image_ok;
  return rep;
}

CheckReport graded_dims(const RunConfig& cfg) {
  CheckReport rep = base_report("graded-dims", cfg);
  Timer timer(rep);
  Workspace ws = open_workspace(cfg);
  long n = cfg.max_weight;
  Coords zero(ws.g->rank(), 0);

  Subspace cz = charge_zero_space(ws.table, n);
  Subspace n0 = highest_weight_space(ws.table, n, zero);
  Subspace ideal = commutant_ideal(ws, n, n0);
  std::vector<long> cz_dims = weight_dims(cz, n);
  std::vector<long> n0_dims = weight_dims(n0, n);
  std::vector<long> ideal_dims = weight_dims(ideal, n);
  std::vector<long> quot = quotient_dims(n0, ideal, n);
  rep.tables.emplace_back("vacuum_charge_zero", cz_dims);
  rep.tables.emplace_back("commutant", n0_dims);
  rep.tables.emplace_back("commutant_ideal", ideal_dims);
  rep.tables.emplace_back("parafermion_quotient", quot);

  /* charge zero character factors through the Heisenberg piece */
  std::vector<long> heis = colored_partitions(ws.g->rank(), n);
  bool factored = true;
  for (long w = 0; w <= n && factored; ++w) {
    long sum = 0;
    for (long j = 0; j <= w; ++j) sum += heis[j] * n0_dims[w - j];
    factored = sum == cz_dims[w];
    if (!factored)
      rep.witness = "charge zero dimension at weight " + std::to_string(w) +
                    " does not factor";
  }
  rep.constants.emplace_back("heisenberg_factorization",
                             factored ? "yes" : "no");

  bool nonneg = true;
  for (long d : quot) nonneg = nonneg && d >= 0;
  rep.pass = factored && nonneg && contains_subspace(n0, ideal, n);

  if (cfg.truncation_regression) {
    Workspace ws2 = open_workspace(cfg, cfg.slack + 2);
    Subspace n0b = highest_weight_space(ws2.table, n, zero);
    Subspace again = commutant_ideal(ws2, n, n0b);
    bool stable = weight_dims(again, n) == ideal_dims;
    rep.constants.emplace_back("truncation_stable", stable ? "yes" : "no");
    rep.pass = rep.pass && stable;
  }
  return rep;
}

}  // namespace voa
