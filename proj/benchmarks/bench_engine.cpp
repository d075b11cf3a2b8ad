#include <benchmark/benchmark.h>

#include "voa/graded.hpp"
#include "voa/named.hpp"
#include "voa/vertex.hpp"

using namespace voa;

namespace {

std::shared_ptr<FockSpace> make_fock(const char* name, long level) {
  return std::make_shared<FockSpace>(LieData::build(name), level);
}

/* weight 6 word in reverse canonical order, every swap emits brackets */
void straighten_reversed(benchmark::State& state) {
  auto f = make_fock("A2", 2);
  const auto& g = f->algebra();
  Monomial word{{-1, g.x_index(0, false)},
                {-1, g.x_index(0, true)},
                {-2, g.x_index(1, false)},
                {-2, g.x_index(1, true)}};
  for (auto _ : state) {
    State v = f->straighten(word);
    benchmark::DoNotOptimize(v);
  }
}

/* one uncached conformal mode on a deep monomial */
void mode_product_cold(benchmark::State& state) {
  auto f = make_fock("A1", 2);
  State omega = omega_affine(*f);
  State v = f->straighten({{-2, f->algebra().t_index(0)},
                           {-1, f->algebra().t_index(0)},
                           {-1, f->algebra().x_index(0, false)}});
  for (auto _ : state) {
    VertexEngine eng(f);
    State out = eng.mode_product(omega, 1, v);
    benchmark::DoNotOptimize(out);
  }
}

/* joint Cartan kernel through weight 6: equation assembly plus RREF */
void commutant_kernel(benchmark::State& state) {
  auto f = make_fock("A1", 2);
  for (auto _ : state) {
    auto table = std::make_shared<BasisTable>(f);
    Subspace hw = highest_weight_space(table, 6, Coords{0});
    benchmark::DoNotOptimize(hw.weight_dim(6));
  }
}

/* module ideal closure under single current modes */
void ideal_fixpoint(benchmark::State& state) {
  auto f = make_fock("A1", 2);
  VertexEngine eng(f);
  for (auto _ : state) {
    auto table = std::make_shared<BasisTable>(f);
    Subspace ideal = generated_ideal(eng, table, {theta_singular(*f)}, 4,
                                     IdealStrategy::AffineFixpoint);
    benchmark::DoNotOptimize(ideal.weight_dim(4));
  }
}

/* subalgebra closure from the coset vectors */
void subalgebra_closure(benchmark::State& state) {
  auto f = make_fock("A1", 2);
  VertexEngine eng(f);
  std::vector<State> gens{omega_sl2(*f, 0), w3_sl2(*f, 0)};
  for (auto _ : state) {
    auto table = std::make_shared<BasisTable>(f);
    Subspace sub = generated_subalgebra(eng, table, gens, 4);
    benchmark::DoNotOptimize(sub.weight_dim(4));
  }
}

}  // namespace

BENCHMARK(straighten_reversed)->Unit(benchmark::kMicrosecond);
BENCHMARK(mode_product_cold)->Unit(benchmark::kMicrosecond);
BENCHMARK(commutant_kernel)->Unit(benchmark::kMillisecond);
BENCHMARK(ideal_fixpoint)->Unit(benchmark::kMillisecond);
BENCHMARK(subalgebra_closure)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
