#include "voa/graded.hpp"

#include "doctest.h"
#include "voa/named.hpp"

using namespace voa;

namespace {

struct Setup {
  std::shared_ptr<const LieData> g;
  std::shared_ptr<FockSpace> fock;
  std::shared_ptr<VertexEngine> eng;
  std::shared_ptr<BasisTable> table;

  Setup(const char* name, long level) {
    g = LieData::build(name);
    fock = std::make_shared<FockSpace>(g, level);
    eng = std::make_shared<VertexEngine>(fock);
    table = std::make_shared<BasisTable>(fock);
  }
};

}  // namespace

TEST_CASE("echelon insertion tracks rank") {
  EchelonBasis basis;
  CHECK(basis.insert({{0, 2}, {2, 1}}));
  CHECK(basis.dim() == 1);
  CHECK(basis.rows()[0].front().second == 2);  // coprime integer entries
  CHECK(!basis.insert({{0, 4}, {2, 2}}));      // dependent
  CHECK(basis.insert({{1, 1}}));
  CHECK(basis.insert({{2, 5}}));
  CHECK(basis.dim() == 3);
  CHECK(!basis.insert({{0, 1}, {1, 7}, {2, -3}}));
  CHECK(basis.contains({{0, -1}, {1, 2}}));
  CHECK(basis.reduce({{3, 1}}).size() == 1);
}

TEST_CASE("bucket positions and row round trips") {
  Setup s("A1", 2);
  Coords zero{0};
  BucketKey key{2, zero};
  const auto& monos = s.table->bucket(key);
  REQUIRE(monos.size() == 3);
  for (long i = 0; i < 3; ++i) CHECK(s.table->position(key, monos[i]) == i);
  State v = State::single(monos[0], {1, 2}) + State::single(monos[2], -3);
  SparseRow row = state_to_row(*s.table, key, v);
  CHECK(row_to_state(*s.table, key, row) == v);
  CHECK(state_bucket(*s.g, v) == key);
  State mixed = State::single(monos[0]) + State::vacuum();
  CHECK_THROWS_AS(state_bucket(*s.g, mixed), Error);
}

TEST_CASE("charge zero dimensions match the frozen columns") {
  Setup s("A1", 1);
  auto sub = charge_zero_space(s.table, 4);
  CHECK(weight_dims(sub, 4) == std::vector<long>{1, 1, 3, 6, 13});
  Setup s2("A2", 1);
  auto sub2 = charge_zero_space(s2.table, 3);
  CHECK(weight_dims(sub2, 3) == std::vector<long>{1, 2, 8, 24});
}

TEST_CASE("Heisenberg highest weight spaces match the quotient character") {
  Setup s("A1", 2);
  auto hw = highest_weight_space(s.table, 6, Coords{0});
  CHECK(weight_dims(hw, 6) == std::vector<long>{1, 0, 1, 2, 4, 6, 11});

  Setup s2("A2", 1);
  auto hw2 = highest_weight_space(s2.table, 4, Coords{0, 0});
  CHECK(weight_dims(hw2, 4) == std::vector<long>{1, 0, 3, 8, 21});

  Setup s3("C2", 1);
  auto hw3 = highest_weight_space(s3.table, 3, Coords{0, 0});
  CHECK(weight_dims(hw3, 3) == std::vector<long>{1, 0, 4, 12});

  // the kernel is independent of the level
  Setup s4("A1", 3);
  auto hw4 = highest_weight_space(s4.table, 4, Coords{0});
  CHECK(weight_dims(hw4, 4) == std::vector<long>{1, 0, 1, 2, 4});
}

TEST_CASE("highest weight spaces sit inside the charge zero space") {
  Setup s("A2", 2);
  auto hw = highest_weight_space(s.table, 3, Coords{0, 0});
  auto cz = charge_zero_space(s.table, 3);
  CHECK(contains_subspace(cz, hw, 3));
  CHECK(subspace_equal(intersect(cz, hw), hw, 3));
}

TEST_CASE("one free boson generates partition many states") {
  Setup s("A1", 2);
  std::vector<State> gens{State::single({{-1, s.g->t_index(0)}})};
  auto sub = generated_subalgebra(*s.eng, s.table, gens, 5);
  CHECK(weight_dims(sub, 5) == std::vector<long>{1, 1, 2, 3, 5, 7});
}

TEST_CASE("charge zero space is generated by the flag generators") {
  Setup s("A1", 2);
  std::vector<State> gens{State::single({{-1, s.g->t_index(0)}}),
                          s.fock->straighten({{-2, s.g->x_index(0, true)},
                                              {-1, s.g->x_index(0, false)}})};
  auto sub = generated_subalgebra(*s.eng, s.table, gens, 4);
  auto cz = charge_zero_space(s.table, 4);
  CHECK(subspace_equal(sub, cz, 4));
}

TEST_CASE("level one ideal flattens the commutant") {
  Setup s("A1", 1);
  auto ideal = generated_ideal(*s.eng, s.table, {theta_singular(*s.fock)}, 4,
                               IdealStrategy::AffineFixpoint);
  auto hw = highest_weight_space(s.table, 4, Coords{0});
  auto cut = intersect(ideal, hw);
  CHECK(weight_dims(cut, 4) == std::vector<long>{0, 0, 1, 2, 4});
  CHECK(quotient_dims(hw, cut, 4) == std::vector<long>{1, 0, 0, 0, 0});
}

TEST_CASE("level two ideal carves out the Ising vacuum dimensions") {
  Setup s("A1", 2);
  auto ideal = generated_ideal(*s.eng, s.table, {theta_singular(*s.fock)}, 4,
                               IdealStrategy::AffineFixpoint);
  auto hw = highest_weight_space(s.table, 4, Coords{0});
  auto cut = intersect(ideal, hw);
  CHECK(quotient_dims(hw, cut, 4) == std::vector<long>{1, 0, 1, 1, 2});
}

TEST_CASE("commutant ideal agrees with the intersected module ideal") {
  Setup s("A1", 1);
  auto hw = highest_weight_space(s.table, 4, Coords{0});
  auto inner = generated_ideal(*s.eng, s.table, {parafermion_singular(*s.fock)},
                               4, IdealStrategy::SpanFixpoint, &hw);
  auto ideal = generated_ideal(*s.eng, s.table, {theta_singular(*s.fock)}, 4,
                               IdealStrategy::AffineFixpoint);
  auto cut = intersect(ideal, hw);
  CHECK(subspace_equal(inner, cut, 4));
}

TEST_CASE("span fixpoint requires an ambient space") {
  Setup s("A1", 1);
  CHECK_THROWS_AS(generated_ideal(*s.eng, s.table,
                                  {parafermion_singular(*s.fock)}, 4,
                                  IdealStrategy::SpanFixpoint, nullptr),
                  ConfigError);
}

TEST_CASE("bucketwise intersection") {
  Setup s("A1", 1);
  Coords zero{0};
  BucketKey key{2, zero};
  const auto& monos = s.table->bucket(key);
  REQUIRE(monos.size() == 3);
  Subspace u(s.table), w1(s.table), w2(s.table);
  u.insert(State::single(monos[0]) + State::single(monos[1]));
  u.insert(State::single(monos[1]));
  w1.insert(State::single(monos[0]) + State::single(monos[2]));
  CHECK(weight_dims(intersect(u, w1), 2) == std::vector<long>{0, 0, 0});
  w2.insert(State::single(monos[0]) + State::single(monos[1]));
  w2.insert(State::single(monos[2]));
  auto both = intersect(u, w2);
  CHECK(both.dim(key) == 1);
  CHECK(both.contains(State::single(monos[0]) + State::single(monos[1])));
}

TEST_CASE("resource caps abort oversized buckets") {
  auto g = LieData::build("A2");
  auto fock = std::make_shared<FockSpace>(g, 1);
  BasisTable capped(fock, Limits(10, 0));
  CHECK_THROWS_AS(capped.bucket({3, Coords{0, 0}}), ResourceCapError);
}
