#include "voa/fock.hpp"

#include <map>

#include "doctest.h"
#include "support/properties.hpp"

using namespace voa;

namespace {

// A1 basis layout: 0 = x[-a], 1 = t[1], 2 = x[a]
struct A1 {
  std::shared_ptr<const LieData> g = LieData::build("A1");
  FockSpace fock{g, 2};
  int xm = g->x_index(0, true);
  int t = g->t_index(0);
  int xp = g->x_index(0, false);
};

std::vector<Integer> colored_partitions(int colors, long wmax) {
  std::vector<Integer> ser(wmax + 1, 0);
  ser[0] = 1;
  for (long n = 1; n <= wmax; ++n)
    for (int c = 0; c < colors; ++c)
      for (long w = n; w <= wmax; ++w) ser[w] += ser[w - n];
  return ser;
}

std::map<Coords, std::vector<long>> charge_profile(const FockSpace& f, long wmax) {
  std::map<Coords, std::vector<long>> out;
  for (long w = 0; w <= wmax; ++w)
    for (const auto& m : f.monomials(w)) {
      auto& row = out[mono_charge(f.algebra(), m)];
      row.resize(wmax + 1, 0);
      ++row[w];
    }
  for (auto& [c, row] : out) row.resize(wmax + 1, 0);
  return out;
}

}  // namespace

TEST_CASE("swapping equal depth root modes emits the bracket term") {
  A1 s;
  State got = s.fock.straighten({{-1, s.xp}, {-1, s.xm}});
  State want = State::single({{-1, s.xm}, {-1, s.xp}});
  want += State::single({{-2, s.t}});
  CHECK(got == want);
  CHECK(s.fock.format(got) == "t[1](-2) |0> + x[-a](-1) x[a](-1) |0>");
}

TEST_CASE("annihilator across a creator leaves the central term") {
  A1 s;
  // x_a(1) x_{-a}(-1) |0> = <x_a, x_{-a}> k |0> at level 2
  CHECK(s.fock.straighten({{1, s.xp}, {-1, s.xm}}) ==
        State::single({}, 2));
  // t(1) t(-1) |0> = <t, t> k |0> = 4 |0>
  CHECK(s.fock.straighten({{1, s.t}, {-1, s.t}}) == State::single({}, 4));
  // x_a(0) x_{-a}(-1) |0> = h(-1) |0>
  CHECK(s.fock.straighten({{0, s.xp}, {-1, s.xm}}) ==
        State::single({{-1, s.t}}));
  CHECK(s.fock.straighten({{0, s.xm}, {-1, s.xp}}) ==
        State::single({{-1, s.t}}, -1));
}

TEST_CASE("non-negative modes kill the vacuum") {
  A1 s;
  for (int b : {s.xm, s.t, s.xp})
    for (int m : {0, 1, 3}) {
      CHECK(s.fock.straighten({{m, b}}).is_zero());
      CHECK(s.fock.apply_mode(b, m, State::vacuum()).is_zero());
    }
}

TEST_CASE("straightening fixes canonical words and respects linearity") {
  A1 s;
  Monomial m{{-2, s.xm}, {-1, s.t}, {-1, s.xp}};
  REQUIRE(is_canonical(m));
  CHECK(s.fock.straighten(m) == State::single(m));
  CHECK(s.fock.straighten(m, Rational(-7, 3)) == State::single(m, {-7, 3}));
  CHECK(s.fock.straighten(m, 0).is_zero());
}

TEST_CASE("weight and charge bookkeeping") {
  A1 s;
  CHECK(mono_weight({}) == 0);
  Monomial m{{-2, s.xp}, {-1, s.xp}};
  CHECK(mono_weight(m) == 3);
  CHECK(mono_charge(*s.g, m) == Coords{2});
  CHECK(mono_charge(*s.g, {{-1, s.t}}) == Coords{0});
  CHECK(!is_canonical(Monomial{{-1, s.xp}, {-2, s.xm}}));
  CHECK(!is_canonical(Monomial{{-1, s.xp}, {-1, s.xm}}));
  CHECK(!is_canonical(Monomial{{0, s.xm}}));
}

TEST_CASE("level must be positive") {
  auto g = LieData::build("A1");
  CHECK_THROWS_AS(FockSpace(g, 0), ConfigError);
  CHECK_THROWS_AS(FockSpace(g, -2), ConfigError);
}

TEST_CASE("graded dimensions per charge match the colored partition counts") {
  // charge zero columns frozen in tests/golden/characters_expected.json
  auto a1 = LieData::build("A1");
  FockSpace f1(a1, 1);
  auto prof1 = charge_profile(f1, 6);
  CHECK(prof1[Coords{0}] == std::vector<long>{1, 1, 3, 6, 13, 24, 47});

  auto a2 = LieData::build("A2");
  FockSpace f2(a2, 1);
  auto prof2 = charge_profile(f2, 4);
  CHECK(prof2[Coords{0, 0}] == std::vector<long>{1, 2, 8, 24, 72});

  auto c2 = LieData::build("C2");
  FockSpace fc(c2, 1);
  auto profc = charge_profile(fc, 4);
  CHECK(profc[Coords{0, 0}] == std::vector<long>{1, 2, 9, 30, 102});

  auto g2 = LieData::build("G2");
  FockSpace fg(g2, 1);
  auto profg = charge_profile(fg, 3);
  CHECK(profg[Coords{0, 0}] == std::vector<long>{1, 2, 11, 44});
}

TEST_CASE("total monomial counts are colored partition numbers") {
  for (const char* name : {"A1", "A2", "C2"}) {
    auto g = LieData::build(name);
    FockSpace f(g, 1);
    auto expect = colored_partitions(g->dim(), 5);
    for (long w = 0; w <= 5; ++w) {
      CAPTURE(name);
      CAPTURE(w);
      CHECK(Integer(static_cast<long>(f.monomials(w).size())) == expect[w]);
      for (const auto& m : f.monomials(w)) {
        CHECK(is_canonical(m));
        CHECK(mono_weight(m) == w);
      }
    }
  }
}

TEST_CASE("vacuum coefficient extraction and formatting") {
  A1 s;
  State v = State::single({}, {3, 2});
  v += State::single({{-1, s.t}}, -1);
  CHECK(v.vacuum_coefficient() == Rational(3, 2));
  CHECK(State::vacuum().vacuum_coefficient() == 1);
  CHECK(State().vacuum_coefficient() == 0);
  CHECK(s.fock.format(v) == "3/2 |0> - t[1](-1) |0>");
  CHECK(s.fock.format(State()) == "0");
  State neg = State::single({{-1, s.xp}}, -1);
  CHECK(s.fock.format(neg) == "-x[a](-1) |0>");
}

TEST_CASE("module bracket property suite") {
  auto res = props::bracket_on_module(250, 20260815);
  INFO(res.detail);
  CHECK(res.cases >= 250);
  CHECK(res.failures == 0);
}

TEST_CASE("grading additivity property suite") {
  auto res = props::grading_additivity(250, 20260816);
  INFO(res.detail);
  CHECK(res.cases >= 250);
  CHECK(res.failures == 0);
}

TEST_CASE("straightening confluence property suite") {
  auto res = props::straightening_confluence(220, 20260817);
  INFO(res.detail);
  CHECK(res.cases >= 220);
  CHECK(res.failures == 0);
}
