#include "voa/checks.hpp"

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "voa/util.hpp"

using namespace voa;

namespace {

std::string constant(const CheckReport& r, const std::string& key) {
  for (const auto& [k, v] : r.constants)
    if (k == key) return v;
  return "<missing " + key + ">";
}

const std::vector<long>& table(const CheckReport& r, const std::string& key) {
  for (const auto& [k, v] : r.tables)
    if (k == key) return v;
  static const std::vector<long> empty;
  return empty;
}

RunConfig cfg(const char* algebra, long level, long max_weight) {
  RunConfig c;
  c.algebra = algebra;
  c.level = level;
  c.max_weight = max_weight;
  return c;
}

}  // namespace

TEST_CASE("virasoro command reports the exact central charges") {
  auto rep = check_virasoro(cfg("A1", 2, 2));
  CHECK(rep.pass);
  CHECK(constant(rep, "central_charge_sugawara") == "3/2");
  CHECK(constant(rep, "central_charge_heisenberg") == "1");
  CHECK(constant(rep, "central_charge_coset") == "1/2");

  auto rep3 = check_virasoro(cfg("A1", 3, 2));
  CHECK(rep3.pass);
  CHECK(constant(rep3, "central_charge_coset") == "4/5");

  CHECK_THROWS_AS(check_virasoro(cfg("A1", 2, 1)), ConfigError);
}

TEST_CASE("heisenberg central charge equals the rank") {
  auto rep = check_virasoro(cfg("A2", 1, 2));
  CHECK(rep.pass);
  CHECK(constant(rep, "central_charge_heisenberg") == "2");
  CHECK(constant(rep, "central_charge_sugawara") == "2");
}

TEST_CASE("commutant command confirms Cartan annihilation") {
  auto rep = check_commutant(cfg("A1", 2, 4));
  CHECK(rep.pass);
  CHECK(rep.witness.empty());
  auto rep2 = check_commutant(cfg("C2", 1, 4));
  CHECK(rep2.pass);
  CHECK(constant(rep2, "vectors_checked") == "9");
}

TEST_CASE("generator command covers the charge zero space") {
  auto c = cfg("A1", 2, 4);
  c.which = "charge-zero";
  auto rep = check_generators(c);
  CHECK(rep.pass);
  CHECK(table(rep, "generated") == std::vector<long>{1, 1, 3, 6, 13});
  CHECK(table(rep, "charge_zero") == std::vector<long>{1, 1, 3, 6, 13});
}

TEST_CASE("generator command covers the commutant") {
  auto c = cfg("A1", 2, 4);
  c.which = "commutant";
  auto rep = check_generators(c);
  CHECK(rep.pass);
  CHECK(table(rep, "generated") == std::vector<long>{1, 0, 1, 2, 4});
  CHECK(constant(rep, "cartan_adjoined_fills_charge_zero") == "yes");
  CHECK(table(rep, "widened") == std::vector<long>{1, 1, 3, 6, 13});
}

TEST_CASE("generator command fills the quotient") {
  auto c = cfg("A1", 1, 4);
  c.which = "quotient";
  auto rep = check_generators(c);
  CHECK(rep.pass);
  CHECK(table(rep, "commutant") == std::vector<long>{1, 0, 1, 2, 4});

  c.which = "nonsense";
  CHECK_THROWS_AS(check_generators(c), ConfigError);
}

TEST_CASE("ideal command cross checks both constructions") {
  auto rep = check_ideal(cfg("A1", 1, 4));
  CHECK(rep.pass);
  CHECK(constant(rep, "two_sided_agreement") == "yes");
  CHECK(constant(rep, "member_a") == "yes");
  CHECK(constant(rep, "memberships_skipped") == "0");
  CHECK(table(rep, "commutant_ideal") == std::vector<long>{0, 0, 1, 2, 4});

  CHECK_THROWS_AS(check_ideal(cfg("A1", 1, 1)), ConfigError);
}

TEST_CASE("weyl command verifies the lifted reflection") {
  auto c = cfg("A1", 1, 3);
  c.word = {1};
  auto rep = check_weyl(c);
  CHECK(rep.pass);
  CHECK(constant(rep, "homomorphism") == "yes");
  CHECK(constant(rep, "singular_image_in_ideal") == "yes");

  auto c2 = cfg("A2", 1, 3);
  c2.word = {2, 1};
  CHECK(check_weyl(c2).pass);
}

TEST_CASE("dimension tables factor through the Heisenberg piece") {
  auto rep = graded_dims(cfg("A1", 2, 4));
  CHECK(rep.pass);
  CHECK(table(rep, "vacuum_charge_zero") == std::vector<long>{1, 1, 3, 6, 13});
  CHECK(table(rep, "commutant") == std::vector<long>{1, 0, 1, 2, 4});
  CHECK(table(rep, "parafermion_quotient") ==
        std::vector<long>{1, 0, 1, 1, 2});
  CHECK(constant(rep, "heisenberg_factorization") == "yes");
}

TEST_CASE("reports serialize deterministically modulo the meta block") {
  auto a = graded_dims(cfg("A1", 1, 3));
  auto b = graded_dims(cfg("A1", 1, 3));
  a.wall_time_s = 0;
  b.wall_time_s = 0;
  CHECK(report_json(a) == report_json(b));
  CHECK(report_json(a).find("\"check\": \"graded-dims\"") !=
        std::string::npos);
  std::string csv = report_csv(a);
  CHECK(csv.find("weight,vacuum_charge_zero,commutant") != std::string::npos);
  CHECK(csv.find("# pass=true") != std::string::npos);
}

TEST_CASE("report files land in the requested directory") {
  auto rep = check_virasoro(cfg("A1", 1, 2));
  auto dir = std::filesystem::temp_directory_path() / "voa_report_test";
  std::filesystem::remove_all(dir);
  auto path = write_report(rep, dir.string(), "json");
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string body((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(body.find("\"pass\": true") != std::string::npos);
  CHECK_THROWS_AS(write_report(rep, dir.string(), "yaml"), ConfigError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("truncation regression flag recomputes with extra slack") {
  auto c = cfg("A1", 1, 3);
  c.truncation_regression = true;
  auto rep = graded_dims(c);
  CHECK(rep.pass);
  CHECK(constant(rep, "truncation_stable") == "yes");
}
