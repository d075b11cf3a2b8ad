#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "voa/checks.hpp"
#include "voa/util.hpp"

namespace {

struct CliState {
  voa::RunConfig cfg;
  std::string format = "json";
  std::string out_dir;
  std::string config_file;
};

std::string trimmed(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

long to_long(const std::string& val, const std::string& key) {
  try {
    std::size_t used = 0;
    long out = std::stol(val, &used);
    if (used == val.size()) return out;
  } catch (const std::exception&) {
  }
  throw voa::ConfigError("config key " + key + " needs an integer, got \"" +
                         val + "\"");
}

std::map<std::string, std::string> read_key_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw voa::ConfigError("cannot read config file " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trimmed(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw voa::ConfigError("config line " + std::to_string(lineno) +
                             " is not key = value");
    std::string key = trimmed(line.substr(0, eq));
    std::string val = trimmed(line.substr(eq + 1));
    if (val.size() >= 2 && (val.front() == '"' || val.front() == '\'') &&
        val.back() == val.front())
      val = val.substr(1, val.size() - 2);
    if (key.empty()) throw voa::ConfigError("config line " +
                                            std::to_string(lineno) +
                                            " has an empty key");
    kv[key] = val;
  }
  return kv;
}

/* command line values win over the file */
void apply_config_file(CLI::App* cmd, CliState& s) {
  auto fresh = [&](const std::string& name) {
    const CLI::Option* o = cmd->get_option_no_throw(name);
    return o != nullptr && o->count() == 0;
  };
  auto known = [&](const std::string& name) {
    return cmd->get_option_no_throw(name) != nullptr;
  };
  for (const auto& [key, val] : read_key_values(s.config_file)) {
    if (key == "algebra") {
      if (fresh("--algebra")) s.cfg.algebra = val;
    } else if (key == "level") {
      if (fresh("--level")) s.cfg.level = to_long(val, key);
    } else if (key == "max-weight") {
      if (fresh("--max-weight")) s.cfg.max_weight = to_long(val, key);
    } else if (key == "slack") {
      if (fresh("--slack")) s.cfg.slack = to_long(val, key);
    } else if (key == "bucket-cap") {
      if (fresh("--bucket-cap")) s.cfg.bucket_cap = to_long(val, key);
    } else if (key == "time-cap-s") {
      if (fresh("--time-cap-s")) s.cfg.time_cap_s =
          static_cast<double>(to_long(val, key));
    } else if (key == "truncation-regression") {
      if (fresh("--truncation-regression"))
        s.cfg.truncation_regression =
            val == "true" || val == "yes" || val == "1";
    } else if (key == "format") {
      if (val != "json" && val != "csv")
        throw voa::ConfigError("config format must be json or csv");
      if (fresh("--format")) s.format = val;
    } else if (key == "out") {
      if (fresh("--out")) s.out_dir = val;
    } else if (key == "which" && known("--which")) {
      if (fresh("--which")) s.cfg.which = val;
    } else if (key == "word" && known("--word")) {
      if (fresh("--word")) {
        s.cfg.word.clear();
        std::istringstream parts(val);
        std::string item;
        while (std::getline(parts, item, ','))
          s.cfg.word.push_back(static_cast<int>(to_long(trimmed(item), key)));
      }
    } else {
      throw voa::ConfigError("config key not understood here: " + key);
    }
  }
}

void add_common(CLI::App* cmd, CliState& s) {
  cmd->add_option("-a,--algebra", s.cfg.algebra,
                  "series and rank, e.g. A1, A2, C2, G2")
      ->capture_default_str();
  cmd->add_option("-k,--level", s.cfg.level, "module level, >= 1")
      ->capture_default_str();
  cmd->add_option("-N,--max-weight", s.cfg.max_weight,
                  "largest conformal weight to cover")
      ->capture_default_str();
  cmd->add_option("--slack", s.cfg.slack,
                  "extra truncation margin for mode products")
      ->capture_default_str();
  cmd->add_option("--bucket-cap", s.cfg.bucket_cap,
                  "per bucket dimension cap, 0 disables")
      ->capture_default_str();
  cmd->add_option("--time-cap-s", s.cfg.time_cap_s,
                  "wall clock cap in seconds, 0 disables")
      ->capture_default_str();
  cmd->add_flag("--truncation-regression", s.cfg.truncation_regression,
                "recompute with extra slack and require identical tables");
  cmd->add_option("--format", s.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", s.out_dir,
                  "directory for report files; stdout when absent");
  cmd->add_option("--config", s.config_file,
                  "key = value defaults, same keys as the long options");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact arithmetic for level k vacuum modules of affine algebras, "
      "their Heisenberg commutants, and the parafermion quotients"};
  app.require_subcommand(1);

  CliState s;
  voa::CheckReport (*run)(const voa::RunConfig&) = nullptr;

  auto* dims = app.add_subcommand(
      "graded-dims",
      "dimension tables: charge zero space, commutant, ideal, quotient");
  add_common(dims, s);
  dims->callback([&] { run = voa::graded_dims; });

  auto* vir = app.add_subcommand(
      "check-virasoro",
      "Virasoro relations and central charges of the conformal vectors");
  add_common(vir, s);
  vir->callback([&] { run = voa::check_virasoro; });

  auto* comm = app.add_subcommand(
      "check-commutant",
      "Cartan modes annihilate the coset vectors of every positive root");
  add_common(comm, s);
  comm->callback([&] { run = voa::check_commutant; });

  auto* gens = app.add_subcommand(
      "check-generators", "closure of a generating set against its target");
  add_common(gens, s);
  gens->add_option("--which", s.cfg.which,
                   "target space: charge-zero, commutant, or quotient")
      ->check(CLI::IsMember({"charge-zero", "commutant", "quotient"}))
      ->capture_default_str();
  gens->callback([&] { run = voa::check_generators; });

  auto* ideal = app.add_subcommand(
      "check-ideal",
      "maximal ideal of the commutant: two constructions and memberships");
  add_common(ideal, s);
  ideal->callback([&] { run = voa::check_ideal; });

  auto* weyl = app.add_subcommand(
      "check-weyl", "lifted Weyl word: homomorphism and ideal stability");
  add_common(weyl, s);
  weyl->add_option("--word", s.cfg.word, "simple reflection indices, 1-based")
      ->delimiter(',');
  weyl->callback([&] { run = voa::check_weyl; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!s.config_file.empty())
      apply_config_file(app.get_subcommands().front(), s);
    voa::CheckReport rep = run(s.cfg);
    if (s.out_dir.empty()) {
      std::cout << (s.format == "json" ? voa::report_json(rep)
                                       : voa::report_csv(rep));
    } else {
      std::cerr << "wrote " << voa::write_report(rep, s.out_dir, s.format)
                << "\n";
    }
    std::cerr << (rep.pass ? "[PASS] " : "[FAIL] ") << rep.name << " "
              << s.cfg.algebra << " level " << s.cfg.level << " max weight "
              << s.cfg.max_weight << "\n";
    return rep.pass ? 0 : 1;
  } catch (const voa::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const voa::ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const voa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
