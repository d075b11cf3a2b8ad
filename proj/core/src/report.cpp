#include "voa/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "voa/util.hpp"

namespace voa {

std::string report_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.name;
  nlohmann::ordered_json cfg;
  cfg["algebra"] = r.algebra;
  cfg["level"] = r.level;
  cfg["max_weight"] = r.max_weight;
  for (const auto& [k, v] : r.options) cfg[k] = v;
  j["config"] = cfg;
  j["pass"] = r.pass;
  auto consts = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.constants) consts[k] = v;
  j["constants"] = consts;
  auto tabs = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.tables) tabs[k] = v;
  j["tables"] = tabs;
  j["witness"] = r.witness;
  j["meta"] = {{"wall_time_s", r.wall_time_s}};
  return j.dump(2) + "\n";
}

std::string report_csv(const CheckReport& r) {
  std::ostringstream out;
  out << "# check=" << r.name << " algebra=" << r.algebra
      << " level=" << r.level << " max_weight=" << r.max_weight;
  for (const auto& [k, v] : r.options) out << " " << k << "=" << v;
  out << "\n# pass=" << (r.pass ? "true" : "false") << "\n";
  for (const auto& [k, v] : r.constants) out << "# " << k << "=" << v << "\n";
  if (!r.witness.empty()) out << "# witness=" << r.witness << "\n";
  if (!r.tables.empty()) {
    out << "weight";
    for (const auto& [k, col] : r.tables) out << "," << k;
    out << "\n";
    std::size_t rows = 0;
    for (const auto& [k, col] : r.tables) rows = std::max(rows, col.size());
    for (std::size_t w = 0; w < rows; ++w) {
      out << w;
      for (const auto& [k, col] : r.tables) {
        out << ",";
        if (w < col.size()) out << col[w];
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string write_report(const CheckReport& r, const std::string& dir,
                         const std::string& format) {
  if (format != "json" && format != "csv")
    throw ConfigError("unknown output format: " + format);
  std::filesystem::create_directories(dir);
  auto path = std::filesystem::path(dir) / (r.name + "." + format);
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << (format == "json" ? report_json(r) : report_csv(r));
  return path.string();
}

}  // namespace voa
