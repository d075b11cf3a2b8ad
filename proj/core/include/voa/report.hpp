#ifndef VOA_REPORT_HPP
#define VOA_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace voa {

/* outcome of one verification command: config echo, verdict, exact
 * constants, per weight dimension tables, witness on failure */
struct CheckReport {
  std::string name;
  std::string algebra;
  long level = 0;
  long max_weight = 0;
  std::vector<std::pair<std::string, std::string>> options;
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> constants;
  std::vector<std::pair<std::string, std::vector<long>>> tables;
  std::string witness;
  double wall_time_s = 0.0;
};

/* stable key order; volatile fields live under "meta" so two runs of
 * the same config differ only there */
std::string report_json(const CheckReport& r);

/* dimension tables as weight rows; constants appended as comments */
std::string report_csv(const CheckReport& r);

/* writes <dir>/<name>.<format>, creating dir; returns the path */
std::string write_report(const CheckReport& r, const std::string& dir,
                         const std::string& format);

}  // namespace voa

#endif
