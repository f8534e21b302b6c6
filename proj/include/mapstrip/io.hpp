#pragma once

// JSON and CSV serialization for the value types, plus the key=value
// config-file reader used by the experiment runner.

#include <map>
#include <string>
#include <vector>

#include "mapstrip/almost_period.hpp"
#include "mapstrip/core.hpp"
#include "mapstrip/divisor.hpp"
#include "mapstrip/zeros.hpp"

namespace mapstrip {

// {"numerator": [[lambda, re, im], ...], "denominator": [...],
//  "strip": [a, b]} with null for infinite strip bounds.
std::string function_to_json(const MeromorphicAP& f);
MeromorphicAP function_from_json(const std::string& text);

std::string scan_report_to_json(const ScanReport& report);
/// Two columns: tau, sup_diff (full scan profile).
std::string scan_report_to_csv(const ScanReport& report);

// {"points": [[re, im, k], ...]}
std::string root_list_to_json(const RootList& roots);
std::string root_list_to_csv(const RootList& roots);

// {"points": [[re, im, k], ...], "window": [x0, x1, y0, y1]}
std::string divisor_to_json(const Divisor& d);
Divisor divisor_from_json(const std::string& text);
std::string divisor_to_csv(const Divisor& d);

std::string track_to_json(const Track& track);
std::string track_to_csv(const Track& track);

std::string clusters_to_json(const std::vector<TranslateCluster>& clusters);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Plain "key = value" file; '#' starts a comment, later keys win.
class KeyValueConfig {
 public:
  static KeyValueConfig parse_file(const std::string& path);
  static KeyValueConfig parse_string(const std::string& text);

  bool has(const std::string& key) const;
  const std::string& get(const std::string& key) const;  // throws ConfigError
  std::string get_or(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double_or(const std::string& key, double fallback) const;
  long get_long_or(const std::string& key, long fallback) const;
  std::vector<double> get_doubles(const std::string& key) const;  // comma-split
  std::vector<std::string> get_strings(const std::string& key) const;

  const std::map<std::string, std::string>& entries() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace mapstrip
