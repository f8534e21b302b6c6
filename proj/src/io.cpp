#include "mapstrip/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace mapstrip {

using nlohmann::json;

namespace {

json strip_to_json(const Strip& s) {
  json a = s.lower > -kInfinity ? json(s.lower) : json(nullptr);
  json b = s.upper < kInfinity ? json(s.upper) : json(nullptr);
  return json::array({a, b});
}

Strip strip_from_json(const json& j) {
  const double lo = j.at(0).is_null() ? -kInfinity : j.at(0).get<double>();
  const double hi = j.at(1).is_null() ? kInfinity : j.at(1).get<double>();
  return {lo, hi};
}

json sum_to_json(const ExponentialSum& g) {
  json arr = json::array();
  for (const Term& t : g.terms())
    arr.push_back({t.frequency, t.coefficient.real(), t.coefficient.imag()});
  return arr;
}

ExponentialSum sum_from_json(const json& arr) {
  std::vector<Term> terms;
  for (const json& row : arr)
    terms.push_back({row.at(0).get<double>(),
                     {row.at(1).get<double>(), row.at(2).get<double>()}});
  return ExponentialSum(std::move(terms));
}

std::ostringstream csv_stream() {
  std::ostringstream os;
  os << std::setprecision(17);
  return os;
}

}  // namespace

std::string function_to_json(const MeromorphicAP& f) {
  json j;
  j["numerator"] = sum_to_json(f.numerator());
  j["denominator"] = sum_to_json(f.denominator());
  j["strip"] = strip_to_json(f.domain());
  return j.dump(2);
}

MeromorphicAP function_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    return {sum_from_json(j.at("numerator")), sum_from_json(j.at("denominator")),
            strip_from_json(j.at("strip"))};
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad function document: ") + e.what());
  }
}

std::string scan_report_to_json(const ScanReport& report) {
  json j;
  j["epsilon"] = report.epsilon;
  j["strip"] = report.strip ? strip_to_json(*report.strip) : json(nullptr);
  j["window"] = {report.window.lo, report.window.hi};
  j["step"] = report.step;
  j["found"] = report.found;
  j["max_gap"] = report.max_gap;
  j["skipped_points"] = report.skipped_points;
  return j.dump(2);
}

std::string scan_report_to_csv(const ScanReport& report) {
  auto os = csv_stream();
  os << "tau,sup_diff\n";
  for (std::size_t i = 0; i < report.taus.size(); ++i)
    os << report.taus[i] << "," << report.sup_values[i] << "\n";
  return os.str();
}

std::string root_list_to_json(const RootList& roots) {
  json pts = json::array();
  for (const Root& r : roots.roots)
    pts.push_back({r.location.real(), r.location.imag(), r.multiplicity});
  return json{{"points", pts}}.dump(2);
}

std::string root_list_to_csv(const RootList& roots) {
  auto os = csv_stream();
  os << "re,im,multiplicity\n";
  for (const Root& r : roots.roots)
    os << r.location.real() << "," << r.location.imag() << "," << r.multiplicity
       << "\n";
  return os.str();
}

std::string divisor_to_json(const Divisor& d) {
  json pts = json::array();
  for (const DivisorEntry& e : d.entries())
    pts.push_back({e.point.real(), e.point.imag(), e.multiplicity});
  const Rectangle& w = d.window();
  return json{{"points", pts}, {"window", {w.x0, w.x1, w.y0, w.y1}}}.dump(2);
}

Divisor divisor_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    const json& w = j.at("window");
    Rectangle window(w.at(0).get<double>(), w.at(1).get<double>(),
                     w.at(2).get<double>(), w.at(3).get<double>());
    std::vector<DivisorEntry> entries;
    for (const json& row : j.at("points"))
      entries.push_back({{row.at(0).get<double>(), row.at(1).get<double>()},
                         row.at(2).get<int>()});
    return {std::move(entries), window};
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad divisor document: ") + e.what());
  }
}

std::string divisor_to_csv(const Divisor& d) {
  auto os = csv_stream();
  os << "re,im,multiplicity\n";
  for (const DivisorEntry& e : d.entries())
    os << e.point.real() << "," << e.point.imag() << "," << e.multiplicity << "\n";
  return os.str();
}

std::string track_to_json(const Track& track) {
  json j;
  j["t0"] = track.t0;
  j["step"] = track.step;
  j["values"] = track.values;
  return j.dump(2);
}

std::string track_to_csv(const Track& track) {
  auto os = csv_stream();
  os << "t,value\n";
  for (std::size_t i = 0; i < track.values.size(); ++i)
    os << track.t_at(i) << "," << track.values[i] << "\n";
  return os.str();
}

std::string clusters_to_json(const std::vector<TranslateCluster>& clusters) {
  json arr = json::array();
  for (const TranslateCluster& c : clusters)
    arr.push_back({{"representative", c.representative},
                   {"members", c.members},
                   {"diameter", c.diameter}});
  return arr.dump(2);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out) throw IoError("short write to " + path);
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
  return parse_string(read_text_file(path));
}

KeyValueConfig KeyValueConfig::parse_string(const std::string& text) {
  KeyValueConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    cfg.values_[key] = value;
  }
  return cfg;
}

bool KeyValueConfig::has(const std::string& key) const {
  return values_.count(key) != 0;
}

const std::string& KeyValueConfig::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing config key '" + key + "'");
  return it->second;
}

std::string KeyValueConfig::get_or(const std::string& key,
                                   const std::string& fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double KeyValueConfig::get_double(const std::string& key) const {
  const std::string& v = get(key);
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (trim(v.substr(used)).empty()) return x;
  } catch (const std::exception&) {
  }
  throw ConfigError("config key '" + key + "' is not a number: " + v);
}

double KeyValueConfig::get_double_or(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

long KeyValueConfig::get_long_or(const std::string& key, long fallback) const {
  if (!has(key)) return fallback;
  const double x = get_double(key);
  const long n = std::lround(x);
  if (x != static_cast<double>(n))
    throw ConfigError("config key '" + key + "' is not an integer");
  return n;
}

std::vector<std::string> KeyValueConfig::get_strings(const std::string& key) const {
  std::vector<std::string> out;
  std::istringstream in(get(key));
  std::string item;
  while (std::getline(in, item, ',')) {
    const std::string t = trim(item);
    if (!t.empty()) out.push_back(t);
  }
  if (out.empty()) throw ConfigError("config key '" + key + "' is an empty list");
  return out;
}

std::vector<double> KeyValueConfig::get_doubles(const std::string& key) const {
  std::vector<double> out;
  for (const std::string& s : get_strings(key)) {
    try {
      out.push_back(std::stod(s));
    } catch (const std::exception&) {
      throw ConfigError("config key '" + key + "' has a non-numeric item: " + s);
    }
  }
  return out;
}

}  // namespace mapstrip
