#pragma once

// Report serialization and run configuration parsing for the command-line tools.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "nclorentz/suites.hpp"

namespace nclorentz::report {

inline constexpr const char* kVersion = "1";

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!trim(item).empty()) out.push_back(trim(item));
  return out;
}

inline double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used == v.size()) return d;
  } catch (const std::exception&) {
  }
  throw ConfigError("bad value for " + key + ": " + v);
}

inline long parse_long(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const long d = std::stol(v, &used);
    if (used == v.size()) return d;
  } catch (const std::exception&) {
  }
  throw ConfigError("bad value for " + key + ": " + v);
}

inline PhsType parse_type(const std::string& v) {
  if (v == "I") return PhsType::I;
  if (v == "II") return PhsType::II;
  if (v == "III") return PhsType::III;
  throw ConfigError("type must be I, II or III, got " + v);
}

inline bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("bad value for " + key + ": " + v);
}

/// Applies one key = value setting. Unknown keys are errors.
inline void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "lambda") {
    cfg.lambdas.clear();
    for (const auto& v : split_list(value)) cfg.lambdas.push_back(parse_double(key, v));
    if (cfg.lambdas.empty()) throw ConfigError("lambda list is empty");
  } else if (key == "exact_lambda") {
    cfg.exact_lambdas.clear();
    for (const auto& v : split_list(value)) {
      try {
        cfg.exact_lambdas.emplace_back(v);
        cfg.exact_lambdas.back().canonicalize();
      } catch (const std::exception&) {
        throw ConfigError("bad rational for exact_lambda: " + v);
      }
    }
  } else if (key == "samples") {
    const long n = parse_long(key, value);
    if (n < 1) throw ConfigError("samples must be positive");
    cfg.samples = static_cast<int>(n);
  } else if (key == "seed") {
    const long n = parse_long(key, value);
    if (n < 0) throw ConfigError("seed must be non-negative");
    cfg.seed = static_cast<unsigned>(n);
  } else if (key == "tolerance") {
    cfg.tolerance = parse_double(key, value);
    if (!(cfg.tolerance > 0)) throw ConfigError("tolerance must be positive");
  } else if (key == "z") {
    cfg.z = parse_double(key, value);
  } else if (key == "zp") {
    cfg.zp = parse_double(key, value);
  } else if (key == "type") {
    if (value == "all")
      cfg.type.reset();
    else
      cfg.type = parse_type(value);
  } else if (key == "timing") {
    cfg.timing = parse_bool(key, value);
  } else {
    throw ConfigError("unknown config key " + key);
  }
}

/// Line-oriented key = value file; '#' starts a comment.
inline std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(n) + ": expected key = value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

inline std::string config_json(const RunConfig& cfg, const std::string& what) {
  std::string lam, ex;
  for (double l : cfg.lambdas) lam += (lam.empty() ? "" : ", ") + fmt17(l);
  for (const auto& l : cfg.exact_lambdas) ex += (ex.empty() ? "" : ", ") + quote(l.get_str());
  std::string s = "{\n";
  s += "    \"run\": " + quote(what) + ",\n";
  s += "    \"lambda\": [" + lam + "],\n";
  s += "    \"exact_lambda\": [" + ex + "],\n";
  s += "    \"samples\": " + std::to_string(cfg.samples) + ",\n";
  s += "    \"seed\": " + std::to_string(cfg.seed) + ",\n";
  s += "    \"tolerance\": " + fmt17(cfg.tolerance) + ",\n";
  s += "    \"z\": " + fmt17(cfg.z) + ",\n";
  s += "    \"zp\": " + fmt17(cfg.zp) + ",\n";
  s += "    \"type\": " + quote(cfg.type ? to_string(*cfg.type) : "all") + ",\n";
  s += "    \"timing\": " + std::string(cfg.timing ? "true" : "false") + "\n  }";
  return s;
}

/// Hand-assembled so that every float carries exactly 17 significant digits.
inline std::string to_json(const std::vector<CheckRecord>& records, const RunConfig& cfg, const std::string& what) {
  std::string s = "{\n  \"version\": " + quote(kVersion) + ",\n  \"config\": " + config_json(cfg, what) +
                  ",\n  \"checks\": [";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    s += i ? ",\n    " : "\n    ";
    s += "{\"id\": " + quote(r.id) + ", \"anchor\": " + quote(r.anchor) + ", \"status\": " + quote(to_string(r.status)) +
         ", \"residual\": " + fmt17(r.residual) + ", \"seconds\": " + fmt17(r.seconds);
    if (!r.value.empty()) s += ", \"value\": " + quote(r.value);
    s += "}";
  }
  s += records.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return s;
}

inline std::string to_text(const std::vector<CheckRecord>& records, bool timing) {
  std::string s;
  std::size_t failed = 0;
  for (const auto& r : records) {
    s += r.id + " = " + (r.value.empty() ? fmt17(r.residual) : r.value) + " " + to_string(r.status);
    if (!r.value.empty() && r.residual != 0.0) s += " residual " + fmt17(r.residual);
    if (timing) s += " " + fmt17(r.seconds) + "s";
    s += "\n";
    failed += r.status != Status::pass;
  }
  s += std::to_string(records.size()) + " checks, " + std::to_string(failed) + " not passing\n";
  return s;
}

inline bool all_pass(const std::vector<CheckRecord>& records) {
  for (const auto& r : records)
    if (r.status != Status::pass) return false;
  return true;
}

/// Relative output paths are placed under NCL_REPORT_DIR when it is set.
inline std::filesystem::path resolve_output(const std::string& out, const std::string& fallback_name) {
  std::filesystem::path p = out.empty() ? std::filesystem::path(fallback_name) : std::filesystem::path(out);
  if (p.is_relative())
    if (const char* dir = std::getenv("NCL_REPORT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
  return p;
}

inline void write_file(const std::filesystem::path& p, const std::string& content) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + p.string());
  f << content;
}

}  // namespace nclorentz::report
