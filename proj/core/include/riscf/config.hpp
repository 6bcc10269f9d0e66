#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "riscf/scenario.hpp"

namespace riscf {

/// Flat view of an INI-style config: `[section]` headers and `key = value`
/// lines, comments with '#' or ';'. Keys are stored as "section.key".
class ConfigMap {
 public:
  bool has(const std::string& key) const;
  void set(const std::string& key, const std::string& value, int line = 0);

  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  long get_long(const std::string& key, long fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  std::vector<double> get_doubles(const std::string& key) const;        // whitespace-separated
  std::vector<Vec2> get_points(const std::string& key) const;          // "x y; x y; ..."
  int line_of(const std::string& key) const;

  const std::map<std::string, std::string>& entries() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
  std::map<std::string, int> lines_;
};

ConfigMap parse_config_text(const std::string& text, const std::string& source_name);
ConfigMap parse_config_file(const std::string& path);

/// Builds the fully resolved scenario: generated AP layouts and location
/// grids are expanded into explicit positions, dB quantities converted to
/// linear, per-location scalars broadcast. Throws ConfigError on bad input.
Scenario scenario_from_config(const ConfigMap& config);

/// Built-in profiles: "desk_k2" (M=64, N=16, K=2), "desk_k25" (5x5 grid),
/// "paper" (M=1600, N=128, K=400; long-running).
Scenario builtin_profile(const std::string& name);
std::vector<std::string> builtin_profile_names();

/// Canonical sorted key=value dump of a resolved scenario; identical dumps
/// mean identical experiments.
std::string canonical_dump(const Scenario& scenario);

/// FNV-1a hash of the canonical dump, embedded in every output file.
std::uint64_t config_hash(const Scenario& scenario);

}  // namespace riscf
