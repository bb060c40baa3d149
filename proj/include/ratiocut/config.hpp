// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>

namespace ratiocut {

// Plain key=value configuration ('#' starts a comment, blank lines ignored).
// Lookup order: explicit --config file, RATIOCUT_CONFIG, built-in defaults;
// command-line flags override entries individually.
class Config {
 public:
  static Config load_file(const std::string& path);
  static Config from_environment();  // empty when RATIOCUT_CONFIG is unset

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  void set(const std::string& key, const std::string& value) { values_[key] = value; }

  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace ratiocut
