// Copyright 2026 The mtdgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace mtdgame {

enum class AccessComplexity { Easy, Medium, High };

std::string_view to_string(AccessComplexity ac);
// Accepts "easy" | "medium" | "high"; throws ParseError otherwise.
AccessComplexity parse_access_complexity(std::string_view s);

struct VulnRecord {
  std::string key;
  std::string cve;
  std::string vm;
  std::string service;
  double cia = 0.0;  // scalar impact in [0, 10]
  AccessComplexity ac = AccessComplexity::Medium;
};

/// Exploit success probability per access-complexity class.
/// Valid maps satisfy 0 < high <= medium <= easy <= 1.
struct AcProbabilityMap {
  double easy = 0.9;
  double medium = 0.66;
  double high = 0.35;

  double at(AccessComplexity ac) const;
  // Throws ConfigError when the map is out of range or not monotone.
  void validate() const;
};

inline double ac_to_probability(AccessComplexity ac,
                                const AcProbabilityMap& map) {
  return map.at(ac);
}

/// Vulnerability records keyed by catalog key. Record order is the file
/// order; lookups go through an index.
class Catalog {
 public:
  Catalog() = default;
  // Throws RangeError on cia outside [0, 10], ParseError on duplicate keys.
  explicit Catalog(std::vector<VulnRecord> records);

  const std::vector<VulnRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  bool contains(std::string_view key) const;
  // Throws UnknownKeyError.
  const VulnRecord& at(std::string_view key) const;

  nlohmann::json to_json() const;

 private:
  std::vector<VulnRecord> records_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

Catalog catalog_from_json(const nlohmann::json& doc);
Catalog load_catalog(const std::filesystem::path& path);
void write_catalog(const Catalog& catalog, const std::filesystem::path& path);

}  // namespace mtdgame
