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

#include "mtdgame/vuln_catalog.hpp"

#include <cmath>

#include "json_util.hpp"
#include "mtdgame/errors.hpp"

namespace mtdgame {

std::string_view to_string(AccessComplexity ac) {
  switch (ac) {
    case AccessComplexity::Easy: return "easy";
    case AccessComplexity::Medium: return "medium";
    case AccessComplexity::High: return "high";
  }
  return "?";
}

AccessComplexity parse_access_complexity(std::string_view s) {
  if (s == "easy") return AccessComplexity::Easy;
  if (s == "medium") return AccessComplexity::Medium;
  if (s == "high") return AccessComplexity::High;
  throw ParseError("unknown access complexity \"" + std::string(s) + "\"");
}

double AcProbabilityMap::at(AccessComplexity ac) const {
  switch (ac) {
    case AccessComplexity::Easy: return easy;
    case AccessComplexity::Medium: return medium;
    case AccessComplexity::High: return high;
  }
  return 0.0;
}

void AcProbabilityMap::validate() const {
  for (double p : {easy, medium, high}) {
    if (!(p > 0.0 && p <= 1.0)) {
      throw ConfigError("ac_map probabilities must lie in (0, 1]");
    }
  }
  if (!(easy >= medium && medium >= high)) {
    throw ConfigError("ac_map must satisfy easy >= medium >= high");
  }
}

Catalog::Catalog(std::vector<VulnRecord> records) : records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& r = records_[i];
    if (!std::isfinite(r.cia) || r.cia < 0.0 || r.cia > 10.0) {
      throw RangeError("vulnerability \"" + r.key + "\": cia " +
                       std::to_string(r.cia) + " outside [0, 10]");
    }
    if (!index_.emplace(r.key, i).second) {
      throw ParseError("duplicate vulnerability key \"" + r.key + "\"");
    }
  }
}

bool Catalog::contains(std::string_view key) const {
  return index_.find(key) != index_.end();
}

const VulnRecord& Catalog::at(std::string_view key) const {
  auto it = index_.find(key);
  if (it == index_.end()) {
    throw UnknownKeyError("unknown vulnerability \"" + std::string(key) + "\"");
  }
  return records_[it->second];
}

nlohmann::json Catalog::to_json() const {
  auto doc = nlohmann::json::array();
  for (const auto& r : records_) {
    doc.push_back({{"key", r.key},
                   {"cve", r.cve},
                   {"vm", r.vm},
                   {"service", r.service},
                   {"cia", r.cia},
                   {"ac", to_string(r.ac)}});
  }
  return doc;
}

Catalog catalog_from_json(const nlohmann::json& doc) {
  if (!doc.is_array()) throw ParseError("catalog: expected array");
  std::vector<VulnRecord> records;
  records.reserve(doc.size());
  for (const auto& j : doc) {
    detail::require_object(j, "vulnerability",
                           {"key", "cve", "vm", "service", "cia", "ac"});
    VulnRecord r;
    r.key = detail::string_field(j, "vulnerability", "key");
    r.cve = detail::string_field(j, "vulnerability", "cve");
    r.vm = detail::string_field(j, "vulnerability", "vm");
    r.service = detail::string_field(j, "vulnerability", "service");
    r.cia = detail::number_field(j, "vulnerability", "cia");
    r.ac = parse_access_complexity(detail::string_field(j, "vulnerability", "ac"));
    records.push_back(std::move(r));
  }
  return Catalog(std::move(records));
}

Catalog load_catalog(const std::filesystem::path& path) {
  auto doc = detail::read_json_file(path);
  try {
    return catalog_from_json(doc);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_catalog(const Catalog& catalog, const std::filesystem::path& path) {
  detail::write_text_file(path, detail::dump_json(catalog.to_json()));
}

}  // namespace mtdgame
