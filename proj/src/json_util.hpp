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

// Strict JSON field access shared by the file loaders.

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mtdgame/errors.hpp"

namespace mtdgame::detail {

inline nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

inline void write_text_file(const std::filesystem::path& path,
                            const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
  if (!out) throw ParseError("write failed for " + path.string());
}

// Canonical on-disk form: two-space indent, trailing newline.
inline std::string dump_json(const nlohmann::json& doc) {
  return doc.dump(2) + "\n";
}

inline void require_object(const nlohmann::json& j, std::string_view what,
                           std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected object");
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) {
      throw ParseError(std::string(what) + ": unknown field \"" + key + "\"");
    }
  }
}

inline const nlohmann::json& field(const nlohmann::json& j,
                                   std::string_view what,
                                   const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string(what) + ": missing field \"" + key + "\"");
  }
  return *it;
}

inline std::string string_field(const nlohmann::json& j, std::string_view what,
                                const std::string& key) {
  const auto& v = field(j, what, key);
  if (!v.is_string()) {
    throw ParseError(std::string(what) + ": field \"" + key +
                     "\" must be a string");
  }
  return v.get<std::string>();
}

inline double number_field(const nlohmann::json& j, std::string_view what,
                           const std::string& key) {
  const auto& v = field(j, what, key);
  if (!v.is_number()) {
    throw ParseError(std::string(what) + ": field \"" + key +
                     "\" must be a number");
  }
  return v.get<double>();
}

}  // namespace mtdgame::detail
