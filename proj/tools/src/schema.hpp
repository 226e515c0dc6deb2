// Copyright 2026 The glsim Authors
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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glsim/serialize.hpp"

namespace glsim::cli {

/// Typed access to one config object. Each accessor records the key as
/// known and writes the fallback when the key is absent (a null fallback
/// makes the key required). finish() rejects keys nobody asked for.
class Schema {
 public:
  Schema(Json& j, std::string where);

  Json& slot(const char* key, const Json& fallback);
  Json* optional(const char* key);

  double number(const char* key, std::optional<double> fallback);
  std::int64_t integer(const char* key, std::optional<std::int64_t> fallback);
  std::uint64_t unsigned_integer(const char* key, std::uint64_t fallback);
  bool boolean(const char* key, bool fallback);
  std::string choice(const char* key, const std::vector<std::string>& options, std::optional<std::string> fallback);
  std::string string(const char* key);
  void number_array(const char* key, const Json& fallback);

  void finish() const;
  [[noreturn]] void fail(const std::string& key, const std::string& what) const;
  std::string child(const char* key) const;

 private:
  Json& j_;
  std::string where_;
  std::vector<std::string> seen_;
};

void check_vector(Json& j, const std::string& where, const Json& fallback);

}  // namespace glsim::cli
