// Copyright 2026 The h2cert Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef H2CERT_SRC_TEXT_IO_HPP_
#define H2CERT_SRC_TEXT_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "h2cert/errors.hpp"
#include "json.hpp"

namespace h2cert::internal {

using Json = nlohmann::ordered_json;

// Whole file as text. Throws ParseError (line 0) when unreadable.
std::string ReadTextFile(const std::filesystem::path& path);

// Parses JSON, turning syntax errors into ParseError with the 1-based line.
nlohmann::ordered_json ParseJsonText(const std::string& text,
                             const std::filesystem::path& path);

// Throws ParseError naming the first key of `object` outside `allowed`.
void RejectUnknownKeys(const nlohmann::ordered_json& object,
                       std::initializer_list<std::string_view> allowed,
                       const std::filesystem::path& path,
                       std::string_view context);

// Strict accessors over one JSON object; every failure names the source file
// and the offending key path.
class JsonReader {
 public:
  JsonReader(const Json& object, const std::filesystem::path& source, std::string context)
      : object_(object), source_(source), context_(std::move(context)) {
    if (!object_.is_object()) Fail("", "must be an object");
  }

  void Allow(std::initializer_list<std::string_view> keys) const {
    internal::RejectUnknownKeys(object_, keys, source_, context_);
  }

  const Json& At(const char* key) const {
    const auto it = object_.find(key);
    if (it == object_.end()) Fail(key, "is missing");
    return *it;
  }
  bool Has(const char* key) const { return object_.contains(key); }
  bool IsNull(const char* key) const { return At(key).is_null(); }
  const Json& object() const { return object_; }
  const std::filesystem::path& source() const { return source_; }

  double Number(const char* key) const {
    const Json& v = At(key);
    if (!v.is_number()) Fail(key, "must be a number");
    return v.get<double>();
  }
  std::optional<double> OptionalNumber(const char* key) const {
    if (IsNull(key)) return std::nullopt;
    return Number(key);
  }
  long long Integer(const char* key) const {
    const Json& v = At(key);
    if (!v.is_number_integer()) Fail(key, "must be an integer");
    return v.get<long long>();
  }
  bool Bool(const char* key) const {
    const Json& v = At(key);
    if (!v.is_boolean()) Fail(key, "must be true or false");
    return v.get<bool>();
  }
  std::string String(const char* key) const {
    const Json& v = At(key);
    if (!v.is_string()) Fail(key, "must be a string");
    return v.get<std::string>();
  }
  JsonReader Child(const char* key) const {
    return JsonReader(At(key), source_, context_ + "." + key);
  }

  [[noreturn]] void Fail(std::string_view key, std::string_view what) const {
    std::string where = context_;
    if (!key.empty()) where += "." + std::string(key);
    throw ParseError(source_.string(), 0, "'" + where + "' " + std::string(what));
  }

 private:
  const Json& object_;
  const std::filesystem::path& source_;
  std::string context_;
};

struct CsvRow {
  std::size_t line = 0;  // 1-based
  std::vector<std::string_view> fields;
};

// Minimal reader for the numeric profile CSVs: comma separated, no quoting.
// Blank lines are skipped. Columns are matched by header name; a missing or
// unexpected column is a ParseError on line 1.
class CsvTable {
 public:
  CsvTable(std::string text, std::filesystem::path path,
           std::initializer_list<std::string_view> columns);
  // Rows point into the owned text.
  CsvTable(const CsvTable&) = delete;
  CsvTable& operator=(const CsvTable&) = delete;

  const std::vector<CsvRow>& rows() const { return rows_; }
  const std::filesystem::path& path() const { return path_; }

  // Value of the named column (declared in the constructor) in `row`.
  double Number(const CsvRow& row, std::size_t column) const;
  long long Integer(const CsvRow& row, std::size_t column) const;
  std::string_view column_name(std::size_t column) const { return columns_[column]; }

 private:
  std::string text_;
  std::filesystem::path path_;
  std::vector<std::string_view> columns_;
  std::vector<std::size_t> positions_;  // field index per declared column
  std::vector<CsvRow> rows_;
};

}  // namespace h2cert::internal

#endif  // H2CERT_SRC_TEXT_IO_HPP_
