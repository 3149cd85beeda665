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

#include "text_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "h2cert/errors.hpp"

namespace h2cert::internal {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> Split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// U+2212 MINUS SIGN, accepted in place of '-'.
constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

}  // namespace

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::error_code ec;
    const bool exists = std::filesystem::exists(path, ec);
    throw ParseError(path.string(), 0, exists ? "cannot read file" : "file not found");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

nlohmann::ordered_json ParseJsonText(const std::string& text,
                             const std::filesystem::path& path) {
  try {
    return nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::ordered_json::parse_error& e) {
    std::size_t line = 1;
    const std::size_t end = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t i = 0; i + 1 < end; ++i) line += text[i] == '\n';
    std::string what = e.what();
    if (const auto pos = what.rfind(": "); pos != std::string::npos) {
      what = what.substr(pos + 2);
    }
    throw ParseError(path.string(), line, "invalid JSON: " + what);
  }
}

void RejectUnknownKeys(const nlohmann::ordered_json& object,
                       std::initializer_list<std::string_view> allowed,
                       const std::filesystem::path& path,
                       std::string_view context) {
  if (!object.is_object()) {
    throw ParseError(path.string(), 0, std::string(context) + " must be a JSON object");
  }
  for (const auto& item : object.items()) {
    bool known = false;
    for (std::string_view a : allowed) known = known || item.key() == a;
    if (!known) {
      throw ParseError(path.string(), 0,
                       "unknown key '" + item.key() + "' in " + std::string(context));
    }
  }
}

CsvTable::CsvTable(std::string text, std::filesystem::path path,
                   std::initializer_list<std::string_view> columns)
    : text_(std::move(text)), path_(std::move(path)), columns_(columns) {
  std::string_view all(text_);
  if (all.substr(0, 3) == "\xEF\xBB\xBF") all.remove_prefix(3);
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t width = 0;
  while (!all.empty()) {
    const std::size_t nl = all.find('\n');
    const std::string_view line = all.substr(0, nl);
    all = nl == std::string_view::npos ? std::string_view() : all.substr(nl + 1);
    ++line_no;
    if (Trim(line).empty()) continue;
    auto fields = Split(line);
    if (!have_header) {
      if (line_no != 1) {
        throw ParseError(path_.string(), line_no, "header must be the first line");
      }
      width = fields.size();
      positions_.assign(columns_.size(), width);
      for (std::size_t f = 0; f < fields.size(); ++f) {
        bool matched = false;
        for (std::size_t c = 0; c < columns_.size(); ++c) {
          if (fields[f] == columns_[c]) {
            if (positions_[c] != width) {
              throw ParseError(path_.string(), 1,
                               "duplicate column '" + std::string(fields[f]) + "'");
            }
            positions_[c] = f;
            matched = true;
          }
        }
        if (!matched) {
          throw ParseError(path_.string(), 1,
                           "unexpected column '" + std::string(fields[f]) + "'");
        }
      }
      for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (positions_[c] == width) {
          throw ParseError(path_.string(), 1,
                           "missing column '" + std::string(columns_[c]) + "'");
        }
      }
      have_header = true;
      continue;
    }
    if (fields.size() != width) {
      throw ParseError(path_.string(), line_no,
                       "expected " + std::to_string(width) + " fields, found " +
                           std::to_string(fields.size()));
    }
    rows_.push_back(CsvRow{line_no, std::move(fields)});
  }
  if (!have_header) throw ParseError(path_.string(), 0, "empty file");
}

double CsvTable::Number(const CsvRow& row, std::size_t column) const {
  std::string_view cell = row.fields[positions_[column]];
  std::string buffer;
  if (cell.substr(0, kUnicodeMinus.size()) == kUnicodeMinus) {
    buffer = "-" + std::string(cell.substr(kUnicodeMinus.size()));
    cell = buffer;
  }
  double value = 0.0;
  const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (cell.empty() || ec != std::errc() || end != cell.data() + cell.size() ||
      !std::isfinite(value)) {
    throw ParseError(path_.string(), row.line,
                     "non-numeric value '" + std::string(row.fields[positions_[column]]) +
                         "' in column '" + std::string(columns_[column]) + "'");
  }
  return value;
}

long long CsvTable::Integer(const CsvRow& row, std::size_t column) const {
  const std::string_view cell = row.fields[positions_[column]];
  long long value = 0;
  const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (cell.empty() || ec != std::errc() || end != cell.data() + cell.size()) {
    throw ParseError(path_.string(), row.line,
                     "non-integer value '" + std::string(cell) + "' in column '" +
                         std::string(columns_[column]) + "'");
  }
  return value;
}

}  // namespace h2cert::internal
