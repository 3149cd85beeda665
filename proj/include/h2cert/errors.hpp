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

#ifndef H2CERT_ERRORS_HPP_
#define H2CERT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace h2cert {

// Invalid input values (non-finite numbers, out-of-range parameters).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A function evaluated outside its mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two unit-tagged quantities combined in an incompatible way.
class UnitMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed LP model construction (bad bounds, unknown variable ids).
class ModelError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse failure in an input file. `line` is 1-based; 0 means the error is
// not tied to a particular line (missing file, wrong row count).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, std::size_t line, const std::string& what)
      : std::runtime_error(Format(path, line, what)),
        path_(std::move(path)),
        line_(line) {}

  const std::string& path() const { return path_; }
  std::size_t line() const { return line_; }

 private:
  static std::string Format(const std::string& path, std::size_t line,
                            const std::string& what) {
    if (line == 0) return path + ": " + what;
    return path + ":" + std::to_string(line) + ": " + what;
  }

  std::string path_;
  std::size_t line_;
};

}  // namespace h2cert

#endif  // H2CERT_ERRORS_HPP_
