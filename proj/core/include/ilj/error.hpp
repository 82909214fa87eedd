// Copyright 2026 The ilj Authors.
//
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

#pragma once

#include <stdexcept>
#include <string>

namespace ilj {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by fuel-bounded rewriting when the budget runs out.
class FuelExhausted : public Error {
 public:
  using Error::Error;
};

// Raised by the text readers.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Outcome of a checker. `path` locates the offending node, premises
// numbered from 0 and joined by dots ("root", "root.1.0", ...).
struct Verdict {
  bool ok = true;
  std::string path;
  std::string rule;
  std::string message;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string path, std::string rule, std::string message) {
    return {false, std::move(path), std::move(rule), std::move(message)};
  }
  explicit operator bool() const { return ok; }
};

}  // namespace ilj
