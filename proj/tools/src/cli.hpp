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

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ilj/church.hpp"
#include "ilj/formulas.hpp"
#include "ilj/itsys.hpp"
#include "ilj/ljker.hpp"
#include "ilj/point.hpp"
#include "ilj/xlate.hpp"

namespace ilj::cli {

enum Exit { kOk = 0, kInvalid = 1, kUsage = 2 };

struct PointsDecl {
  std::optional<SimpleType> type;  // nullopt: D∞
  Family family;
};

struct ChurchDecl {
  ChurchContext context;
  PreTerm subject;
  Formula conclusion;
};

struct TermDecl {
  Term term;
  std::vector<VarDecl> vars;
};

// Named objects read from .ilj files. Names are unique across kinds.
class Workspace {
 public:
  static Workspace load(const std::vector<std::string>& files);
  void add_text(const std::string& text, const std::string& origin);

  const Carriers* carriers() const { return carriers_.all().empty() ? nullptr : &carriers_; }
  // (kind, name) in declaration order.
  const std::vector<std::pair<std::string, std::string>>& order() const { return order_; }
  std::vector<std::string> names_of(const std::string& kind) const;
  bool has(const std::string& name) const;
  const std::string& kind_of(const std::string& name) const;

  std::map<std::string, TermDecl> terms;
  std::map<std::string, Formula> formulas;
  std::map<std::string, Proof> proofs;
  std::map<std::string, TypingDeriv> derivs;
  std::map<std::string, FamilyTyping> families;
  std::map<std::string, PointsDecl> points;
  std::map<std::string, Scaffold> scaffolds;
  std::map<std::string, ChurchDecl> churches;

 private:
  void declare(const std::string& kind, const std::string& name, std::size_t line);

  Carriers carriers_;
  std::vector<std::pair<std::string, std::string>> order_;
  std::map<std::string, std::string> kinds_;
};

// Runs one command line (without the program name); reports go to out,
// diagnostics to err. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

const std::vector<std::string>& commands();

}  // namespace ilj::cli
