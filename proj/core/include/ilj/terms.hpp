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

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ilj/error.hpp"

namespace ilj {

class SimpleType {
 public:
  static SimpleType atom(std::string name);
  static SimpleType arrow(SimpleType from, SimpleType to);

  bool is_atom() const;
  const std::string& name() const;  // atoms only
  const SimpleType& from() const;   // arrows only
  const SimpleType& to() const;
  std::size_t depth() const;  // atoms have depth 0

  friend bool operator==(const SimpleType& a, const SimpleType& b);
  friend std::strong_ordering operator<=>(const SimpleType& a, const SimpleType& b);

  std::string show() const;

 private:
  struct Node;
  explicit SimpleType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Locally nameless: free variables carry names, bound ones de Bruijn
// indices. Binders keep their source name as a display hint only, so ==
// is α-equivalence. Typed abstractions carry their domain type.
class Term {
 public:
  enum class Kind { Free, Bound, App, Lam, Bot };

  static Term var(std::string name);
  static Term bound(std::size_t index);
  static Term app(Term fun, Term arg);
  // Builds λ over a body whose bound index 0 refers to the binder.
  static Term lam_raw(std::string hint, Term body, std::optional<SimpleType> type = std::nullopt);
  // λx.body, binding the free occurrences of x in body.
  static Term lam(const std::string& x, const Term& body,
                  std::optional<SimpleType> type = std::nullopt);
  static Term bot();

  Kind kind() const;
  bool is_free() const { return kind() == Kind::Free; }
  bool is_app() const { return kind() == Kind::App; }
  bool is_lam() const { return kind() == Kind::Lam; }
  bool is_bot() const { return kind() == Kind::Bot; }

  const std::string& name() const;  // free variable name or binder hint
  std::size_t index() const;        // bound variables
  const Term& fun() const;
  const Term& arg() const;
  const Term& body() const;  // raw body of λ (index 0 is the binder)
  const std::optional<SimpleType>& binder_type() const;
  std::size_t size() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

  // Human-oriented rendering, e.g. "\x. x y".
  std::string show() const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Replaces bound index 0 of a λ-body by t (t locally closed).
Term instantiate(const Term& body, const Term& t);
// Opens a λ by a fresh free variable.
Term open_var(const Term& lam, const std::string& x);
// Capture-avoiding M[N/x].
Term substitute(const Term& m, const std::string& x, const Term& n);
Term rename_free(const Term& m, const std::string& from, const std::string& to);

std::set<std::string> free_vars(const Term& m);
bool has_bottom(const Term& m);
bool is_locally_closed(const Term& m);
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

std::optional<Term> beta_step(const Term& m);  // leftmost-outermost
Term beta_normalize(const Term& m, std::size_t fuel);
bool is_beta_normal(const Term& m);

// Normal form for λx.⊥ → ⊥ and ⊥ M → ⊥.
Term omega_normalize(const Term& m);
bool is_omega_normal(const Term& m);

Term eta_normalize(const Term& m);
bool is_eta_normal(const Term& m);
bool eta_equivalent(const Term& a, const Term& b);

// Membership in the approximant sets Q(x) and Q°(M).
bool qproj_member(const Term& o, const std::string& x);
bool qprojo_member(const Term& o, const Term& m);

// Simple type of a typed term under env; nullopt when ill typed.
std::optional<SimpleType> infer_type(const Term& m, const std::map<std::string, SimpleType>& env);

// Number of leading λs.
std::size_t lambda_depth(const Term& m);

}  // namespace ilj
