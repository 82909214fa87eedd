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

#include "ilj/terms.hpp"

#include <algorithm>
#include <functional>

namespace ilj {

struct SimpleType::Node {
  std::string name;
  std::optional<SimpleType> from;
  std::optional<SimpleType> to;
  std::size_t depth = 0;
};

SimpleType SimpleType::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->name = std::move(name);
  return SimpleType(std::move(n));
}

SimpleType SimpleType::arrow(SimpleType from, SimpleType to) {
  auto n = std::make_shared<Node>();
  n->depth = 1 + std::max(from.depth(), to.depth());
  n->from = std::move(from);
  n->to = std::move(to);
  return SimpleType(std::move(n));
}

bool SimpleType::is_atom() const { return !node_->from.has_value(); }

const std::string& SimpleType::name() const {
  if (!is_atom()) throw Error("name() of an arrow type");
  return node_->name;
}

const SimpleType& SimpleType::from() const {
  if (is_atom()) throw Error("from() of an atomic type");
  return *node_->from;
}

const SimpleType& SimpleType::to() const {
  if (is_atom()) throw Error("to() of an atomic type");
  return *node_->to;
}

std::size_t SimpleType::depth() const { return node_->depth; }

std::strong_ordering operator<=>(const SimpleType& a, const SimpleType& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.is_atom() != b.is_atom()) return a.is_atom() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_atom()) return a.name() <=> b.name();
  if (auto c = a.from() <=> b.from(); c != 0) return c;
  return a.to() <=> b.to();
}

bool operator==(const SimpleType& a, const SimpleType& b) { return (a <=> b) == 0; }

std::string SimpleType::show() const {
  if (is_atom()) return name();
  std::string l = from().show();
  if (!from().is_atom()) l = "(" + l + ")";
  return l + " -> " + to().show();
}

struct Term::Node {
  Kind kind = Kind::Bot;
  std::string name;
  std::size_t index = 0;
  std::optional<Term> a;
  std::optional<Term> b;
  std::optional<SimpleType> type;
  std::size_t size = 1;
};

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Free;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::bound(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bound;
  n->index = index;
  return Term(std::move(n));
}

Term Term::app(Term fun, Term arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->size = 1 + fun.size() + arg.size();
  n->a = std::move(fun);
  n->b = std::move(arg);
  return Term(std::move(n));
}

Term Term::lam_raw(std::string hint, Term body, std::optional<SimpleType> type) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Lam;
  n->name = std::move(hint);
  n->size = 1 + body.size();
  n->a = std::move(body);
  n->type = std::move(type);
  return Term(std::move(n));
}

Term Term::bot() {
  static const Term b(std::make_shared<Node>());
  return b;
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
std::size_t Term::index() const { return node_->index; }

const Term& Term::fun() const {
  if (!is_app()) throw Error("fun() of a non-application");
  return *node_->a;
}

const Term& Term::arg() const {
  if (!is_app()) throw Error("arg() of a non-application");
  return *node_->b;
}

const Term& Term::body() const {
  if (!is_lam()) throw Error("body() of a non-abstraction");
  return *node_->a;
}

const std::optional<SimpleType>& Term::binder_type() const { return node_->type; }
std::size_t Term::size() const { return node_->size; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Free: return a.name() == b.name();
    case Term::Kind::Bound: return a.index() == b.index();
    case Term::Kind::App: return a.fun() == b.fun() && a.arg() == b.arg();
    case Term::Kind::Lam: return a.binder_type() == b.binder_type() && a.body() == b.body();
    case Term::Kind::Bot: return true;
  }
  return false;
}

namespace {

Term close_at(const Term& t, const std::string& x, std::size_t depth) {
  switch (t.kind()) {
    case Term::Kind::Free: return t.name() == x ? Term::bound(depth) : t;
    case Term::Kind::App: return Term::app(close_at(t.fun(), x, depth), close_at(t.arg(), x, depth));
    case Term::Kind::Lam: return Term::lam_raw(t.name(), close_at(t.body(), x, depth + 1), t.binder_type());
    default: return t;
  }
}

// Adds d to every bound index >= cutoff.
Term shift(const Term& t, long d, std::size_t cutoff) {
  switch (t.kind()) {
    case Term::Kind::Bound:
      if (t.index() >= cutoff) return Term::bound(static_cast<std::size_t>(static_cast<long>(t.index()) + d));
      return t;
    case Term::Kind::App: return Term::app(shift(t.fun(), d, cutoff), shift(t.arg(), d, cutoff));
    case Term::Kind::Lam: return Term::lam_raw(t.name(), shift(t.body(), d, cutoff + 1), t.binder_type());
    default: return t;
  }
}

Term subst_bound(const Term& t, std::size_t j, const Term& s) {
  switch (t.kind()) {
    case Term::Kind::Bound: return t.index() == j ? s : t;
    case Term::Kind::App: return Term::app(subst_bound(t.fun(), j, s), subst_bound(t.arg(), j, s));
    case Term::Kind::Lam: return Term::lam_raw(t.name(), subst_bound(t.body(), j + 1, shift(s, 1, 0)), t.binder_type());
    default: return t;
  }
}

bool has_loose(const Term& t, std::size_t depth) {
  switch (t.kind()) {
    case Term::Kind::Bound: return t.index() == depth;
    case Term::Kind::App: return has_loose(t.fun(), depth) || has_loose(t.arg(), depth);
    case Term::Kind::Lam: return has_loose(t.body(), depth + 1);
    default: return false;
  }
}

bool closed_above(const Term& t, std::size_t depth) {
  switch (t.kind()) {
    case Term::Kind::Bound: return t.index() < depth;
    case Term::Kind::App: return closed_above(t.fun(), depth) && closed_above(t.arg(), depth);
    case Term::Kind::Lam: return closed_above(t.body(), depth + 1);
    default: return true;
  }
}

Term subst_free(const Term& t, const std::string& x, const Term& n, std::size_t depth) {
  switch (t.kind()) {
    case Term::Kind::Free: return t.name() == x ? shift(n, static_cast<long>(depth), 0) : t;
    case Term::Kind::App: return Term::app(subst_free(t.fun(), x, n, depth), subst_free(t.arg(), x, n, depth));
    case Term::Kind::Lam: return Term::lam_raw(t.name(), subst_free(t.body(), x, n, depth + 1), t.binder_type());
    default: return t;
  }
}

void collect_free(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Free: out.insert(t.name()); break;
    case Term::Kind::App: collect_free(t.fun(), out); collect_free(t.arg(), out); break;
    case Term::Kind::Lam: collect_free(t.body(), out); break;
    default: break;
  }
}

}  // namespace

Term Term::lam(const std::string& x, const Term& body, std::optional<SimpleType> type) {
  return lam_raw(x, close_at(body, x, 0), std::move(type));
}

Term instantiate(const Term& body, const Term& t) {
  return shift(subst_bound(body, 0, shift(t, 1, 0)), -1, 0);
}

Term open_var(const Term& lam, const std::string& x) { return instantiate(lam.body(), Term::var(x)); }

Term substitute(const Term& m, const std::string& x, const Term& n) { return subst_free(m, x, n, 0); }

Term rename_free(const Term& m, const std::string& from, const std::string& to) {
  return substitute(m, from, Term::var(to));
}

std::set<std::string> free_vars(const Term& m) {
  std::set<std::string> out;
  collect_free(m, out);
  return out;
}

bool has_bottom(const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Bot: return true;
    case Term::Kind::App: return has_bottom(m.fun()) || has_bottom(m.arg());
    case Term::Kind::Lam: return has_bottom(m.body());
    default: return false;
  }
}

bool is_locally_closed(const Term& m) { return closed_above(m, 0); }

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  for (std::size_t k = 1;; ++k) {
    std::string c = base + std::to_string(k);
    if (!avoid.count(c)) return c;
  }
}

std::optional<Term> beta_step(const Term& m) {
  switch (m.kind()) {
    case Term::Kind::App: {
      if (m.fun().is_lam()) return instantiate(m.fun().body(), m.arg());
      if (auto f = beta_step(m.fun())) return Term::app(*f, m.arg());
      if (auto a = beta_step(m.arg())) return Term::app(m.fun(), *a);
      return std::nullopt;
    }
    case Term::Kind::Lam:
      if (auto b = beta_step(m.body())) return Term::lam_raw(m.name(), *b, m.binder_type());
      return std::nullopt;
    default: return std::nullopt;
  }
}

Term beta_normalize(const Term& m, std::size_t fuel) {
  Term cur = m;
  for (;;) {
    auto next = beta_step(cur);
    if (!next) return cur;
    if (fuel == 0) throw FuelExhausted("beta normalization ran out of fuel");
    --fuel;
    cur = *next;
  }
}

bool is_beta_normal(const Term& m) { return !beta_step(m).has_value(); }

Term omega_normalize(const Term& m) {
  switch (m.kind()) {
    case Term::Kind::App: {
      Term f = omega_normalize(m.fun());
      if (f.is_bot()) return f;
      return Term::app(f, omega_normalize(m.arg()));
    }
    case Term::Kind::Lam: {
      Term b = omega_normalize(m.body());
      if (b.is_bot()) return b;
      return Term::lam_raw(m.name(), b, m.binder_type());
    }
    default: return m;
  }
}

bool is_omega_normal(const Term& m) {
  switch (m.kind()) {
    case Term::Kind::App: return !m.fun().is_bot() && is_omega_normal(m.fun()) && is_omega_normal(m.arg());
    case Term::Kind::Lam: return !m.body().is_bot() && is_omega_normal(m.body());
    default: return true;
  }
}

Term eta_normalize(const Term& m) {
  switch (m.kind()) {
    case Term::Kind::App: return Term::app(eta_normalize(m.fun()), eta_normalize(m.arg()));
    case Term::Kind::Lam: {
      Term b = eta_normalize(m.body());
      if (b.is_app() && b.arg().kind() == Term::Kind::Bound && b.arg().index() == 0 && !has_loose(b.fun(), 0))
        return shift(b.fun(), -1, 0);
      return Term::lam_raw(m.name(), b, m.binder_type());
    }
    default: return m;
  }
}

bool is_eta_normal(const Term& m) { return eta_normalize(m) == m; }

namespace {

Term strip_types(const Term& m) {
  switch (m.kind()) {
    case Term::Kind::App: return Term::app(strip_types(m.fun()), strip_types(m.arg()));
    case Term::Kind::Lam: return Term::lam_raw(m.name(), strip_types(m.body()));
    default: return m;
  }
}

}  // namespace

bool eta_equivalent(const Term& a, const Term& b) {
  if (has_bottom(a) || has_bottom(b)) throw Error("eta_equivalent: bottom present");
  // η-contraction may drop a typed binder, so compare without annotations.
  return strip_types(eta_normalize(a)) == strip_types(eta_normalize(b));
}

namespace {

std::set<std::string> names_in(const Term& m) {
  std::set<std::string> out;
  std::function<void(const Term&)> go = [&](const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Free: out.insert(t.name()); break;
      case Term::Kind::App: go(t.fun()); go(t.arg()); break;
      case Term::Kind::Lam: out.insert(t.name()); go(t.body()); break;
      default: break;
    }
  };
  go(m);
  return out;
}

bool qproj_open(const Term& o, const std::string& x, std::set<std::string>& used) {
  Term cur = o;
  std::vector<std::string> binders;
  while (cur.is_lam()) {
    std::string z = fresh_name("z", used);
    used.insert(z);
    binders.push_back(z);
    cur = open_var(cur, z);
  }
  std::vector<Term> args;
  while (cur.is_app()) {
    args.push_back(cur.arg());
    cur = cur.fun();
  }
  if (!cur.is_free() || cur.name() != x) return false;
  std::reverse(args.begin(), args.end());
  std::size_t n = 0;
  while (n < args.size() && !args[n].is_bot()) ++n;
  for (std::size_t k = n; k < args.size(); ++k)
    if (!args[k].is_bot()) return false;
  if (n > binders.size()) return false;
  for (std::size_t k = 0; k < n; ++k)
    if (!qproj_open(args[k], binders[k], used)) return false;
  return true;
}

bool qprojo_open(const Term& o, const Term& m, std::set<std::string>& used) {
  if (omega_normalize(o).is_bot()) return true;
  switch (m.kind()) {
    case Term::Kind::Free: return qproj_open(o, m.name(), used);
    case Term::Kind::Lam: {
      if (!o.is_lam()) return false;
      std::string y = fresh_name("y", used);
      used.insert(y);
      return qprojo_open(open_var(o, y), open_var(m, y), used);
    }
    case Term::Kind::App:
      return o.is_app() && qprojo_open(o.fun(), m.fun(), used) && qprojo_open(o.arg(), m.arg(), used);
    default: return false;
  }
}

}  // namespace

bool qproj_member(const Term& o, const std::string& x) {
  auto used = names_in(o);
  used.insert(x);
  return qproj_open(o, x, used);
}

bool qprojo_member(const Term& o, const Term& m) {
  auto used = names_in(o);
  auto more = names_in(m);
  used.insert(more.begin(), more.end());
  return qprojo_open(o, m, used);
}

std::optional<SimpleType> infer_type(const Term& m, const std::map<std::string, SimpleType>& env) {
  switch (m.kind()) {
    case Term::Kind::Free: {
      auto it = env.find(m.name());
      if (it == env.end()) return std::nullopt;
      return it->second;
    }
    case Term::Kind::App: {
      auto f = infer_type(m.fun(), env);
      auto a = infer_type(m.arg(), env);
      if (!f || !a || f->is_atom() || !(f->from() == *a)) return std::nullopt;
      return f->to();
    }
    case Term::Kind::Lam: {
      if (!m.binder_type()) return std::nullopt;
      std::set<std::string> avoid = names_in(m);
      for (const auto& [k, v] : env) avoid.insert(k);
      std::string y = fresh_name(m.name().empty() ? "y" : m.name(), avoid);
      auto env2 = env;
      env2.insert_or_assign(y, *m.binder_type());
      auto b = infer_type(open_var(m, y), env2);
      if (!b) return std::nullopt;
      return SimpleType::arrow(*m.binder_type(), *b);
    }
    default: return std::nullopt;
  }
}

std::size_t lambda_depth(const Term& m) {
  std::size_t d = 0;
  const Term* cur = &m;
  while (cur->is_lam()) {
    ++d;
    cur = &cur->body();
  }
  return d;
}

std::string Term::show() const {
  std::set<std::string> avoid = free_vars(*this);
  std::vector<std::string> stack;
  std::function<std::string(const Term&, int)> go = [&](const Term& t, int prec) -> std::string {
    switch (t.kind()) {
      case Kind::Free: return t.name();
      case Kind::Bound:
        if (t.index() < stack.size()) return stack[stack.size() - 1 - t.index()];
        return "#" + std::to_string(t.index());
      case Kind::Bot: return "_|_";
      case Kind::App: {
        std::string s = go(t.fun(), 1) + " " + go(t.arg(), 2);
        return prec >= 2 ? "(" + s + ")" : s;
      }
      case Kind::Lam: {
        std::set<std::string> taken = avoid;
        taken.insert(stack.begin(), stack.end());
        std::string x = fresh_name(t.name().empty() ? "x" : t.name(), taken);
        stack.push_back(x);
        std::string s = "\\" + x;
        if (t.binder_type()) s += ":" + t.binder_type()->show();
        s += ". " + go(t.body(), 0);
        stack.pop_back();
        return prec >= 1 ? "(" + s + ")" : s;
      }
    }
    return "";
  };
  return go(*this, 0);
}

}  // namespace ilj
