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

#include "ilj/church.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace ilj {

struct PreTerm::Node {
  Kind kind = Kind::Bot;
  std::string name;
  IndexSet dom;
  std::optional<Formula> formula;
  IndexMap map;
  std::vector<PreTerm> kids;
};

PreTerm PreTerm::var(std::string x, IndexSet j) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->name = std::move(x);
  n->dom = std::move(j);
  return PreTerm(std::move(n));
}

PreTerm PreTerm::abs(std::string x, Formula a, IndexMap u, PreTerm body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Abs;
  n->name = std::move(x);
  n->formula = std::move(a);
  n->map = std::move(u);
  n->kids.push_back(std::move(body));
  return PreTerm(std::move(n));
}

PreTerm PreTerm::app(PreTerm s, PreTerm t) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->kids.push_back(std::move(s));
  n->kids.push_back(std::move(t));
  return PreTerm(std::move(n));
}

PreTerm PreTerm::bot() { return PreTerm(std::make_shared<Node>()); }

PreTerm::Kind PreTerm::kind() const { return node_->kind; }
const std::string& PreTerm::name() const { return node_->name; }
const IndexSet& PreTerm::domain() const { return node_->dom; }

const Formula& PreTerm::formula() const {
  if (kind() != Kind::Abs) throw Error("formula() of a non-abstraction");
  return *node_->formula;
}

const IndexMap& PreTerm::map() const { return node_->map; }

const PreTerm& PreTerm::body() const {
  if (kind() != Kind::Abs) throw Error("body() of a non-abstraction");
  return node_->kids[0];
}

const PreTerm& PreTerm::fun() const {
  if (kind() != Kind::App) throw Error("fun() of a non-application");
  return node_->kids[0];
}

const PreTerm& PreTerm::arg() const {
  if (kind() != Kind::App) throw Error("arg() of a non-application");
  return node_->kids[1];
}

bool operator==(const PreTerm& a, const PreTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case PreTerm::Kind::Var: return a.name() == b.name() && a.domain() == b.domain();
    case PreTerm::Kind::Abs:
      return a.name() == b.name() && a.formula() == b.formula() && a.map() == b.map() && a.body() == b.body();
    case PreTerm::Kind::App: return a.fun() == b.fun() && a.arg() == b.arg();
    case PreTerm::Kind::Bot: return true;
  }
  return false;
}

std::string PreTerm::show() const {
  switch (kind()) {
    case Kind::Var: return name() + "^" + to_string(domain());
    case Kind::Abs: return "\\" + name() + "^{" + formula().show() + "," + to_string(map()) + "}. " + body().show();
    case Kind::App: return "(" + fun().show() + " " + arg().show() + ")";
    case Kind::Bot: return "bot";
  }
  return "";
}

IndexSet var_domain(const std::string& x, const PreTerm& s) {
  switch (s.kind()) {
    case PreTerm::Kind::Var: return s.name() == x ? s.domain() : IndexSet{};
    case PreTerm::Kind::Abs: return s.name() == x ? IndexSet{} : var_domain(x, s.body());
    case PreTerm::Kind::App: return var_domain(x, s.fun()).unite(var_domain(x, s.arg()));
    case PreTerm::Kind::Bot: return {};
  }
  return {};
}

namespace {

void collect_vars(const PreTerm& s, std::set<std::string>& out) {
  switch (s.kind()) {
    case PreTerm::Kind::Var: out.insert(s.name()); break;
    case PreTerm::Kind::Abs: collect_vars(s.body(), out); break;
    case PreTerm::Kind::App:
      collect_vars(s.fun(), out);
      collect_vars(s.arg(), out);
      break;
    case PreTerm::Kind::Bot: break;
  }
}

}  // namespace

bool is_term(const PreTerm& s) {
  switch (s.kind()) {
    case PreTerm::Kind::Abs: return is_term(s.body());
    case PreTerm::Kind::App: {
      if (!is_term(s.fun()) || !is_term(s.arg())) return false;
      std::set<std::string> xs;
      collect_vars(s, xs);
      for (const auto& x : xs)
        if (!var_domain(x, s.fun()).disjoint(var_domain(x, s.arg()))) return false;
      return true;
    }
    default: return true;
  }
}

Term erase(const PreTerm& s) {
  switch (s.kind()) {
    case PreTerm::Kind::Var: return Term::var(s.name());
    case PreTerm::Kind::Abs: {
      std::optional<SimpleType> ty;
      if (s.formula().flavor() == Flavor::Typed) ty = s.formula().underlying();
      return Term::lam(s.name(), erase(s.body()), ty);
    }
    case PreTerm::Kind::App: return Term::app(erase(s.fun()), erase(s.arg()));
    case PreTerm::Kind::Bot: return Term::bot();
  }
  throw Error("erase: unknown pre-term");
}

namespace {

struct Reject {
  Verdict v;
};

// Types a spine can take: formulas, or "flexible" when the head is Ω
// and every domain is empty, so any such formula fits.
struct FunType {
  bool flexible = false;
  std::vector<Formula> fs;
};

const char* kind_name(const PreTerm& s) {
  switch (s.kind()) {
    case PreTerm::Kind::Var: return "var";
    case PreTerm::Kind::Abs: return "abs";
    case PreTerm::Kind::App: return "app";
    case PreTerm::Kind::Bot: return "omega";
  }
  return "?";
}

// A context entry whose map is known only up to a set of admissible
// targets per index. Argument maps are not annotated; each index of an
// argument context only has to land above its image in the function.
struct Slot {
  std::string name;
  Formula formula;
  std::map<Index, std::set<Index>> allowed;
};
using Env = std::vector<Slot>;

struct ChurchChecker {
  std::size_t budget = 1u << 16;

  [[noreturn]] static void reject(const std::string& path, const PreTerm& s, const std::string& msg) {
    throw Reject{Verdict::fail(path, kind_name(s), msg)};
  }

  static Env from_context(const ChurchContext& ctx, const PreTerm& s) {
    Env env;
    for (const auto& [x, h] : ctx) {
      if (!(h.map.source() == h.formula.dom())) reject("root", s, "map of " + x + " is not total on its domain");
      Slot slot{x, h.formula, {}};
      for (const auto& [r, j] : h.map) slot.allowed[r] = {j};
      env.push_back(std::move(slot));
    }
    return env;
  }

  static Env wf(const Env& env, const IndexSet& dom, Flavor fl, const PreTerm& s, const std::string& path) {
    std::set<std::string> names;
    Env out = env;
    for (auto& slot : out) {
      if (!names.insert(slot.name).second) reject(path, s, "variable " + slot.name + " declared twice");
      if (slot.formula.flavor() != fl) reject(path, s, "variable " + slot.name + " mixes typed and untyped formulas");
      for (auto& [r, js] : slot.allowed) {
        std::set<Index> keep;
        for (Index j : js)
          if (dom.contains(j)) keep.insert(j);
        if (keep.empty()) reject(path, s, "map of " + slot.name + " leaves the conclusion domain");
        js = std::move(keep);
      }
    }
    return out;
  }

  static void omega(const Env& env, const Formula& b, const PreTerm& s, const std::string& path) {
    if (b.flavor() != Flavor::Untyped) reject(path, s, "omega is untyped only");
    if (!b.dom().empty()) reject(path, s, "omega at a nonempty domain");
    for (const auto& slot : env)
      if (!slot.formula.dom().empty()) reject(path, s, "map of " + slot.name + " is not empty");
  }

  // Relocations w·A_i of the variable's formula, w a bijection through the
  // admissible targets, whose codomain after k arrows is b.
  std::vector<Formula> var_rule(const Env& env, const PreTerm& s, std::size_t k, const Formula& b,
                                const std::string& path) {
    std::size_t i = 0;
    while (i < env.size() && env[i].name != s.name()) ++i;
    if (i == env.size()) reject(path, s, "variable " + s.name() + " not in context");
    const Slot& slot = env[i];
    if (!(s.domain() == slot.formula.dom())) reject(path, s, "annotation differs from the domain of " + s.name());
    for (std::size_t q = 0; q < env.size(); ++q)
      if (q != i && !env[q].formula.dom().empty()) reject(path, s, "variable " + env[q].name + " has a nonempty domain");
    const Formula* core = &slot.formula;
    for (std::size_t n = 0; n < k; ++n) {
      if (!core->is_arrow()) reject(path, s, "variable applied to too many arguments");
      core = &core->to();
    }
    if (core->dom().size() != b.dom().size()) reject(path, s, "conclusion is not the relocated hypothesis");
    std::vector<Index> rs(slot.formula.dom().begin(), slot.formula.dom().end());
    std::vector<Formula> out;
    std::set<Index> used;
    IndexMap w;
    std::size_t steps = 0;
    std::function<void(std::size_t)> go = [&](std::size_t n) {
      if (++steps > budget) reject(path, s, "relocation search exceeds its budget");
      if (n == rs.size()) {
        Formula f = relocate(w, slot.formula);
        const Formula* g = &f;
        for (std::size_t q = 0; q < k; ++q) g = &g->to();
        if (*g == b && std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
        return;
      }
      Index r = rs[n];
      for (Index j : slot.allowed.at(r)) {
        if (used.count(j) || !(core->fam(r) == b.fam(j))) continue;
        used.insert(j);
        w.set(r, j);
        go(n + 1);
        used.erase(j);
      }
      w = w.restrict(IndexSet(std::set<Index>(rs.begin(), rs.begin() + static_cast<std::ptrdiff_t>(n))));
    };
    go(0);
    if (out.empty()) reject(path, s, "conclusion is not the relocated hypothesis");
    return out;
  }

  static Env extend(const Env& env, const PreTerm& s, const std::string& path) {
    for (const auto& slot : env)
      if (slot.name == s.name()) reject(path, s, "bound variable " + slot.name + " shadows the context");
    Env out = env;
    Slot slot{s.name(), s.formula(), {}};
    for (const auto& [r, j] : s.map()) slot.allowed[r] = {j};
    out.push_back(std::move(slot));
    return out;
  }

  void check(const Env& env0, const PreTerm& s, const Formula& b, const std::string& path) {
    Env env = wf(env0, b.dom(), b.flavor(), s, path);
    switch (s.kind()) {
      case PreTerm::Kind::Bot: omega(env, b, s, path); return;
      case PreTerm::Kind::Var: var_rule(env, s, 0, b, path); return;
      case PreTerm::Kind::Abs:
        if (!b.is_arrow()) reject(path, s, "abstraction typed by a non-arrow");
        if (!(b.from() == s.formula()) || !(b.map() == s.map())) reject(path, s, "annotation differs from the arrow source");
        if (!(s.map().source() == s.formula().dom())) reject(path, s, "map of " + s.name() + " is not total on its domain");
        check(extend(env, s, path), s.body(), b.to(), path + ".0");
        return;
      case PreTerm::Kind::App: spine(env, s, 0, b, path); return;
    }
  }

  // Types of s whose codomain after k arrows is b.
  FunType spine(const Env& env0, const PreTerm& s, std::size_t k, const Formula& b, const std::string& path) {
    Env env = wf(env0, b.dom(), b.flavor(), s, path);
    switch (s.kind()) {
      case PreTerm::Kind::Var: return {false, var_rule(env, s, k, b, path)};
      case PreTerm::Kind::Bot: omega(env, b, s, path); return {true, {}};
      case PreTerm::Kind::Abs: {
        if (k == 0) {
          check(env, s, b, path);
          return {false, {b}};
        }
        if (!(s.map().source() == s.formula().dom())) reject(path, s, "map of " + s.name() + " is not total on its domain");
        FunType g = spine(extend(env, s, path), s.body(), k - 1, b, path + ".0");
        if (g.flexible) return g;
        FunType out;
        for (const Formula& f : g.fs) {
          try {
            out.fs.push_back(Formula::arrow(s.formula(), s.map(), f));
          } catch (const Error&) {
          }
        }
        if (out.fs.empty()) reject(path, s, "annotation map leaves the body domain");
        return out;
      }
      case PreTerm::Kind::App: {
        Env c1, c2;
        for (const auto& slot : env) {
          IndexSet l = var_domain(slot.name, s.fun());
          IndexSet r = var_domain(slot.name, s.arg());
          if (!l.disjoint(r)) reject(path, s, "domains of " + slot.name + " overlap");
          if (!(l.unite(r) == slot.formula.dom())) reject(path, s, "domains of " + slot.name + " do not cover its formula");
          Slot left{slot.name, restrict(slot.formula, l), {}};
          Slot right{slot.name, restrict(slot.formula, r), {}};
          for (const auto& [i, js] : slot.allowed) (l.contains(i) ? left : right).allowed[i] = js;
          c1.push_back(std::move(left));
          c2.push_back(std::move(right));
        }
        FunType f = spine(c1, s.fun(), k + 1, b, path + ".0");
        if (f.flexible) {
          synth(c2, s.arg(), path + ".1");
          return f;
        }
        FunType out;
        std::optional<Reject> first;
        for (const Formula& ft : f.fs) {
          const Formula& a = ft.from();
          const IndexMap& u = ft.map();
          Env c = c2;
          try {
            for (auto& slot : c)
              for (auto& [i, js] : slot.allowed) {
                std::set<Index> above;
                for (const auto& [l, j] : u)
                  if (js.count(j)) above.insert(l);
                if (above.empty()) reject(path, s, "no argument index above the image of " + slot.name);
                js = std::move(above);
              }
            check(c, s.arg(), a, path + ".1");
            if (std::find(out.fs.begin(), out.fs.end(), ft.to()) == out.fs.end()) out.fs.push_back(ft.to());
          } catch (const Reject& r) {
            if (!first) first = r;
          } catch (const Error& e) {
            if (!first) first = Reject{Verdict::fail(path + ".1", kind_name(s.arg()), e.what())};
          }
        }
        if (out.fs.empty()) throw *first;
        return out;
      }
    }
    reject(path, s, "unknown pre-term");
  }

  // Typing when every domain is empty.
  FunType synth(const Env& env, const PreTerm& s, const std::string& path) {
    for (const auto& slot : env)
      if (!slot.formula.dom().empty()) reject(path, s, "argument of omega uses " + slot.name);
    switch (s.kind()) {
      case PreTerm::Kind::Var: {
        std::size_t i = 0;
        while (i < env.size() && env[i].name != s.name()) ++i;
        if (i == env.size()) reject(path, s, "variable " + s.name() + " not in context");
        if (!s.domain().empty()) reject(path, s, "annotation differs from the domain of " + s.name());
        return {false, {env[i].formula}};
      }
      case PreTerm::Kind::Bot:
        for (const auto& slot : env)
          if (slot.formula.flavor() != Flavor::Untyped) reject(path, s, "omega is untyped only");
        return {true, {}};
      case PreTerm::Kind::Abs: {
        if (!s.formula().dom().empty()) reject(path, s, "argument of omega binds a nonempty domain");
        FunType g = synth(extend(env, s, path), s.body(), path + ".0");
        if (g.flexible) return g;
        FunType out;
        for (const Formula& f : g.fs) out.fs.push_back(Formula::arrow(s.formula(), s.map(), f));
        return out;
      }
      case PreTerm::Kind::App: {
        FunType f = synth(env, s.fun(), path + ".0");
        if (f.flexible) {
          synth(env, s.arg(), path + ".1");
          return f;
        }
        FunType out;
        for (const Formula& ft : f.fs) {
          if (!ft.is_arrow()) reject(path, s, "applied term is not an arrow");
          check(env, s.arg(), ft.from(), path + ".1");
          out.fs.push_back(ft.to());
        }
        return out;
      }
    }
    reject(path, s, "unknown pre-term");
  }
};

PreTerm church_at(const Proof& p, std::vector<std::string>& vars) {
  switch (p.rule()) {
    case ProofRule::Axiom: {
      std::size_t i = p.axiom_index();
      return PreTerm::var(vars.at(i), p.hyps()[i].formula.dom());
    }
    case ProofRule::StarAxiom: return PreTerm::bot();
    case ProofRule::Elim: return PreTerm::app(church_at(p.premises()[0], vars), church_at(p.premises()[1], vars));
    case ProofRule::Intro: {
      std::set<std::string> avoid(vars.begin(), vars.end());
      std::string y = fresh_name("y", avoid);
      vars.push_back(y);
      PreTerm body = church_at(p.premises()[0], vars);
      vars.pop_back();
      return PreTerm::abs(y, p.conclusion().from(), p.conclusion().map(), body);
    }
  }
  throw Error("to_church: unknown rule");
}

}  // namespace

Verdict check_church(const ChurchContext& ctx, const PreTerm& s, const Formula& b) {
  if (!is_term(s)) return Verdict::fail("root", kind_name(s), "pre-term violates the domain condition");
  try {
    ChurchChecker c;
    c.check(ChurchChecker::from_context(ctx, s), s, b, "root");
  } catch (const Reject& r) {
    return r.v;
  } catch (const Error& e) {
    return Verdict::fail("root", kind_name(s), e.what());
  }
  return Verdict::pass();
}

PreTerm to_church(const Proof& p, const std::vector<std::string>& vars) {
  if (vars.size() != p.hyps().size()) throw Error("to_church: variable count differs from the hypothesis count");
  std::vector<std::string> v = vars;
  return church_at(p, v);
}

ChurchContext church_context(const Proof& p, const std::vector<std::string>& vars) {
  if (vars.size() != p.hyps().size()) throw Error("church_context: variable count differs from the hypothesis count");
  ChurchContext ctx;
  for (std::size_t i = 0; i < vars.size(); ++i) ctx.emplace_back(vars[i], p.hyps()[i]);
  return ctx;
}

}  // namespace ilj
