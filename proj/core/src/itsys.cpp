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

#include "ilj/itsys.hpp"

#include <functional>
#include <map>
#include <set>

namespace ilj {

std::vector<VarDecl> TypingJudgment::vars() const {
  std::vector<VarDecl> out;
  for (const auto& e : context) out.push_back({e.var, e.type});
  return out;
}

struct TypingDeriv::Node {
  TypingRule rule;
  TypingJudgment judgment;
  std::vector<TypingDeriv> premises;
};

TypingDeriv::TypingDeriv(TypingRule rule, TypingJudgment judgment, std::vector<TypingDeriv> premises)
    : node_(std::make_shared<Node>(Node{rule, std::move(judgment), std::move(premises)})) {}

TypingRule TypingDeriv::rule() const { return node_->rule; }
const TypingJudgment& TypingDeriv::judgment() const { return node_->judgment; }
const std::vector<TypingDeriv>& TypingDeriv::premises() const { return node_->premises; }

bool operator==(const TypingDeriv& a, const TypingDeriv& b) {
  if (a.node_ == b.node_) return true;
  return a.rule() == b.rule() && a.judgment() == b.judgment() && a.premises() == b.premises();
}

const char* rule_name(TypingRule r) {
  switch (r) {
    case TypingRule::Var: return "var";
    case TypingRule::Abs: return "abs";
    case TypingRule::App: return "app";
  }
  return "?";
}

namespace {

struct Checker {
  bool typed;
  const Carriers* carriers;

  Verdict fail(const std::string& path, const TypingDeriv& d, const std::string& msg) const {
    return Verdict::fail(path, rule_name(d.rule()), msg);
  }

  Verdict judgment_ok(const std::string& path, const TypingDeriv& d) const {
    const auto& j = d.judgment();
    std::set<std::string> names;
    for (const auto& e : j.context) {
      if (!names.insert(e.var).second) return fail(path, d, "context variable " + e.var + " repeated");
      if (typed != e.type.has_value())
        return fail(path, d, typed ? "context variable " + e.var + " lacks a type" : "typed entry in an untyped judgment");
      for (const auto& [p, c] : e.mset) {
        bool in = typed ? conforms(p, *e.type, carriers) : is_dinf_point(p);
        if (!in) return fail(path, d, "context point " + p.show() + " outside the interpretation of " + e.var);
      }
    }
    if (typed != j.type.has_value()) return fail(path, d, typed ? "judgment lacks a type" : "typed judgment in the untyped system");
    if (typed ? !conforms(j.point, *j.type, carriers) : !is_dinf_point(j.point))
      return fail(path, d, "point " + j.point.show() + " outside the interpretation of the subject type");
    if (!is_locally_closed(j.subject)) return fail(path, d, "subject has dangling bound variables");
    for (const auto& x : free_vars(j.subject))
      if (!names.count(x)) return fail(path, d, "free variable " + x + " missing from the context");
    return Verdict::pass();
  }

  Verdict check(const TypingDeriv& d, const std::string& path) const {
    const auto& j = d.judgment();
    if (j.subject.is_bot()) return fail(path, d, "bottom is untypable");
    if (auto v = judgment_ok(path, d); !v) return v;
    const auto& ps = d.premises();
    for (std::size_t l = 0; l < ps.size(); ++l)
      if (auto v = judgment_ok(path + "." + std::to_string(l), ps[l]); !v) return v;
    switch (d.rule()) {
      case TypingRule::Var: {
        if (!ps.empty()) return fail(path, d, "var rule has premises");
        if (!j.subject.is_free()) return fail(path, d, "subject is not a variable");
        bool found = false;
        for (const auto& e : j.context) {
          if (e.var == j.subject.name()) {
            found = true;
            if (!(e.mset == Multiset<Point>{j.point}))
              return fail(path, d, "multiset of " + e.var + " is not [" + j.point.show() + "]");
            if (typed && !(*e.type == *j.type)) return fail(path, d, "type of " + e.var + " differs from the subject type");
          } else if (!e.mset.empty()) {
            return fail(path, d, "multiset of " + e.var + " is not empty");
          }
        }
        if (!found) return fail(path, d, "variable not in context");
        return Verdict::pass();
      }
      case TypingRule::Abs: {
        if (ps.size() != 1) return fail(path, d, "abs rule needs one premise");
        if (!j.subject.is_lam()) return fail(path, d, "subject is not an abstraction");
        const auto& pj = ps[0].judgment();
        if (pj.context.size() != j.context.size() + 1) return fail(path, d, "premise context must add one variable");
        for (std::size_t i = 0; i < j.context.size(); ++i)
          if (!(pj.context[i] == j.context[i])) return fail(path, d, "premise context differs at " + j.context[i].var);
        const auto& y = pj.context.back();
        if (free_vars(j.subject).count(y.var)) return fail(path, d, "bound variable " + y.var + " is not fresh");
        if (!(pj.subject == open_var(j.subject, y.var))) return fail(path, d, "premise subject is not the body");
        if (!(j.point == Point::pair(y.mset, pj.point)))
          return fail(path, d, "conclusion point is not (m, b) for the premise");
        if (typed) {
          if (!j.subject.binder_type() || !(*j.subject.binder_type() == *y.type))
            return fail(path, d, "binder type differs from the premise variable type");
          if (!(*j.type == SimpleType::arrow(*y.type, *pj.type))) return fail(path, d, "conclusion type is not σ → τ");
        }
        return check(ps[0], path + ".0");
      }
      case TypingRule::App: {
        if (ps.empty()) return fail(path, d, "app rule needs a function premise");
        if (!j.subject.is_app()) return fail(path, d, "subject is not an application");
        const auto& fj = ps[0].judgment();
        if (!(fj.subject == j.subject.fun())) return fail(path, d, "function premise has the wrong subject");
        const Point& f = fj.point;
        if (!f.is_function() || (typed && !f.is_pair())) return fail(path, d, "function point is not a pair");
        if (typed && (fj.type->is_atom() || !(fj.type->to() == *j.type))) return fail(path, d, "function type mismatch");
        Multiset<Point> args;
        std::vector<Multiset<Point>> sum(j.context.size());
        for (std::size_t l = 0; l < ps.size(); ++l) {
          const auto& pj = ps[l].judgment();
          if (pj.context.size() != j.context.size()) return fail(path, d, "premise " + std::to_string(l) + " has another context spine");
          for (std::size_t i = 0; i < j.context.size(); ++i) {
            if (pj.context[i].var != j.context[i].var || pj.context[i].type != j.context[i].type)
              return fail(path, d, "premise " + std::to_string(l) + " has another context spine");
            sum[i] += pj.context[i].mset;
          }
          if (l > 0) {
            if (!(pj.subject == j.subject.arg())) return fail(path, d, "argument premise " + std::to_string(l) + " has the wrong subject");
            args.add(pj.point);
            if (typed && !(*pj.type == fj.type->from())) return fail(path, d, "argument type mismatch");
          }
        }
        if (!(f.domain() == args)) return fail(path, d, "argument points differ from the function multiset");
        if (!(f.codomain() == j.point)) return fail(path, d, "conclusion point differs from the function result");
        for (std::size_t i = 0; i < j.context.size(); ++i)
          if (!(sum[i] == j.context[i].mset))
            return fail(path, d, "context of " + j.context[i].var + " is not the sum of the premise contexts");
        for (std::size_t l = 0; l < ps.size(); ++l)
          if (auto v = check(ps[l], path + "." + std::to_string(l)); !v) return v;
        return Verdict::pass();
      }
    }
    return fail(path, d, "unknown rule");
  }
};

}  // namespace

Verdict check_typed(const TypingDeriv& d, const Carriers* carriers) {
  return Checker{true, carriers}.check(d, "root");
}

Verdict check_untyped(const TypingDeriv& d) { return Checker{false, nullptr}.check(d, "root"); }

TypingDeriv rename_var(const TypingDeriv& d, const std::string& from, const std::string& to) {
  TypingJudgment j = d.judgment();
  for (auto& e : j.context)
    if (e.var == from) e.var = to;
  j.subject = rename_free(j.subject, from, to);
  std::vector<TypingDeriv> ps;
  for (const auto& p : d.premises()) ps.push_back(rename_var(p, from, to));
  return TypingDeriv(d.rule(), std::move(j), std::move(ps));
}

TypingDeriv make_var(const std::vector<VarDecl>& vars, std::size_t i, const Point& a) {
  if (i >= vars.size()) throw Error("make_var: position out of range");
  TypingJudgment j{{}, Term::var(vars[i].name), a, vars[i].type};
  for (std::size_t k = 0; k < vars.size(); ++k)
    j.context.push_back({vars[k].name, k == i ? Multiset<Point>{a} : Multiset<Point>{}, vars[k].type});
  return TypingDeriv(TypingRule::Var, std::move(j));
}

TypingDeriv make_abs(const TypingDeriv& premise) {
  const auto& pj = premise.judgment();
  if (pj.context.empty()) throw Error("make_abs: empty premise context");
  const auto& y = pj.context.back();
  TypingJudgment j{{pj.context.begin(), pj.context.end() - 1}, Term::lam(y.var, pj.subject, y.type),
                   Point::pair(y.mset, pj.point), std::nullopt};
  if (y.type) j.type = SimpleType::arrow(*y.type, *pj.type);
  return TypingDeriv(TypingRule::Abs, std::move(j), {premise});
}

TypingDeriv make_app(const TypingDeriv& fun, const Term& arg, const std::vector<TypingDeriv>& args) {
  const auto& fj = fun.judgment();
  TypingJudgment j{fj.context, Term::app(fj.subject, arg), fj.point.codomain(), std::nullopt};
  if (fj.type) j.type = fj.type->to();
  for (const auto& a : args)
    for (std::size_t i = 0; i < j.context.size(); ++i) j.context[i].mset += a.judgment().context.at(i).mset;
  std::vector<TypingDeriv> ps{fun};
  ps.insert(ps.end(), args.begin(), args.end());
  return TypingDeriv(TypingRule::App, std::move(j), std::move(ps));
}

namespace {

using Ctx = std::vector<Multiset<Point>>;

struct Entry {
  Ctx ctx;
  Point result;
  TypingDeriv deriv;
};

using Table = std::map<std::pair<Ctx, Point>, Entry>;

struct Searcher {
  const SearchBounds& bounds;
  const Carriers* carriers;
  bool typed;
  std::map<std::pair<std::optional<SimpleType>, std::size_t>, std::vector<Point>> inner_cands;

  struct Slot {
    VarDecl decl;
    std::size_t card;
    std::vector<Point> cands;
    std::size_t max_weight;
  };

  std::vector<Point> candidates(const std::optional<SimpleType>& t, std::size_t weight) const {
    if (!typed) return enumerate_dinf(weight);
    if (!carriers) throw Error("typed search needs atom carriers");
    return enumerate_points(*t, weight, *carriers);
  }

  const std::vector<Point>& inner(const std::optional<SimpleType>& t, std::size_t weight) {
    auto key = std::make_pair(t, weight);
    auto it = inner_cands.find(key);
    if (it == inner_cands.end()) it = inner_cands.emplace(key, candidates(t, weight)).first;
    return it->second;
  }

  static std::size_t max_weight(const std::vector<Point>& ps) {
    std::size_t w = 0;
    for (const auto& p : ps) w = std::max(w, p.weight());
    return w;
  }

  // Weight available to the arguments of an application spine: they sit
  // inside the point of a variable head.
  std::size_t arg_budget(const Term& m, const std::vector<Slot>& scope) const {
    const Term* h = &m;
    while (h->is_app()) h = &h->fun();
    if (h->is_free())
      for (const auto& s : scope)
        if (s.decl.name == h->name()) return s.max_weight == 0 ? 0 : s.max_weight - 1;
    return bounds.inner_weight;
  }

  static std::vector<VarDecl> decls(const std::vector<Slot>& scope) {
    std::vector<VarDecl> out;
    for (const auto& s : scope) out.push_back(s.decl);
    return out;
  }

  // pending holds the result points of the arguments waiting for m,
  // innermost last; a λ in head position takes its binder candidates
  // from them instead of the inner bound. budget bounds the weight of
  // the point left once every pending argument is consumed.
  Table run(const Term& m, std::vector<Slot>& scope, std::vector<std::vector<Point>> pending, std::size_t budget) {
    Table out;
    switch (m.kind()) {
      case Term::Kind::Free: {
        std::size_t i = 0;
        while (i < scope.size() && scope[i].decl.name != m.name()) ++i;
        if (i == scope.size()) throw Error("search: free variable " + m.name() + " not in the spine");
        if (scope[i].card == 0) return out;
        auto vars = decls(scope);
        for (const auto& a : scope[i].cands) {
          const Point* r = &a;
          for (std::size_t k = 0; k < pending.size() && r->is_function(); ++k) r = &r->codomain();
          if (r->weight() > budget) continue;
          Ctx ctx(scope.size());
          ctx[i].add(a);
          out.emplace(std::make_pair(ctx, a), Entry{ctx, a, make_var(vars, i, a)});
        }
        return out;
      }
      case Term::Kind::Lam: {
        std::set<std::string> avoid = free_vars(m);
        for (const auto& s : scope) avoid.insert(s.decl.name);
        std::string y = fresh_name(m.name().empty() ? "y" : m.name(), avoid);
        if (typed && !m.binder_type()) throw Error("search: untyped binder in a typed term");
        bool applied = !pending.empty();
        if (applied) {
          std::size_t w = max_weight(pending.back());
          scope.push_back({{y, m.binder_type()}, bounds.inner_card, std::move(pending.back()), w});
          pending.pop_back();
        } else {
          std::size_t w = std::min(budget == 0 ? 0 : budget - 1, bounds.inner_weight);
          scope.push_back({{y, m.binder_type()}, bounds.inner_card, inner(m.binder_type(), w), w});
        }
        Table body = run(open_var(m, y), scope, std::move(pending), budget);
        scope.pop_back();
        for (auto& [key, e] : body) {
          Point p = Point::pair(e.ctx.back(), e.result);
          if (!applied && p.weight() > budget) continue;
          Ctx ctx(e.ctx.begin(), e.ctx.end() - 1);
          out.emplace(std::make_pair(ctx, p), Entry{ctx, p, make_abs(e.deriv)});
        }
        return out;
      }
      case Term::Kind::App: {
        bool applied = !pending.empty();
        Table arg = run(m.arg(), scope, {}, arg_budget(m, scope));
        std::set<Point> results;
        for (const auto& [key, e] : arg) results.insert(e.result);
        pending.emplace_back(results.begin(), results.end());
        Table fun = run(m.fun(), scope, std::move(pending), budget);
        if (fun.empty()) return out;
        std::map<Point, std::vector<const Entry*>> by_result;
        for (const auto& [key, e] : arg) by_result[e.result].push_back(&e);
        for (const auto& [key, fe] : fun) {
          const Point& f = fe.result;
          if (!f.is_function() || (typed && !f.is_pair())) continue;
          const Point& b = f.codomain();
          if (!applied && b.weight() > budget) continue;
          // One group per distinct argument point: a multiset of entries.
          std::vector<std::pair<const std::vector<const Entry*>*, std::size_t>> groups;
          bool feasible = true;
          for (const auto& [a, c] : f.domain()) {
            auto it = by_result.find(a);
            if (it == by_result.end()) {
              feasible = false;
              break;
            }
            groups.emplace_back(&it->second, c);
          }
          if (!feasible) continue;
          // Argument choices merged by accumulated context, one witness each.
          std::map<Ctx, std::vector<const Entry*>> states;
          bool fits = true;
          for (std::size_t i = 0; i < fe.ctx.size(); ++i)
            if (fe.ctx[i].card() > scope[i].card) fits = false;
          if (!fits) continue;
          states.emplace(fe.ctx, std::vector<const Entry*>{});
          for (const auto& [pool, count] : groups) {
            for (std::size_t c = 0; c < count; ++c) {
              std::map<Ctx, std::vector<const Entry*>> next;
              for (const auto& [acc, chosen] : states) {
                for (const Entry* e : *pool) {
                  Ctx sum = acc;
                  bool ok = true;
                  for (std::size_t i = 0; i < sum.size() && ok; ++i) {
                    sum[i] += e->ctx[i];
                    ok = sum[i].card() <= scope[i].card;
                  }
                  if (!ok || next.count(sum)) continue;
                  auto picks = chosen;
                  picks.push_back(e);
                  next.emplace(std::move(sum), std::move(picks));
                }
              }
              states = std::move(next);
            }
          }
          for (const auto& [acc, chosen] : states) {
            auto keyc = std::make_pair(acc, b);
            if (out.count(keyc)) continue;
            std::vector<TypingDeriv> args;
            for (const auto* e : chosen) args.push_back(e->deriv);
            out.emplace(keyc, Entry{acc, b, make_app(fe.deriv, m.arg(), args)});
          }
        }
        return out;
      }
      default: return out;
    }
  }
};

}  // namespace

std::vector<SearchResult> search(const Term& m, const std::vector<VarDecl>& vars, const SearchBounds& bounds,
                                 const Carriers* carriers) {
  bool typed = !vars.empty() ? vars.front().type.has_value() : m.is_lam() && m.binder_type().has_value();
  for (const auto& v : vars)
    if (v.type.has_value() != typed) throw Error("search: mixed typed and untyped variables");
  Searcher s{bounds, carriers, typed, {}};
  std::vector<Searcher::Slot> scope;
  for (const auto& v : vars) scope.push_back({v, bounds.card, s.candidates(v.type, bounds.weight), bounds.weight});
  Table t = s.run(m, scope, {}, bounds.weight);
  std::optional<SimpleType> ty;
  if (typed) {
    std::map<std::string, SimpleType> env;
    for (const auto& v : vars) env.emplace(v.name, *v.type);
    ty = infer_type(m, env);
    if (!ty) throw Error("search: subject is ill typed");
  }
  std::vector<SearchResult> out;
  for (auto& [key, e] : t) {
    if (e.result.weight() > bounds.weight) continue;
    out.push_back({e.deriv.judgment(), e.deriv});
  }
  return out;
}

}  // namespace ilj
