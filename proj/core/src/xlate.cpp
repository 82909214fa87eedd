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

#include "ilj/xlate.hpp"

#include <algorithm>
#include <set>

namespace ilj {

namespace {

bool family_typed(const FamilyTyping& f) {
  if (!f.vars.empty()) return f.vars.front().type.has_value();
  if (!f.derivations.empty()) return f.derivations.begin()->second.judgment().type.has_value();
  return false;
}

std::vector<std::string> names_of(const std::vector<VarDecl>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.name);
  return out;
}

std::map<std::string, SimpleType> env_of(const std::vector<VarDecl>& vs) {
  std::map<std::string, SimpleType> env;
  for (const auto& v : vs)
    if (v.type) env.emplace(v.name, *v.type);
  return env;
}

// Soundness at one index j.
TypingDeriv sound_at(const Proof& p, const std::vector<VarDecl>& vars, Index j) {
  switch (p.rule()) {
    case ProofRule::Axiom: return make_var(vars, p.axiom_index(), p.conclusion().fam(j));
    case ProofRule::StarAxiom: throw Error("soundness: the bottom axiom has an empty domain");
    case ProofRule::Intro: {
      std::set<std::string> avoid;
      for (const auto& v : vars) avoid.insert(v.name);
      std::string y = fresh_name("y", avoid);
      const Formula& a = p.conclusion().from();
      std::vector<VarDecl> more = vars;
      more.push_back(VarDecl{y, a.flavor() == Flavor::Typed ? std::optional<SimpleType>(a.underlying()) : std::nullopt});
      return make_abs(sound_at(p.premises()[0], more, j));
    }
    case ProofRule::Elim: {
      const Proof& f = p.premises()[0];
      const Proof& g = p.premises()[1];
      TypingDeriv fd = sound_at(f, vars, j);
      std::vector<TypingDeriv> args;
      for (Index k : f.conclusion().map().preimage(j)) args.push_back(sound_at(g, vars, k));
      TypingDeriv d = make_app(fd, extract_term(g, names_of(vars)), args);
      for (std::size_t i = 0; i < p.hyps().size(); ++i) {
        Multiset<Point> want = hyp_family(p.hyps()[i], j);
        if (!(d.judgment().context.at(i).mset == want))
          throw Error("soundness: multiset identity fails for hypothesis " + std::to_string(i + 1) + " at index " +
                      std::to_string(j));
      }
      return d;
    }
  }
  throw Error("soundness: unknown rule");
}

void collect_names(const TypingDeriv& d, std::set<std::string>& out) {
  for (const auto& e : d.judgment().context) out.insert(e.var);
  for (const auto& p : d.premises()) collect_names(p, out);
}

// Greedily picks indices of `pool` carrying the points of `m`.
IndexSet take_matching(std::vector<Index>& pool, const Formula& a, const Multiset<Point>& m) {
  IndexSet out;
  for (const Point& p : m.elements()) {
    auto it = std::find_if(pool.begin(), pool.end(), [&](Index r) { return a.fam(r) == p; });
    if (it == pool.end()) throw Error("completeness: multiset decomposition mismatch");
    out.insert(*it);
    pool.erase(it);
  }
  return out;
}

struct Completer {
  IndexAllocator& alloc;
  bool typed;

  Proof run(const Term& m, const std::vector<VarDecl>& vars, const std::vector<Hypothesis>& hyps, const Formula& b,
            const std::map<Index, TypingDeriv>& ds) {
    const IndexSet& jset = b.dom();
    if (!typed && jset.empty()) {
      std::vector<Formula> fs;
      for (const auto& h : hyps) fs.push_back(h.formula);
      return empty_proof(b, fs);
    }
    switch (m.kind()) {
      case Term::Kind::Free: {
        std::size_t i = 0;
        while (i < vars.size() && vars[i].name != m.name()) ++i;
        if (i == vars.size()) throw Error("completeness: free variable " + m.name() + " not in the spine");
        for (std::size_t q = 0; q < hyps.size(); ++q)
          if (q != i && !hyps[q].formula.dom().empty())
            throw Error("completeness: unused hypothesis " + std::to_string(q + 1) + " has a nonempty domain");
        Formula moved = relocate(hyps[i].map, hyps[i].formula);
        return subst_into_single(sim_conversion(moved, b), make_axiom(hyps, i));
      }
      case Term::Kind::Lam: {
        if (!b.is_arrow()) throw Error("completeness: scaffold conclusion too shallow for an abstraction");
        std::set<std::string> avoid = free_vars(m);
        for (const auto& v : vars) avoid.insert(v.name);
        for (const auto& [j, d] : ds) collect_names(d, avoid);
        std::string y = fresh_name(m.name().empty() ? "y" : m.name(), avoid);
        std::map<Index, TypingDeriv> inner;
        for (const auto& [j, d] : ds) {
          if (d.rule() != TypingRule::Abs) throw Error("completeness: abstraction typed by a non-abs rule");
          const TypingDeriv& q = d.premises().at(0);
          inner.emplace(j, rename_var(q, q.judgment().context.back().var, y));
        }
        std::vector<VarDecl> more = vars;
        more.push_back(VarDecl{y, m.binder_type()});
        std::vector<Hypothesis> hs = hyps;
        hs.push_back(Hypothesis{b.from(), b.map()});
        return make_intro(run(open_var(m, y), more, hs, b.to(), inner));
      }
      case Term::Kind::App: {
        IndexMap u;
        Family argfam;
        std::map<Index, TypingDeriv> fun_ds, arg_ds;
        // Per j: the argument indices L_j in premise order.
        std::map<Index, std::vector<Index>> ls;
        for (const auto& [j, d] : ds) {
          if (d.rule() != TypingRule::App) throw Error("completeness: application typed by a non-app rule");
          fun_ds.emplace(j, d.premises().at(0));
          for (std::size_t t = 1; t < d.premises().size(); ++t) {
            Index l = alloc.fresh();
            u.set(l, j);
            argfam.emplace(l, d.premises()[t].judgment().point);
            arg_ds.emplace(l, d.premises()[t]);
            ls[j].push_back(l);
          }
        }
        IndexSet lset = u.source();
        Formula a = typed ? represent(arg_type(m, vars), lset, argfam, alloc)
                          : represent_dinf(lset, argfam, alloc, required_arrows(m.arg()));
        std::vector<Hypothesis> mu_h, rho_h;
        for (std::size_t i = 0; i < hyps.size(); ++i) {
          const Hypothesis& h = hyps[i];
          IndexSet r0, r1;
          IndexMap v;
          for (const auto& [j, d] : ds) {
            auto pre = h.map.preimage(j);
            std::vector<Index> pool(pre.begin(), pre.end());
            for (Index r : take_matching(pool, h.formula, d.premises()[0].judgment().context.at(i).mset)) r0.insert(r);
            const auto& lj = ls[j];
            for (std::size_t t = 0; t < lj.size(); ++t)
              for (Index r : take_matching(pool, h.formula, d.premises()[t + 1].judgment().context.at(i).mset)) {
                r1.insert(r);
                v.set(r, lj[t]);
              }
            if (!pool.empty()) throw Error("completeness: multiset decomposition mismatch");
          }
          mu_h.push_back(Hypothesis{restrict(h.formula, r0), h.map.restrict(r0)});
          rho_h.push_back(Hypothesis{restrict(h.formula, r1), v});
        }
        Proof mu = run(m.fun(), vars, mu_h, Formula::arrow(a, u, b), fun_ds);
        Proof rho = run(m.arg(), vars, rho_h, a, arg_ds);
        return make_elim(hyps, mu, rho);
      }
      case Term::Kind::Bot: throw Error("completeness: bottom typed at a nonempty domain");
      case Term::Kind::Bound: throw Error("completeness: dangling bound variable");
    }
    throw Error("completeness: unknown term");
  }

  SimpleType arg_type(const Term& m, const std::vector<VarDecl>& vars) const {
    auto t = infer_type(m.arg(), env_of(vars));
    if (!t) throw Error("completeness: argument is ill typed");
    return *t;
  }
};

}  // namespace

Verdict check_family(const FamilyTyping& f, const Carriers* carriers) {
  bool typed = family_typed(f);
  IndexSet keys;
  for (const auto& [j, d] : f.derivations) {
    std::string path = "family." + std::to_string(j);
    keys.insert(j);
    const auto& jd = d.judgment();
    if (!(jd.subject == f.subject)) return Verdict::fail(path, rule_name(d.rule()), "subject differs from the family subject");
    if (!(jd.vars() == f.vars)) return Verdict::fail(path, rule_name(d.rule()), "context spine differs from the family spine");
    Verdict v = typed ? check_typed(d, carriers) : check_untyped(d);
    if (!v) {
      v.path = path + v.path.substr(4);
      return v;
    }
  }
  if (!(keys == f.indices)) return Verdict::fail("family", "family", "derivation indices differ from the index set");
  return Verdict::pass();
}

FamilyTyping soundness(const Proof& pi, const std::vector<std::string>& vars) {
  Verdict v = check_proof(pi);
  if (!v) throw Error("soundness: invalid proof at " + v.path + ": " + v.message);
  if (vars.size() != pi.hyps().size()) throw Error("soundness: variable count differs from the hypothesis count");
  std::vector<VarDecl> decls;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const Formula& a = pi.hyps()[i].formula;
    decls.push_back(VarDecl{vars[i], a.flavor() == Flavor::Typed ? std::optional<SimpleType>(a.underlying()) : std::nullopt});
  }
  FamilyTyping out{pi.conclusion().dom(), extract_term(pi, vars), decls, {}};
  for (Index j : out.indices) {
    TypingDeriv d = sound_at(pi, decls, j);
    const auto& jd = d.judgment();
    if (!(jd.point == pi.conclusion().fam(j))) throw Error("soundness: derived point differs from the family");
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (!(jd.context[i].mset == hyp_family(pi.hyps()[i], j)))
        throw Error("soundness: derived context differs from the hypothesis family");
    out.derivations.emplace(j, std::move(d));
  }
  return out;
}

void check_scaffold(const FamilyTyping& f, const Scaffold& s) {
  const Formula& b = s.conclusion;
  bool typed = b.flavor() == Flavor::Typed;
  if (!(b.dom() == f.indices)) throw Error("scaffold: conclusion domain differs from the index set");
  if (s.hyps.size() != f.vars.size()) throw Error("scaffold: hypothesis count differs from the variable count");
  for (std::size_t i = 0; i < s.hyps.size(); ++i) {
    const auto& h = s.hyps[i];
    if (h.formula.flavor() != b.flavor()) throw Error("scaffold: mixed typed and untyped formulas");
    if (!(h.map.source() == h.formula.dom()) || !h.map.image().subset_of(b.dom()))
      throw Error("scaffold: hypothesis " + std::to_string(i + 1) + " map does not go into the conclusion domain");
    if (typed != f.vars[i].type.has_value()) throw Error("scaffold: flavor differs from the variable spine");
    if (typed && !(h.formula.underlying() == *f.vars[i].type))
      throw Error("scaffold: hypothesis " + std::to_string(i + 1) + " has the wrong underlying type");
  }
  if (typed) {
    auto t = infer_type(f.subject, env_of(f.vars));
    if (!t || !(*t == b.underlying())) throw Error("scaffold: conclusion type differs from the subject type");
  }
  for (Index j : f.indices) {
    auto it = f.derivations.find(j);
    if (it == f.derivations.end()) throw Error("scaffold: missing derivation at " + std::to_string(j));
    const auto& jd = it->second.judgment();
    if (!(b.fam(j) == jd.point)) throw Error("scaffold: conclusion family differs at " + std::to_string(j));
    for (std::size_t i = 0; i < s.hyps.size(); ++i)
      if (!(hyp_family(s.hyps[i], j) == jd.context.at(i).mset))
        throw Error("scaffold: hypothesis " + std::to_string(i + 1) + " family differs at " + std::to_string(j));
  }
}

Proof completeness(const FamilyTyping& f, const Scaffold& s, IndexAllocator& alloc) {
  check_scaffold(f, s);
  alloc.avoid(s.conclusion.dom());
  for (const auto& h : s.hyps) alloc.avoid(h.formula.dom());
  Completer c{alloc, s.conclusion.flavor() == Flavor::Typed};
  return c.run(f.subject, f.vars, s.hyps, s.conclusion, f.derivations);
}

std::size_t required_arrows(const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Lam: return 1 + required_arrows(m.body());
    case Term::Kind::App: {
      std::size_t n = required_arrows(m.fun());
      return n == 0 ? 0 : n - 1;
    }
    default: return 0;
  }
}

Scaffold synthesize_scaffold(const FamilyTyping& f, IndexAllocator& alloc) {
  bool typed = family_typed(f);
  alloc.avoid(f.indices);
  std::vector<Hypothesis> hyps;
  for (std::size_t i = 0; i < f.vars.size(); ++i) {
    IndexMap u;
    Family fam;
    for (const auto& [j, d] : f.derivations)
      for (const Point& p : d.judgment().context.at(i).mset.elements()) {
        Index k = alloc.fresh();
        u.set(k, j);
        fam.emplace(k, p);
      }
    IndexSet dom = u.source();
    Formula a = typed ? represent(*f.vars[i].type, dom, fam, alloc) : represent_dinf(dom, fam, alloc);
    hyps.push_back(Hypothesis{a, u});
  }
  Family bfam;
  for (const auto& [j, d] : f.derivations) bfam.emplace(j, d.judgment().point);
  if (typed) {
    auto t = infer_type(f.subject, env_of(f.vars));
    if (!t) throw Error("scaffold: subject is ill typed");
    return Scaffold{hyps, represent(*t, f.indices, bfam, alloc)};
  }
  return Scaffold{hyps, represent_dinf(f.indices, bfam, alloc, required_arrows(f.subject))};
}

Proof completeness(const FamilyTyping& f, IndexAllocator& alloc) {
  Scaffold s = synthesize_scaffold(f, alloc);
  return completeness(f, s, alloc);
}

}  // namespace ilj
