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

#include "ilj/ljker.hpp"

#include <set>

namespace ilj {

struct Proof::Node {
  ProofRule rule = ProofRule::Axiom;
  Sequent sequent{{}, Formula::star({})};
  std::size_t index = 0;
  std::vector<Proof> premises;
  std::vector<ElimSplit> splits;
  std::size_t size = 1;
};

std::shared_ptr<Proof::Node> Proof::make_node(ProofRule r, Sequent s) {
  auto n = std::make_shared<Node>();
  n->rule = r;
  n->sequent = std::move(s);
  return n;
}

Proof Proof::axiom(Sequent s, std::size_t i) {
  auto n = make_node(ProofRule::Axiom, std::move(s));
  n->index = i;
  return Proof(std::move(n));
}

Proof Proof::intro(Sequent s, Proof premise) {
  auto n = make_node(ProofRule::Intro, std::move(s));
  n->size = 1 + premise.size();
  n->premises.push_back(std::move(premise));
  return Proof(std::move(n));
}

Proof Proof::elim(Sequent s, Proof fun, Proof arg, std::vector<ElimSplit> splits) {
  auto n = make_node(ProofRule::Elim, std::move(s));
  n->size = 1 + fun.size() + arg.size();
  n->premises.push_back(std::move(fun));
  n->premises.push_back(std::move(arg));
  n->splits = std::move(splits);
  return Proof(std::move(n));
}

Proof Proof::star_axiom(Sequent s) { return Proof(make_node(ProofRule::StarAxiom, std::move(s))); }

ProofRule Proof::rule() const { return node_->rule; }
const Sequent& Proof::sequent() const { return node_->sequent; }
std::size_t Proof::axiom_index() const { return node_->index; }
const std::vector<Proof>& Proof::premises() const { return node_->premises; }
const std::vector<ElimSplit>& Proof::splits() const { return node_->splits; }
std::size_t Proof::size() const { return node_->size; }

bool operator==(const Proof& a, const Proof& b) {
  if (a.node_ == b.node_) return true;
  return a.rule() == b.rule() && a.axiom_index() == b.axiom_index() && a.sequent() == b.sequent() &&
         a.splits() == b.splits() && a.premises() == b.premises();
}

const char* rule_name(ProofRule r) {
  switch (r) {
    case ProofRule::Axiom: return "ax";
    case ProofRule::Intro: return "intro";
    case ProofRule::Elim: return "elim";
    case ProofRule::StarAxiom: return "starax";
  }
  return "?";
}

namespace {

Verdict check_at(const Proof& p, const std::string& path) {
  const char* rn = rule_name(p.rule());
  auto fail = [&](const std::string& msg) { return Verdict::fail(path, rn, msg); };
  const auto& hyps = p.hyps();
  const Formula& concl = p.conclusion();
  const std::size_t n = hyps.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& h = hyps[i];
    std::string at = "hypothesis " + std::to_string(i + 1);
    if (h.formula.flavor() != concl.flavor()) return fail(at + " mixes typed and untyped formulas");
    if (!(h.map.source() == h.formula.dom())) return fail(at + ": map is not total on the domain");
    if (!h.map.image().subset_of(concl.dom())) return fail(at + ": map leaves the conclusion domain");
  }
  try {
    switch (p.rule()) {
      case ProofRule::Axiom: {
        std::size_t i = p.axiom_index();
        if (i >= n) return fail("axiom index out of range");
        for (std::size_t q = 0; q < n; ++q)
          if (q != i && !hyps[q].formula.dom().empty())
            return fail("hypothesis " + std::to_string(q + 1) + " has a nonempty domain");
        if (!hyps[i].map.injective()) return fail("axiom map is not a bijection");
        if (!(relocate(hyps[i].map, hyps[i].formula) == concl)) return fail("conclusion is not the relocated hypothesis");
        return Verdict::pass();
      }
      case ProofRule::Intro: {
        if (p.premises().size() != 1) return fail("intro needs one premise");
        if (!concl.is_arrow()) return fail("conclusion is not an arrow");
        const Proof& q = p.premises()[0];
        if (q.hyps().size() != n + 1) return fail("premise must add exactly one hypothesis");
        for (std::size_t i = 0; i < n; ++i)
          if (!(q.hyps()[i] == hyps[i])) return fail("premise hypothesis " + std::to_string(i + 1) + " differs");
        if (!(q.hyps()[n].formula == concl.from()) || !(q.hyps()[n].map == concl.map()))
          return fail("discharged hypothesis differs from the arrow source");
        if (!(q.conclusion() == concl.to())) return fail("premise conclusion differs from the arrow target");
        return check_at(q, path + ".0");
      }
      case ProofRule::Elim: {
        if (p.premises().size() != 2) return fail("elim needs two premises");
        const Proof& f = p.premises()[0];
        const Proof& a = p.premises()[1];
        if (!f.conclusion().is_arrow()) return fail("function premise does not conclude an arrow");
        const Formula& arr = f.conclusion();
        if (!(arr.to() == concl)) return fail("arrow target differs from the conclusion");
        if (!(a.conclusion() == arr.from())) return fail("argument premise does not conclude the arrow source");
        if (f.hyps().size() != n || a.hyps().size() != n) return fail("premises have a different number of hypotheses");
        if (p.splits().size() != n) return fail("split count differs from the hypothesis count");
        for (std::size_t i = 0; i < n; ++i) {
          std::string at = "hypothesis " + std::to_string(i + 1);
          const auto& s = p.splits()[i];
          const auto& e = hyps[i];
          const auto& c = f.hyps()[i];
          const auto& d = a.hyps()[i];
          if (!(s.left == c.formula.dom()) || !(s.right == d.formula.dom()))
            return fail(at + ": split disagrees with the premise domains");
          if (!s.left.disjoint(s.right)) return fail(at + ": split parts overlap");
          if (!(s.left.unite(s.right) == e.formula.dom())) return fail(at + ": split does not cover the domain");
          if (!(restrict(e.formula, s.left) == c.formula)) return fail(at + ": left part is not a restriction");
          if (!(restrict(e.formula, s.right) == d.formula)) return fail(at + ": right part is not a restriction");
          if (!(e.map.restrict(s.left) == c.map)) return fail(at + ": map disagrees on the left part");
          if (!(e.map.restrict(s.right) == compose(arr.map(), d.map)))
            return fail(at + ": map disagrees with the composite on the right part");
        }
        Verdict v = check_at(f, path + ".0");
        if (!v) return v;
        return check_at(a, path + ".1");
      }
      case ProofRule::StarAxiom: {
        if (concl.flavor() != Flavor::Untyped) return fail("the bottom axiom is untyped only");
        if (!concl.dom().empty()) return fail("conclusion has a nonempty domain");
        for (std::size_t i = 0; i < n; ++i)
          if (!hyps[i].formula.dom().empty())
            return fail("hypothesis " + std::to_string(i + 1) + " has a nonempty domain");
        return Verdict::pass();
      }
    }
  } catch (const Error& e) {
    return fail(e.what());
  }
  return fail("unknown rule");
}

Term extract_at(const Proof& p, std::vector<std::string>& vars) {
  switch (p.rule()) {
    case ProofRule::Axiom: return Term::var(vars.at(p.axiom_index()));
    case ProofRule::StarAxiom: return Term::bot();
    case ProofRule::Elim: return Term::app(extract_at(p.premises()[0], vars), extract_at(p.premises()[1], vars));
    case ProofRule::Intro: {
      std::set<std::string> avoid(vars.begin(), vars.end());
      std::string y = fresh_name("y", avoid);
      vars.push_back(y);
      Term body = extract_at(p.premises()[0], vars);
      vars.pop_back();
      const Formula& a = p.conclusion().from();
      std::optional<SimpleType> ty;
      if (a.flavor() == Flavor::Typed) ty = a.underlying();
      return Term::lam(y, body, ty);
    }
  }
  throw Error("extract_term: unknown rule");
}

std::vector<Hypothesis> insert_hyp(std::vector<Hypothesis> hs, std::size_t pos, const Hypothesis& h) {
  hs.insert(hs.begin() + static_cast<std::ptrdiff_t>(pos), h);
  return hs;
}

Hypothesis empty_hyp(const Formula& a) { return Hypothesis{restrict(a, IndexSet{}), IndexMap{}}; }

void expect_sequent(const Proof& p, const Sequent& s, const char* what) {
  if (!(p.sequent() == s)) throw Error(std::string(what) + ": construction produced an unexpected sequent");
}

}  // namespace

Verdict check_proof(const Proof& p) { return check_at(p, "root"); }

Term extract_term(const Proof& p, const std::vector<std::string>& vars) {
  if (vars.size() != p.hyps().size())
    throw Error("extract_term: " + std::to_string(vars.size()) + " variables for " + std::to_string(p.hyps().size()) +
                " hypotheses");
  std::set<std::string> seen(vars.begin(), vars.end());
  if (seen.size() != vars.size()) throw Error("extract_term: variables are not pairwise distinct");
  std::vector<std::string> v = vars;
  return extract_at(p, v);
}

Proof make_axiom(const std::vector<Hypothesis>& hyps, std::size_t i) {
  if (i >= hyps.size()) throw Error("make_axiom: index out of range");
  return Proof::axiom(Sequent{hyps, relocate(hyps[i].map, hyps[i].formula)}, i);
}

Proof make_intro(const Proof& premise) {
  if (premise.hyps().empty()) throw Error("make_intro: premise has no hypothesis to discharge");
  std::vector<Hypothesis> hs = premise.hyps();
  Hypothesis last = hs.back();
  hs.pop_back();
  Formula c = Formula::arrow(last.formula, last.map, premise.conclusion());
  return Proof::intro(Sequent{std::move(hs), std::move(c)}, premise);
}

Proof make_elim(const std::vector<Hypothesis>& hyps, const Proof& fun, const Proof& arg) {
  if (!fun.conclusion().is_arrow()) throw Error("make_elim: function premise does not conclude an arrow");
  if (fun.hyps().size() != hyps.size() || arg.hyps().size() != hyps.size())
    throw Error("make_elim: hypothesis counts differ");
  std::vector<ElimSplit> splits;
  for (std::size_t i = 0; i < hyps.size(); ++i)
    splits.push_back(ElimSplit{fun.hyps()[i].formula.dom(), arg.hyps()[i].formula.dom()});
  return Proof::elim(Sequent{hyps, fun.conclusion().to()}, fun, arg, std::move(splits));
}

Proof weaken(const Proof& p, const Formula& b, std::size_t position) {
  if (!b.dom().empty()) throw Error("weaken: inserted formula has a nonempty domain");
  if (position > p.hyps().size()) throw Error("weaken: position out of range");
  Sequent s{insert_hyp(p.hyps(), position, Hypothesis{b, IndexMap{}}), p.conclusion()};
  switch (p.rule()) {
    case ProofRule::Axiom: {
      std::size_t i = p.axiom_index();
      return Proof::axiom(std::move(s), i >= position ? i + 1 : i);
    }
    case ProofRule::Intro: return Proof::intro(std::move(s), weaken(p.premises()[0], b, position));
    case ProofRule::Elim: {
      auto splits = p.splits();
      splits.insert(splits.begin() + static_cast<std::ptrdiff_t>(position), ElimSplit{});
      return Proof::elim(std::move(s), weaken(p.premises()[0], b, position), weaken(p.premises()[1], b, position),
                         std::move(splits));
    }
    case ProofRule::StarAxiom: return Proof::star_axiom(std::move(s));
  }
  throw Error("weaken: unknown rule");
}

Proof relocate_proof(const Proof& p, const IndexMap& u) {
  if (!(u.source() == p.conclusion().dom()) || !u.injective())
    throw Error("relocate_proof: " + to_string(u) + " is not a bijection on the conclusion domain");
  std::vector<Hypothesis> hs;
  for (const auto& h : p.hyps()) hs.push_back(Hypothesis{h.formula, compose(u, h.map)});
  switch (p.rule()) {
    case ProofRule::Axiom: return make_axiom(hs, p.axiom_index());
    case ProofRule::Intro: return make_intro(relocate_proof(p.premises()[0], u));
    case ProofRule::Elim: return make_elim(hs, relocate_proof(p.premises()[0], u), p.premises()[1]);
    case ProofRule::StarAxiom: return p;
  }
  throw Error("relocate_proof: unknown rule");
}

Proof restrict_proof(const Proof& p, const IndexSet& j) {
  if (!j.subset_of(p.conclusion().dom())) throw Error("restrict_proof: " + to_string(j) + " is not a subset of the domain");
  std::vector<Hypothesis> hs;
  for (const auto& h : p.hyps()) {
    IndexSet k = h.map.preimage(j);
    hs.push_back(Hypothesis{restrict(h.formula, k), h.map.restrict(k)});
  }
  switch (p.rule()) {
    case ProofRule::Axiom: return make_axiom(hs, p.axiom_index());
    case ProofRule::Intro: return make_intro(restrict_proof(p.premises()[0], j));
    case ProofRule::Elim: {
      const Proof& f = p.premises()[0];
      IndexSet l = f.conclusion().map().preimage(j);
      return make_elim(hs, restrict_proof(f, j), restrict_proof(p.premises()[1], l));
    }
    case ProofRule::StarAxiom: return Proof::star_axiom(Sequent{hs, p.conclusion()});
  }
  throw Error("restrict_proof: unknown rule");
}

namespace {

void validate_merge(const Proof& mu, const Proof& rho, std::size_t i, const MergeData& data) {
  const auto& a = mu.hyps();
  const auto& b = rho.hyps();
  const std::size_t n = a.size();
  if (i >= n) throw Error("substitute_proof: position out of range");
  if (b.size() + 1 != n) throw Error("substitute_proof: the substituted proof must have one hypothesis fewer");
  if (data.merged.size() + 1 != n) throw Error("substitute_proof: merge data has the wrong length");
  if (!(rho.conclusion() == a[i].formula)) throw Error("substitute_proof: substituted proof concludes the wrong formula");
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const auto& aj = a[csucc(j, i)];
    const auto& c = data.merged[j];
    std::string at = "substitute_proof: merged hypothesis " + std::to_string(j + 1);
    if (!aj.formula.dom().disjoint(b[j].formula.dom()) ||
        !(c.formula.dom() == aj.formula.dom().unite(b[j].formula.dom())))
      throw Error(at + " has the wrong domain");
    if (!(restrict(c.formula, aj.formula.dom()) == aj.formula) || !(restrict(c.formula, b[j].formula.dom()) == b[j].formula))
      throw Error(at + " does not restrict to its parts");
    if (!(c.map.restrict(aj.formula.dom()) == aj.map) ||
        !(c.map.restrict(b[j].formula.dom()) == compose(a[i].map, b[j].map)))
      throw Error(at + " has an inconsistent map");
  }
}

Proof subst_rec(const Proof& mu, const Proof& rho, std::size_t i, const std::vector<Hypothesis>& merged) {
  const auto& a = mu.hyps();
  const std::size_t n = a.size();
  switch (mu.rule()) {
    case ProofRule::Axiom: {
      std::size_t k = mu.axiom_index();
      if (k == i) return relocate_proof(rho, a[i].map);
      return make_axiom(merged, k < i ? k : k - 1);
    }
    case ProofRule::StarAxiom: return Proof::star_axiom(Sequent{merged, mu.conclusion()});
    case ProofRule::Intro: {
      const Proof& q = mu.premises()[0];
      const Hypothesis& last = q.hyps().back();
      Proof rho2 = weaken(rho, restrict(last.formula, IndexSet{}), rho.hyps().size());
      std::vector<Hypothesis> m2 = merged;
      m2.push_back(last);
      return make_intro(subst_rec(q, rho2, i, m2));
    }
    case ProofRule::Elim: {
      const Proof& f = mu.premises()[0];
      const Proof& g = mu.premises()[1];
      const IndexSet& de = f.hyps()[i].formula.dom();
      const IndexSet& df = g.hyps()[i].formula.dom();
      Proof rl = restrict_proof(rho, de);
      Proof rr = restrict_proof(rho, df);
      std::vector<Hypothesis> gs, hs;
      for (std::size_t j = 0; j + 1 < n; ++j) {
        std::size_t jj = csucc(j, i);
        const Hypothesis& c = merged[j];
        IndexSet gl = f.hyps()[jj].formula.dom().unite(rl.hyps()[j].formula.dom());
        gs.push_back(Hypothesis{restrict(c.formula, gl), c.map.restrict(gl)});
        IndexSet hr = g.hyps()[jj].formula.dom().unite(rr.hyps()[j].formula.dom());
        IndexMap r = g.hyps()[jj].map.disjoint_union(compose(g.hyps()[i].map, rr.hyps()[j].map));
        hs.push_back(Hypothesis{restrict(c.formula, hr), std::move(r)});
      }
      return make_elim(merged, subst_rec(f, rl, i, gs), subst_rec(g, rr, i, hs));
    }
  }
  throw Error("substitute_proof: unknown rule");
}

}  // namespace

Proof substitute_proof(const Proof& mu, const Proof& rho, std::size_t i, const MergeData& data) {
  validate_merge(mu, rho, i, data);
  Proof out = subst_rec(mu, rho, i, data.merged);
  expect_sequent(out, Sequent{data.merged, mu.conclusion()}, "substitute_proof");
  return out;
}

MergeData derive_merge_data(const Proof& mu, const Proof& rho, std::size_t i) {
  const auto& a = mu.hyps();
  const auto& b = rho.hyps();
  if (i >= a.size() || b.size() + 1 != a.size()) throw Error("derive_merge_data: arity mismatch");
  MergeData d;
  for (std::size_t j = 0; j < b.size(); ++j) {
    const Hypothesis& aj = a[csucc(j, i)];
    Formula c = aj.formula.dom().empty()   ? b[j].formula
                : b[j].formula.dom().empty() ? aj.formula
                                             : merge(aj.formula, b[j].formula);
    d.merged.push_back(Hypothesis{c, aj.map.disjoint_union(compose(a[i].map, b[j].map))});
  }
  return d;
}

Proof subst_single(const Proof& mu, const Proof& rho, std::size_t i) {
  const auto& a = mu.hyps();
  if (rho.hyps().size() != 1) throw Error("subst_single: the substituted proof must have exactly one hypothesis");
  if (i >= a.size()) throw Error("subst_single: position out of range");
  const Hypothesis& b = rho.hyps()[0];
  Proof mu2 = weaken(mu, restrict(b.formula, IndexSet{}), i + 1);
  Proof rho2 = rho;
  for (std::size_t k = 0; k < i; ++k) rho2 = weaken(rho2, restrict(a[k].formula, IndexSet{}), k);
  for (std::size_t k = i + 1; k < a.size(); ++k) rho2 = weaken(rho2, restrict(a[k].formula, IndexSet{}), k);
  MergeData d;
  for (std::size_t j = 0; j < a.size(); ++j)
    d.merged.push_back(j == i ? Hypothesis{b.formula, compose(a[i].map, b.map)} : a[j]);
  return substitute_proof(mu2, rho2, i, d);
}

Proof subst_into_single(const Proof& mu, const Proof& rho) {
  if (mu.hyps().size() != 1) throw Error("subst_into_single: the outer proof must have exactly one hypothesis");
  const IndexMap& v = mu.hyps()[0].map;
  const auto& a = rho.hyps();
  Proof mu2 = mu;
  for (std::size_t k = 0; k < a.size(); ++k) mu2 = weaken(mu2, restrict(a[k].formula, IndexSet{}), k);
  MergeData d;
  for (const auto& h : a) d.merged.push_back(Hypothesis{h.formula, compose(v, h.map)});
  return substitute_proof(mu2, rho, a.size(), d);
}

namespace {

// A bijection w : dom(E) → dom(C) with fam(C)∘w = fam(E) and u∘w = v.
IndexMap match_sources(const Formula& c, const IndexMap& u, const Formula& e, const IndexMap& v) {
  IndexMap w;
  for (Index j : v.image().unite(u.image())) {
    std::vector<Index> pool;
    for (Index k : u.preimage(j)) pool.push_back(k);
    std::vector<bool> used(pool.size(), false);
    for (Index l : v.preimage(j)) {
      bool found = false;
      for (std::size_t t = 0; t < pool.size() && !found; ++t) {
        if (!used[t] && c.fam(pool[t]) == e.fam(l)) {
          used[t] = true;
          w.set(l, pool[t]);
          found = true;
        }
      }
      if (!found) throw Error("sim_conversion: arrow sources are not similar");
    }
  }
  return w;
}

}  // namespace

Proof sim_conversion(const Formula& a, const Formula& b) {
  if (!similar(a, b)) throw Error("sim_conversion: formulas are not similar");
  const Hypothesis ha{a, IndexMap::identity(a.dom())};
  if (a.kind() != Formula::Kind::Arrow && b.kind() != Formula::Kind::Arrow) return make_axiom({ha}, 0);
  if (a.is_arrow() && b.is_arrow()) {
    const Formula& c = a.from();
    const Formula& d = a.to();
    const Formula& e = b.from();
    const Formula& f = b.to();
    IndexMap w = match_sources(c, a.map(), e, b.map());
    Proof mu = sim_conversion(relocate(w, e), c);
    Proof mu2 = subst_single(mu, make_axiom({Hypothesis{e, w}}, 0), 0);
    Proof pi1 = make_elim({ha, Hypothesis{c, a.map()}}, make_axiom({ha, empty_hyp(c)}, 0),
                          make_axiom({empty_hyp(a), Hypothesis{c, IndexMap::identity(c.dom())}}, 1));
    Proof pi2 = subst_single(pi1, mu2, 1);
    Proof pi3 = subst_into_single(sim_conversion(d, f), pi2);
    return make_intro(pi3);
  }
  if (a.is_star()) {
    // b = C ⇒_∅ D with dom C = ∅ and D ∼ a.
    return make_intro(weaken(sim_conversion(a, b.to()), b.from(), 1));
  }
  // a = C ⇒_∅ D against b = ⊥_J: apply to a bottom argument.
  const Formula& c = a.from();
  Proof arg = Proof::star_axiom(Sequent{{empty_hyp(a)}, c});
  Proof pi0 = make_elim({ha}, make_axiom({ha}, 0), arg);
  return subst_into_single(sim_conversion(a.to(), b), pi0);
}

Proof empty_proof(const Formula& a, const std::vector<Formula>& hyps) {
  if (a.flavor() != Flavor::Untyped) throw Error("empty_proof: typed formula");
  if (!a.dom().empty()) throw Error("empty_proof: conclusion has a nonempty domain");
  std::vector<Hypothesis> hs;
  for (const auto& h : hyps) {
    if (!h.dom().empty()) throw Error("empty_proof: hypothesis has a nonempty domain");
    if (h.flavor() != Flavor::Untyped) throw Error("empty_proof: typed hypothesis");
    hs.push_back(Hypothesis{h, IndexMap{}});
  }
  if (a.is_arrow()) {
    std::vector<Formula> more = hyps;
    more.push_back(a.from());
    return make_intro(empty_proof(a.to(), more));
  }
  return Proof::star_axiom(Sequent{std::move(hs), a});
}

}  // namespace ilj
