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

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "gen.hpp"
#include "ilj/text.hpp"
#include "lam.hpp"

using namespace ilj;
using namespace ilj::testing;

namespace {

constexpr std::uint64_t kSeed = 20260101;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> first_failure;
};

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> first;

  void record(bool ok, const std::function<std::string()>& why) {
    ++cases;
    if (ok) return;
    if (failures++ < 5) first.push_back(why());
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

std::string verdict_text(const Verdict& v) { return v.path + " " + v.rule + ": " + v.message; }

std::vector<std::string> with_name(std::vector<std::string> names, std::size_t pos, const std::string& x) {
  names.insert(names.begin() + static_cast<std::ptrdiff_t>(pos), x);
  return names;
}

// x, y, then v2, v3, ... for deeper contexts.
std::vector<std::string> spine_names(const std::vector<std::string>& base, std::size_t n) {
  std::vector<std::string> out(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(std::min(n, base.size())));
  for (std::size_t k = out.size(); k < n; ++k) out.push_back("v" + std::to_string(k));
  return out;
}

std::string fresh_from(const std::vector<std::string>& names, const std::string& base) {
  return fresh_name(base, std::set<std::string>(names.begin(), names.end()));
}

// Criterion 1.
Outcome category_laws() {
  Rng rng(kSeed + 1);
  std::vector<Point> universe{Point::atom("e0"), Point::atom("e1"), Point::atom("e2")};
  auto random_object = [&] {
    std::set<Point> s;
    std::size_t n = 1 + rng.below(3);
    while (s.size() < n) s.insert(rng.pick(universe));
    return Object::base(s);
  };
  Tally t;
  auto t0 = std::chrono::steady_clock::now();
  const std::size_t triples = 1000;
  for (std::size_t k = 0; k < triples; ++k) {
    Object w = random_object(), x = random_object(), y = random_object(), z = random_object();
    Morphism f = random_morphism(rng, w, x, 3, rng.below(6));
    Morphism g = random_morphism(rng, x, y, 3, rng.below(6));
    Morphism h = random_morphism(rng, y, z, 3, rng.below(6));
    bool assoc = compose(h, compose(g, f)) == compose(compose(h, g), f);
    bool left = compose(identity(x), f) == f;
    bool right = compose(f, identity(w)) == f;
    t.record(assoc && left && right, [&] {
      return "triple " + std::to_string(k) + (assoc ? "" : " associativity") + (left ? "" : " left identity") +
             (right ? "" : " right identity");
    });
  }
  double s = seconds_since(t0);
  Outcome o;
  o.pass = t.failures == 0 && t.cases >= 1000 && s < 10.0;
  o.detail = std::to_string(t.cases) + " triples, carriers <= 3, multisets <= 3, " + std::to_string(t.failures) +
             " failures, " + fmt_seconds(s) + " (limit 10s)";
  o.first_failure = t.first;
  return o;
}

// Criterion 2.
Outcome representation() {
  Rng rng(kSeed + 2);
  Tally t;
  auto t0 = std::chrono::steady_clock::now();
  auto check = [&](const std::string& label, const IndexSet& j, const Family& f,
                   const std::function<Formula(IndexAllocator&)>& rep, const std::optional<SimpleType>& sigma) {
    IndexAllocator a1(100 + rng.below(100));
    IndexAllocator a2(1000 + rng.below(1000));
    Formula x = rep(a1), y = rep(a2);
    bool ok = x.dom() == j && x.fam() == f && y.dom() == j && y.fam() == f && similar(x, y);
    if (sigma) ok = ok && x.underlying() == *sigma && y.underlying() == *sigma;
    t.record(ok, [&] { return label + " family over " + to_string(j) + ": " + x.show() + " vs " + y.show(); });
  };
  const std::size_t untyped = 500;
  for (std::size_t k = 0; k < untyped; ++k) {
    IndexSet j = random_indices(rng, 4, 12);
    Family f;
    for (Index i : j) f.emplace(i, random_dinf_point(rng, 3));
    std::size_t d1 = rng.below(3), d2 = rng.below(3);
    bool first = true;
    check("D-infinity", j, f,
          [&](IndexAllocator& a) {
            std::size_t d = first ? d1 : d2;
            first = false;
            return represent_dinf(j, f, a, d);
          },
          std::nullopt);
  }
  std::vector<SimpleType> types;
  while (types.size() < 3) {
    SimpleType s = random_type(rng, 3);
    if (s.depth() >= 2) types.push_back(s);
  }
  const std::size_t per_type = 200;
  for (const SimpleType& sigma : types) {
    for (std::size_t k = 0; k < per_type; ++k) {
      IndexSet j = random_indices(rng, 4, 12);
      Family f;
      for (Index i : j) f.emplace(i, random_typed_point(rng, sigma, 4));
      check(sigma.show(), j, f, [&](IndexAllocator& a) { return represent(sigma, j, f, a); }, sigma);
    }
  }
  double s = seconds_since(t0);
  Outcome o;
  o.pass = t.failures == 0 && s < 10.0;
  o.detail = std::to_string(untyped) + " D-infinity families (size <= 3) + " + std::to_string(3 * per_type) +
             " typed families over " + types[0].show() + ", " + types[1].show() + ", " + types[2].show() + ", " +
             std::to_string(t.failures) + " failures, " + fmt_seconds(s) + " (limit 10s)";
  o.first_failure = t.first;
  return o;
}

Formula empty_formula(Rng& rng, bool typed) {
  IndexAllocator a;
  if (typed) return represent(random_type(rng, 2), {}, {}, a);
  return represent_dinf({}, {}, a, rng.below(3));
}

// Criterion 3.
Outcome kernel_transformations(const std::vector<CorpusItem>& corpus) {
  Rng rng(kSeed + 3);
  Tally t;
  std::size_t counts[5] = {0, 0, 0, 0, 0};
  auto t0 = std::chrono::steady_clock::now();
  for (std::size_t n = 0; n < corpus.size(); ++n) {
    const CorpusItem& item = corpus[n];
    const Proof& p = item.proof;
    const auto& names = item.names;
    Term m = extract_term(p, names);
    std::string where = "proof " + std::to_string(n) + " (" + m.show() + ")";
    auto guarded = [&](const std::string& what, const std::function<std::pair<bool, std::string>()>& body) {
      bool ok = false;
      std::string why;
      try {
        std::tie(ok, why) = body();
      } catch (const std::exception& e) {
        why = e.what();
      }
      t.record(ok, [&] { return what + " on " + where + ": " + why; });
    };

    for (std::size_t pos = 0; pos <= p.hyps().size(); ++pos) {
      ++counts[0];
      guarded("weaken at " + std::to_string(pos), [&]() -> std::pair<bool, std::string> {
        Proof w = weaken(p, empty_formula(rng, item.typed), pos);
        Verdict v = check_proof(w);
        if (!v) return {false, verdict_text(v)};
        Term tw = extract_term(w, with_name(names, pos, fresh_from(names, "d")));
        return {tw == m, "term " + tw.show()};
      });
    }

    ++counts[1];
    guarded("relocate", [&]() -> std::pair<bool, std::string> {
      IndexMap u = random_bijection(rng, p.conclusion().dom(), 60);
      Proof r = relocate_proof(p, u);
      Verdict v = check_proof(r);
      if (!v) return {false, verdict_text(v)};
      if (!(r.conclusion() == relocate(u, p.conclusion()))) return {false, "conclusion"};
      Proof back = relocate_proof(r, u.inverse());
      if (!(back.sequent() == p.sequent())) return {false, "round trip sequent"};
      Term tr = extract_term(r, names);
      return {tr == m, "term " + tr.show()};
    });

    for (int rep = 0; rep < 2; ++rep) {
      ++counts[2];
      guarded("restrict", [&]() -> std::pair<bool, std::string> {
        IndexSet j;
        for (Index i : p.conclusion().dom())
          if (rep == 0 && rng.coin()) j.insert(i);
        Proof r = restrict_proof(p, j);
        Verdict v = check_proof(r);
        if (!v) return {false, verdict_text(v) + " at J=" + to_string(j)};
        if (!(r.conclusion() == restrict(p.conclusion(), j))) return {false, "conclusion"};
        Term tr = extract_term(r, names);
        return {tr == m, "term " + tr.show()};
      });
    }

    for (const SubstInstance& inst : redex_instances(p)) {
      std::size_t arity = inst.mu.hyps().size();
      auto inner = spine_names(names, arity - 1);
      std::string z = fresh_from(inner, "z");
      for (std::size_t i = 0; i < arity; ++i) {
        ++counts[3];
        guarded("substitute at " + std::to_string(i), [&]() -> std::pair<bool, std::string> {
          Term rho_term = extract_term(inst.rho, inner);
          std::vector<std::size_t> perm(arity);
          for (std::size_t k = 0; k + 1 < arity; ++k) perm[k] = k < i ? k : k + 1;
          perm[arity - 1] = i;
          Proof mu = permute_hyps(inst.mu, perm);
          Proof s = substitute_proof(mu, inst.rho, i, inst.data);
          Verdict v = check_proof(s);
          if (!v) return {false, verdict_text(v)};
          Term expect = substitute(extract_term(mu, with_name(inner, i, z)), z, rho_term);
          Term got = extract_term(s, inner);
          if (!(got == expect)) return {false, "term " + got.show() + " expected " + expect.show()};
          Proof s2 = substitute_proof(mu, inst.rho, i, derive_merge_data(mu, inst.rho, i));
          Verdict v2 = check_proof(s2);
          if (!v2) return {false, "derived merge data: " + verdict_text(v2)};
          Term got2 = extract_term(s2, inner);
          return {got2 == expect, "derived merge data term " + got2.show()};
        });
      }
    }

    for (std::size_t i = 0; i < p.hyps().size(); ++i) {
      ++counts[4];
      guarded("subst_single at " + std::to_string(i), [&]() -> std::pair<bool, std::string> {
        const Formula& a = p.hyps()[i].formula;
        Formula b = scramble(rng, a, 60);
        Proof rho = sim_conversion(b, a);
        Proof s = subst_single(p, rho, i);
        Verdict v = check_proof(s);
        if (!v) return {false, verdict_text(v)};
        std::string z = fresh_from(names, "z");
        std::vector<std::string> zs = names;
        zs[i] = z;
        Term expect = substitute(extract_term(p, zs), z, extract_term(rho, {names[i]}));
        Term got = extract_term(s, names);
        return {got == expect, "term " + got.show() + " expected " + expect.show()};
      });
    }
    ++counts[4];
    guarded("subst_into_single", [&]() -> std::pair<bool, std::string> {
      Formula b = scramble(rng, p.conclusion(), 60);
      Proof mu = sim_conversion(p.conclusion(), b);
      Proof s = subst_into_single(mu, p);
      Verdict v = check_proof(s);
      if (!v) return {false, verdict_text(v)};
      std::string z = fresh_from(names, "z");
      Term expect = substitute(extract_term(mu, {z}), z, m);
      Term got = extract_term(s, names);
      return {got == expect, "term " + got.show() + " expected " + expect.show()};
    });
  }
  double s = seconds_since(t0);
  Outcome o;
  o.pass = t.failures == 0 && corpus.size() >= 200 && counts[3] > 0 && s < 60.0;
  o.detail = std::to_string(corpus.size()) + " proofs: " + std::to_string(counts[0]) + " weakenings, " +
             std::to_string(counts[1]) + " relocations, " + std::to_string(counts[2]) + " restrictions, " +
             std::to_string(counts[3]) + " substitutions, " + std::to_string(counts[4]) + " single-hypothesis substitutions, " +
             std::to_string(t.failures) + " failures, " + fmt_seconds(s) + " (limit 60s)";
  o.first_failure = t.first;
  return o;
}

// Criterion 4.
Outcome soundness_suite(const std::vector<CorpusItem>& corpus) {
  Tally t;
  std::size_t derivations = 0;
  auto t0 = std::chrono::steady_clock::now();
  for (std::size_t n = 0; n < corpus.size(); ++n) {
    const CorpusItem& item = corpus[n];
    bool ok = false;
    std::string why;
    try {
      FamilyTyping f = soundness(item.proof, item.names);
      const Formula& b = item.proof.conclusion();
      Term m = extract_term(item.proof, item.names);
      ok = f.indices == b.dom() && f.subject == m;
      if (!ok) why = "index set or subject";
      for (const auto& [j, d] : f.derivations) {
        ++derivations;
        Verdict v = item.typed ? check_typed(d, &test_carriers()) : check_untyped(d);
        if (!v) {
          ok = false;
          why = "j=" + std::to_string(j) + " " + verdict_text(v);
          break;
        }
        const TypingJudgment& jd = d.judgment();
        if (!(jd.point == b.fam(j))) {
          ok = false;
          why = "point at j=" + std::to_string(j);
          break;
        }
        for (std::size_t i = 0; i < jd.context.size(); ++i)
          if (!(jd.context[i].mset == hyp_family(item.proof.hyps()[i], j))) {
            ok = false;
            why = "context multiset " + std::to_string(i) + " at j=" + std::to_string(j);
          }
      }
    } catch (const std::exception& e) {
      why = e.what();
    }
    t.record(ok, [&] { return "proof " + std::to_string(n) + ": " + why; });
  }
  double s = seconds_since(t0);
  Outcome o;
  o.pass = t.failures == 0 && !corpus.empty();
  o.detail = std::to_string(corpus.size()) + " proofs, " + std::to_string(derivations) + " derivations, " +
             std::to_string(t.failures) + " failures, " + fmt_seconds(s);
  o.first_failure = t.first;
  return o;
}

// Criterion 5.
Outcome completeness_suite() {
  auto t0 = std::chrono::steady_clock::now();
  Rng rng(kSeed + 5);
  CorpusOptions opts;
  opts.max_term_size = 6;
  Tally t;
  std::size_t typed = 0, untyped = 0, bot_empty = 0, attempts = 0;
  while ((typed < 60 || untyped < 60 || bot_empty < 5) && attempts < 100000) {
    ++attempts;
    bool want_typed = typed < 60 && (untyped >= 60 || rng.coin());
    if (!want_typed && untyped >= 60 && bot_empty < 5) want_typed = false;
    bool ok = false;
    std::string why;
    std::string subject;
    try {
      auto item = random_item(rng, want_typed, opts);
      if (!item) {
        --attempts;
        continue;
      }
      const FamilyTyping& f = item->family;
      subject = f.subject.show();
      if (f.subject.size() > 6) continue;
      bool is_bot_empty = !want_typed && has_bottom(f.subject) && f.indices.empty();
      if (!want_typed && untyped >= 60 && !is_bot_empty) continue;
      Verdict fv = check_family(f, want_typed ? &test_carriers() : nullptr);
      Verdict v = check_proof(item->proof);
      Term got = extract_term(item->proof, item->names);
      if (!fv) {
        why = "family " + verdict_text(fv);
      } else if (!v) {
        why = verdict_text(v);
      } else if (want_typed) {
        ok = eta_equivalent(got, f.subject);
        why = "term " + got.show() + " is not eta-equal";
      } else {
        ok = qprojo_member(got, f.subject);
        why = "term " + got.show() + " is not in the approximant set";
      }
      (want_typed ? typed : untyped)++;
      if (is_bot_empty) ++bot_empty;
    } catch (const std::exception& e) {
      why = e.what();
      (want_typed ? typed : untyped)++;
    }
    t.record(ok, [&] { return (want_typed ? "typed " : "untyped ") + subject + ": " + why; });
  }
  double s = seconds_since(t0);
  Outcome o;
  o.pass = t.failures == 0 && typed + untyped >= 100 && bot_empty > 0 && s < 120.0;
  o.detail = std::to_string(typed) + " typed + " + std::to_string(untyped) + " untyped families (terms <= 6, " +
             std::to_string(bot_empty) + " with bottom and J empty), " + std::to_string(t.failures) +
             " failures, " + fmt_seconds(s) + " (limit 120s)";
  o.first_failure = t.first;
  return o;
}

// Criterion 6.
Outcome similarity_suite() {
  Rng rng(kSeed + 6);
  Tally t;
  std::size_t typed = 0, untyped = 0;
  auto t0 = std::chrono::steady_clock::now();
  for (std::size_t k = 0; k < 300; ++k) {
    bool is_typed = k % 2 == 0;
    IndexSet j = random_indices(rng, 3, 10);
    Family f;
    std::optional<SimpleType> sigma;
    if (is_typed) sigma = random_type(rng, 2);
    for (Index i : j) f.emplace(i, is_typed ? random_typed_point(rng, *sigma, 4) : random_dinf_point(rng, 3));
    IndexAllocator a1(100), a2(500 + rng.below(100));
    Formula a = is_typed ? represent(*sigma, j, f, a1) : represent_dinf(j, f, a1, rng.below(3));
    Formula b = is_typed ? represent(*sigma, j, f, a2) : represent_dinf(j, f, a2, rng.below(3));
    b = scramble(rng, b, 1000);
    (is_typed ? typed : untyped)++;
    bool ok = false;
    std::string why;
    try {
      if (!similar(a, b)) throw Error("generated pair is not similar");
      Proof p = sim_conversion(a, b);
      Verdict v = check_proof(p);
      Term x = extract_term(p, {"x"});
      if (!v) {
        why = verdict_text(v);
      } else if (is_typed) {
        ok = eta_equivalent(x, Term::var("x"));
        why = "term " + x.show();
      } else {
        ok = qproj_member(x, "x");
        why = "term " + x.show();
      }
    } catch (const std::exception& e) {
      why = e.what();
    }
    t.record(ok, [&] { return a.show() + " ~ " + b.show() + ": " + why; });
  }
  double s = seconds_since(t0);
  Outcome o;
  o.pass = t.failures == 0 && t.cases >= 200;
  o.detail = std::to_string(typed) + " typed + " + std::to_string(untyped) + " untyped similar pairs, " +
             std::to_string(t.failures) + " failures, " + fmt_seconds(s);
  o.first_failure = t.first;
  return o;
}

struct Redex {
  const char* before;
  const char* after;
  bool typed = false;
};

// M →β M′, over the free variables x and y.
const std::vector<Redex>& redex_pairs() {
  static const std::vector<Redex> pairs{
      {"(\\z. z) x", "x"},
      {"(\\z. z) y", "y"},
      {"(\\z. x) y", "x"},
      {"(\\z. z z) x", "x x"},
      {"(\\z. z y) x", "x y"},
      {"(\\z. x z) y", "x y"},
      {"(\\z. z x) y", "y x"},
      {"(\\z. z) (\\w. w)", "\\w. w"},
      {"(\\z. \\w. z) x", "\\w. x"},
      {"(\\z. \\w. w) x", "\\w. w"},
      {"(\\z. \\w. z w) x", "\\w. x w"},
      {"(\\z. \\w. w z) x", "\\w. w x"},
      {"(\\z. z) x y", "x y"},
      {"(\\z. z y) (\\w. w)", "(\\w. w) y"},
      {"(\\z. z x) (\\w. y)", "(\\w. y) x"},
      {"(\\z. x) _", "x"},
      {"(\\z. y) (x x)", "y"},
      {"(\\z. \\w. z) x y", "(\\w. x) y"},
      {"(\\z. \\w. w) x y", "(\\w. w) y"},
      {"\\w. (\\z. z) w", "\\w. w"},
      {"\\w. (\\z. z w) x", "\\w. x w"},
      {"\\w. (\\z. w) x", "\\w. w"},
      {"x ((\\z. z) y)", "x y"},
      {"((\\z. z) x) y", "x y"},
      {"(\\z. z z) (\\w. w)", "(\\w. w) (\\w. w)"},
      {"(\\z. x z z) y", "x y y"},
      {"(\\z. z (z y)) x", "x (x y)"},
      {"(\\z. \\w. z (z w)) x", "\\w. x (x w)"},
      {"(\\z. z) (\\w. x w)", "\\w. x w"},
      {"(\\z. y z) (\\w. w)", "y (\\w. w)"},
      {"(\\z. y) _", "y"},
      {"(\\z. \\w. x) y", "\\w. x"},
      {"\\w. (\\z. z) x", "\\w. x"},
      {"(\\z. z _) x", "x _"},
      {"(\\z. x (z y)) (\\w. w)", "x ((\\w. w) y)"},
      {"(\\z. z) ((\\w. w) x)", "(\\w. w) x"},
      {"(\\z. (\\w. w) z) x", "(\\w. w) x"},
      {"(\\z. x z) ((\\w. w) y)", "x ((\\w. w) y)"},
      {"(\\z. z x y) (\\u. \\v. u)", "(\\u. \\v. u) x y"},
      {"(\\z. \\u. z u) (\\w. w)", "\\u. (\\w. w) u"},
      {"(\\z:a. z) x", "x", true},
      {"(\\z:a. y) x", "y", true},
      {"(\\z:a->b. z) y", "y", true},
      {"(\\z:a->b. z x) y", "y x", true},
      {"(\\z:a. \\w:a. z) x", "\\w:a. x", true},
      {"(\\z:a. y z) x", "y x", true},
      {"(\\z:a. \\w:b. w) x", "\\w:b. w", true},
      {"\\w:a. (\\z:a. z) w", "\\w:a. w", true},
      {"(\\z:a->b. \\w:a. z w) y", "\\w:a. y w", true},
      {"y ((\\z:a. z) x)", "y x", true},
  };
  return pairs;
}

// Judgments with the subject erased, in printed form.
std::set<std::string> judgment_set(const std::vector<SearchResult>& rs) {
  std::set<std::string> out;
  for (const auto& r : rs) {
    TypingJudgment j = r.judgment;
    j.subject = Term::var("_");
    out.insert(print(to_sexpr(j)));
  }
  return out;
}

// Criterion 7.
Outcome beta_invariance() {
  SearchBounds bounds;
  bounds.card = 2;
  bounds.weight = 2;
  Tally t;
  std::size_t judgments = 0;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<VarDecl> untyped{{"x", std::nullopt}, {"y", std::nullopt}};
  std::vector<VarDecl> typed{{"x", ty("a")}, {"y", ty("a->b")}};
  for (const Redex& r : redex_pairs()) {
    bool ok = false;
    std::string why;
    try {
      Term m = lam(r.before), m2 = lam(r.after);
      if (beta_step(m) != std::optional<Term>(m2) && !(beta_normalize(m, 50) == beta_normalize(m2, 50)))
        throw Error("not a beta pair");
      const auto& vars = r.typed ? typed : untyped;
      const Carriers* c = r.typed ? &test_carriers() : nullptr;
      auto a = judgment_set(search(m, vars, bounds, c));
      auto b = judgment_set(search(m2, vars, bounds, c));
      judgments += a.size();
      ok = a == b;
      why = std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " judgments";
    } catch (const std::exception& e) {
      why = e.what();
    }
    t.record(ok, [&] { return std::string(r.before) + " -> " + r.after + ": " + why; });
  }
  double s = seconds_since(t0);
  Outcome o;
  o.pass = t.failures == 0 && t.cases >= 50 && s < 60.0;
  o.detail = std::to_string(t.cases) + " redex pairs, bounds card <= 2 and weight <= 2, " + std::to_string(judgments) +
             " judgments, " + std::to_string(t.failures) + " discrepancies, " + fmt_seconds(s) + " (limit 60s)";
  o.first_failure = t.first;
  return o;
}

// Criterion 8.
Outcome church_suite(const std::vector<CorpusItem>& corpus) {
  Tally t;
  std::size_t mutations = 0;
  auto t0 = std::chrono::steady_clock::now();
  for (std::size_t n = 0; n < corpus.size(); ++n) {
    const CorpusItem& item = corpus[n];
    bool ok = false;
    std::string why;
    try {
      PreTerm s = to_church(item.proof, item.names);
      ChurchContext ctx = church_context(item.proof, item.names);
      const Formula& b = item.proof.conclusion();
      Verdict v = check_church(ctx, s, b);
      if (!is_term(s)) {
        why = "term condition";
      } else if (!v) {
        why = verdict_text(v);
      } else if (!(erase(s) == extract_term(item.proof, item.names))) {
        why = "erasure " + erase(s).show();
      } else {
        ok = true;
        for (const PreTerm& bad : church_mutations(s)) {
          ++mutations;
          if (is_term(bad) && check_church(ctx, bad, b)) {
            ok = false;
            why = "mutation accepted: " + bad.show();
            break;
          }
        }
        if (ok && !b.dom().empty()) {
          ++mutations;
          IndexMap shift;
          for (Index j : b.dom()) shift.set(j, j + 500);
          if (check_church(ctx, s, relocate(shift, b))) {
            ok = false;
            why = "relocated conclusion accepted";
          }
        }
      }
    } catch (const std::exception& e) {
      why = e.what();
    }
    t.record(ok, [&] { return "proof " + std::to_string(n) + ": " + why; });
  }
  double s = seconds_since(t0);
  Outcome o;
  o.pass = t.failures == 0 && !corpus.empty();
  o.detail = std::to_string(corpus.size()) + " proofs, " + std::to_string(mutations) + " mutations, " +
             std::to_string(t.failures) + " failures, " + fmt_seconds(s);
  o.first_failure = t.first;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  // Optional overrides for stress runs: seed, maximum term size, point weight.
  std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : kSeed;
  CorpusOptions opts;
  if (argc > 2) opts.max_term_size = std::stoul(argv[2]);
  if (argc > 3) opts.bounds.weight = std::stoul(argv[3]);
  auto t0 = std::chrono::steady_clock::now();
  std::vector<CorpusItem> corpus = make_corpus(seed, 150, 150, opts);
  std::printf("corpus: %zu proofs built in %s\n", corpus.size(), fmt_seconds(seconds_since(t0)).c_str());

  struct Criterion {
    const char* id;
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"AC1", "category laws", category_laws},
      {"AC2", "representation", representation},
      {"AC3", "kernel transformations", [&] { return kernel_transformations(corpus); }},
      {"AC4", "soundness", [&] { return soundness_suite(corpus); }},
      {"AC5", "completeness round trip", completeness_suite},
      {"AC6", "similarity", similarity_suite},
      {"AC7", "beta invariance", beta_invariance},
      {"AC8", "church calculus", [&] { return church_suite(corpus); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("aborted: ") + e.what();
    }
    std::printf("[%s] %s %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    for (const auto& f : o.first_failure) std::printf("       failure: %s\n", f.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
