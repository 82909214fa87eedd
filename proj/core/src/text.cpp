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

#include "ilj/text.hpp"

#include <cctype>
#include <charconv>

namespace ilj {

Sexpr Sexpr::make_atom(std::string a) {
  Sexpr s;
  s.atom = std::move(a);
  return s;
}

Sexpr Sexpr::make_list(std::vector<Sexpr> xs) {
  Sexpr s;
  s.is_atom = false;
  s.list = std::move(xs);
  return s;
}

const std::string& Sexpr::head() const {
  static const std::string none;
  if (is_atom || list.empty() || !list[0].is_atom) return none;
  return list[0].atom;
}

const Sexpr& Sexpr::operator[](std::size_t i) const {
  if (is_atom || i >= list.size())
    throw ParseError("line " + std::to_string(line) + ": expected more items in (" + head() + " ...)");
  return list[i];
}

bool operator==(const Sexpr& a, const Sexpr& b) {
  return a.is_atom == b.is_atom && a.atom == b.atom && a.list == b.list;
}

namespace {

struct Reader {
  const std::string& text;
  std::size_t pos = 0;
  std::size_t line = 1;

  void skip() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == ';') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (c == '\n') ++line;
        ++pos;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip();
    return pos >= text.size();
  }

  Sexpr read() {
    skip();
    if (pos >= text.size()) throw ParseError("line " + std::to_string(line) + ": unexpected end of input");
    char c = text[pos];
    if (c == ')') throw ParseError("line " + std::to_string(line) + ": unexpected ')'");
    if (c == '(') {
      Sexpr s = Sexpr::make_list({});
      s.line = line;
      ++pos;
      while (true) {
        skip();
        if (pos >= text.size()) throw ParseError("line " + std::to_string(s.line) + ": unclosed '('");
        if (text[pos] == ')') {
          ++pos;
          return s;
        }
        s.list.push_back(read());
      }
    }
    std::size_t start = pos;
    while (pos < text.size()) {
      char d = text[pos];
      if (d == '(' || d == ')' || d == ';' || std::isspace(static_cast<unsigned char>(d))) break;
      ++pos;
    }
    Sexpr s = Sexpr::make_atom(text.substr(start, pos - start));
    s.line = line;
    return s;
  }
};

std::string flat(const Sexpr& s) {
  if (s.is_atom) return s.atom;
  std::string out = "(";
  for (std::size_t i = 0; i < s.list.size(); ++i) {
    if (i) out += ' ';
    out += flat(s.list[i]);
  }
  return out + ")";
}

void pretty(const Sexpr& s, std::size_t indent, std::size_t width, std::string& out) {
  std::string f = flat(s);
  if (s.is_atom || indent + f.size() <= width || s.list.size() < 2) {
    out += f;
    return;
  }
  out += "(" + flat(s.list[0]);
  std::size_t k = 1;
  // Keep short leading atoms on the head line.
  while (k < s.list.size() && s.list[k].is_atom) out += " " + s.list[k++].atom;
  for (; k < s.list.size(); ++k) {
    out += "\n" + std::string(indent + 2, ' ');
    pretty(s.list[k], indent + 2, width, out);
  }
  out += ")";
}

Sexpr A(std::string a) { return Sexpr::make_atom(std::move(a)); }
Sexpr L(std::vector<Sexpr> xs) { return Sexpr::make_list(std::move(xs)); }

[[noreturn]] void bad(const Sexpr& s, const std::string& what) {
  throw ParseError("line " + std::to_string(s.line) + ": expected " + what + ", got " + flat(s));
}

const std::string& sym(const Sexpr& s) {
  if (!s.is_atom) bad(s, "a symbol");
  return s.atom;
}

void expect(const Sexpr& s, const std::string& head, std::size_t min, std::size_t max) {
  if (!s.is(head) || s.size() < min + 1 || s.size() > max + 1) bad(s, "(" + head + " ...)");
}

}  // namespace

std::vector<Sexpr> parse_sexprs(const std::string& text) {
  Reader r{text};
  std::vector<Sexpr> out;
  while (!r.at_end()) out.push_back(r.read());
  return out;
}

Sexpr parse_sexpr(const std::string& text) {
  auto xs = parse_sexprs(text);
  if (xs.size() != 1) throw ParseError("expected exactly one expression, got " + std::to_string(xs.size()));
  return xs[0];
}

std::string print(const Sexpr& s, std::size_t width) {
  std::string out;
  pretty(s, 0, width, out);
  return out;
}

Sexpr to_sexpr(const IndexSet& s) {
  std::vector<Sexpr> xs{A("iset")};
  for (Index i : s) xs.push_back(A(std::to_string(i)));
  return L(std::move(xs));
}

Sexpr to_sexpr(const IndexMap& u) {
  std::vector<Sexpr> xs{A("imap")};
  for (const auto& [k, v] : u) xs.push_back(L({A(std::to_string(k)), A(std::to_string(v))}));
  return L(std::move(xs));
}

Sexpr to_sexpr(const Multiset<Point>& m) {
  std::vector<Sexpr> xs{A("mset")};
  for (const Point& p : m.elements()) xs.push_back(to_sexpr(p));
  return L(std::move(xs));
}

Sexpr to_sexpr(const Point& p) {
  switch (p.kind()) {
    case Point::Kind::Star: return A("star");
    case Point::Kind::Atom: return A(p.atom_name());
    case Point::Kind::Pair: return L({A("pt"), to_sexpr(p.domain()), to_sexpr(p.codomain())});
    case Point::Kind::Tagged: return L({A("tag"), A(std::to_string(p.tag())), to_sexpr(p.value())});
  }
  throw Error("to_sexpr: unknown point");
}

Sexpr to_sexpr(const SimpleType& t) {
  if (t.is_atom()) return L({A("atom"), A(t.name())});
  return L({A("arr"), to_sexpr(t.from()), to_sexpr(t.to())});
}

Sexpr to_sexpr(const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Free: return L({A("var"), A(m.name())});
    case Term::Kind::Bound: throw Error("to_sexpr: dangling bound variable");
    case Term::Kind::Bot: return A("bot");
    case Term::Kind::App: return L({A("app"), to_sexpr(m.fun()), to_sexpr(m.arg())});
    case Term::Kind::Lam: {
      std::string y = fresh_name(m.name().empty() ? "x" : m.name(), free_vars(m));
      Sexpr body = to_sexpr(open_var(m, y));
      if (m.binder_type()) return L({A("lam"), A(y), to_sexpr(*m.binder_type()), body});
      return L({A("lam"), A(y), body});
    }
  }
  throw Error("to_sexpr: unknown term");
}

Sexpr to_sexpr(const Family& f) {
  std::vector<Sexpr> xs;
  for (const auto& [j, p] : f) xs.push_back(L({A(std::to_string(j)), to_sexpr(p)}));
  return L(std::move(xs));
}

Sexpr to_sexpr(const Formula& a) {
  switch (a.kind()) {
    case Formula::Kind::Atom: return L({A("fatom"), A(a.atom_name()), to_sexpr(a.fam())});
    case Formula::Kind::Star: return L({A("fstar"), to_sexpr(a.dom())});
    case Formula::Kind::Arrow: return L({A("farr"), to_sexpr(a.from()), to_sexpr(a.map()), to_sexpr(a.to())});
  }
  throw Error("to_sexpr: unknown formula");
}

Sexpr to_sexpr(const Hypothesis& h) { return L({A("hyp"), to_sexpr(h.formula), to_sexpr(h.map)}); }

Sexpr to_sexpr(const Sequent& s) {
  std::vector<Sexpr> hs{A("hyps")};
  for (const auto& h : s.hyps) hs.push_back(to_sexpr(h));
  return L({A("seq"), L(std::move(hs)), to_sexpr(s.conclusion)});
}

Sexpr to_sexpr(const Proof& p) {
  Sexpr seq = to_sexpr(p.sequent());
  switch (p.rule()) {
    case ProofRule::Axiom: return L({A("ax"), seq, A(std::to_string(p.axiom_index() + 1))});
    case ProofRule::Intro: return L({A("intro"), seq, to_sexpr(p.premises()[0])});
    case ProofRule::StarAxiom: return L({A("starax"), seq});
    case ProofRule::Elim: {
      std::vector<Sexpr> sp{A("splits")};
      for (const auto& s : p.splits()) sp.push_back(L({A("split"), to_sexpr(s.left), to_sexpr(s.right)}));
      return L({A("elim"), seq, to_sexpr(p.premises()[0]), to_sexpr(p.premises()[1]), L(std::move(sp))});
    }
  }
  throw Error("to_sexpr: unknown proof");
}

Sexpr to_sexpr(const TypingJudgment& j) {
  std::vector<Sexpr> ctx{A("ctx")};
  for (const auto& e : j.context) {
    std::vector<Sexpr> xs{A(e.var), to_sexpr(e.mset)};
    if (e.type) xs.push_back(to_sexpr(*e.type));
    ctx.push_back(L(std::move(xs)));
  }
  std::vector<Sexpr> xs{A("judg"), L(std::move(ctx)), to_sexpr(j.subject), to_sexpr(j.point)};
  if (j.type) xs.push_back(to_sexpr(*j.type));
  return L(std::move(xs));
}

Sexpr to_sexpr(const TypingDeriv& d) {
  Sexpr j = to_sexpr(d.judgment());
  const auto& ps = d.premises();
  switch (d.rule()) {
    case TypingRule::Var: return L({A("tvar"), j});
    case TypingRule::Abs: return L({A("tabs"), j, to_sexpr(ps.at(0))});
    case TypingRule::App: {
      std::vector<Sexpr> args;
      for (std::size_t l = 1; l < ps.size(); ++l) args.push_back(to_sexpr(ps[l]));
      return L({A("tapp"), j, to_sexpr(ps.at(0)), L(std::move(args))});
    }
  }
  throw Error("to_sexpr: unknown derivation");
}

Sexpr to_sexpr(const std::vector<VarDecl>& vars) {
  std::vector<Sexpr> xs{A("vars")};
  for (const auto& v : vars) {
    std::vector<Sexpr> e{A(v.name)};
    if (v.type) e.push_back(to_sexpr(*v.type));
    xs.push_back(L(std::move(e)));
  }
  return L(std::move(xs));
}

Sexpr to_sexpr(const FamilyTyping& f) {
  std::vector<Sexpr> xs{A("family"), to_sexpr(f.indices), to_sexpr(f.vars), to_sexpr(f.subject)};
  for (const auto& [j, d] : f.derivations) xs.push_back(L({A("at"), A(std::to_string(j)), to_sexpr(d)}));
  return L(std::move(xs));
}

Sexpr to_sexpr(const PreTerm& s) {
  switch (s.kind()) {
    case PreTerm::Kind::Var: return L({A("cvar"), A(s.name()), to_sexpr(s.domain())});
    case PreTerm::Kind::Abs: return L({A("cabs"), A(s.name()), to_sexpr(s.formula()), to_sexpr(s.map()), to_sexpr(s.body())});
    case PreTerm::Kind::App: return L({A("capp"), to_sexpr(s.fun()), to_sexpr(s.arg())});
    case PreTerm::Kind::Bot: return A("cbot");
  }
  throw Error("to_sexpr: unknown pre-term");
}

Sexpr to_sexpr(const ChurchContext& ctx) {
  std::vector<Sexpr> xs{A("ctx")};
  for (const auto& [x, h] : ctx) xs.push_back(L({A(x), to_sexpr(h.formula), to_sexpr(h.map)}));
  return L(std::move(xs));
}

Index read_index(const Sexpr& s) {
  const std::string& a = sym(s);
  Index v = 0;
  auto [p, ec] = std::from_chars(a.data(), a.data() + a.size(), v);
  if (ec != std::errc() || p != a.data() + a.size()) bad(s, "an index");
  return v;
}

IndexSet read_iset(const Sexpr& s) {
  if (!s.is("iset")) bad(s, "(iset ...)");
  IndexSet out;
  for (std::size_t i = 1; i < s.size(); ++i) {
    Index k = read_index(s[i]);
    if (out.contains(k)) bad(s[i], "distinct indices");
    out.insert(k);
  }
  return out;
}

IndexMap read_imap(const Sexpr& s) {
  if (!s.is("imap")) bad(s, "(imap ...)");
  IndexMap out;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const Sexpr& e = s[i];
    if (e.is_atom || e.size() != 2) bad(e, "(k v)");
    Index k = read_index(e[0]);
    if (out.defined_at(k)) bad(e, "a map without repeated sources");
    out.set(k, read_index(e[1]));
  }
  return out;
}

Multiset<Point> read_mset(const Sexpr& s) {
  if (!s.is("mset")) bad(s, "(mset ...)");
  Multiset<Point> m;
  for (std::size_t i = 1; i < s.size(); ++i) m.add(read_point(s[i]));
  return m;
}

Point read_point(const Sexpr& s) {
  if (s.is_atom) {
    if (s.atom == "star") return Point::star();
    if (s.atom.empty() || s.atom == "bot") bad(s, "a point");
    return Point::atom(s.atom);
  }
  if (s.is("pt")) {
    expect(s, "pt", 2, 2);
    return Point::pair(read_mset(s[1]), read_point(s[2]));
  }
  if (s.is("tag")) {
    expect(s, "tag", 2, 2);
    return Point::tagged(read_index(s[1]), read_point(s[2]));
  }
  bad(s, "a point");
}

SimpleType read_type(const Sexpr& s) {
  if (s.is("atom")) {
    expect(s, "atom", 1, 1);
    return SimpleType::atom(sym(s[1]));
  }
  if (s.is("arr")) {
    expect(s, "arr", 2, 2);
    return SimpleType::arrow(read_type(s[1]), read_type(s[2]));
  }
  bad(s, "a simple type");
}

Term read_term(const Sexpr& s) {
  if (s.is_atom) {
    if (s.atom == "bot") return Term::bot();
    bad(s, "a term");
  }
  if (s.is("var")) {
    expect(s, "var", 1, 1);
    return Term::var(sym(s[1]));
  }
  if (s.is("app")) {
    expect(s, "app", 2, 2);
    return Term::app(read_term(s[1]), read_term(s[2]));
  }
  if (s.is("lam")) {
    expect(s, "lam", 2, 3);
    if (s.size() == 3) return Term::lam(sym(s[1]), read_term(s[2]));
    return Term::lam(sym(s[1]), read_term(s[3]), read_type(s[2]));
  }
  bad(s, "a term");
}

Family read_points(const Sexpr& s) {
  if (s.is_atom) bad(s, "a list of (index point)");
  Family f;
  for (const auto& e : s.list) {
    if (e.is_atom || e.size() != 2) bad(e, "(index point)");
    Index j = read_index(e[0]);
    if (f.count(j)) bad(e, "distinct indices");
    f.emplace(j, read_point(e[1]));
  }
  return f;
}

Formula read_formula(const Sexpr& s) {
  try {
    if (s.is("fatom")) {
      expect(s, "fatom", 2, 2);
      return Formula::atom(sym(s[1]), read_points(s[2]));
    }
    if (s.is("fstar")) {
      expect(s, "fstar", 1, 1);
      return Formula::star(read_iset(s[1]));
    }
    if (s.is("farr")) {
      expect(s, "farr", 3, 3);
      return Formula::arrow(read_formula(s[1]), read_imap(s[2]), read_formula(s[3]));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError("line " + std::to_string(s.line) + ": " + e.what());
  }
  bad(s, "a formula");
}

Hypothesis read_hyp(const Sexpr& s) {
  expect(s, "hyp", 2, 2);
  return Hypothesis{read_formula(s[1]), read_imap(s[2])};
}

Sequent read_sequent(const Sexpr& s) {
  expect(s, "seq", 2, 2);
  if (!s[1].is("hyps")) bad(s[1], "(hyps ...)");
  std::vector<Hypothesis> hs;
  for (std::size_t i = 1; i < s[1].size(); ++i) hs.push_back(read_hyp(s[1][i]));
  return Sequent{std::move(hs), read_formula(s[2])};
}

Proof read_proof(const Sexpr& s) {
  if (s.is("ax")) {
    expect(s, "ax", 2, 2);
    Index i = read_index(s[2]);
    if (i == 0) bad(s[2], "a hypothesis number from 1");
    return Proof::axiom(read_sequent(s[1]), static_cast<std::size_t>(i - 1));
  }
  if (s.is("intro")) {
    expect(s, "intro", 2, 2);
    return Proof::intro(read_sequent(s[1]), read_proof(s[2]));
  }
  if (s.is("starax")) {
    expect(s, "starax", 1, 1);
    return Proof::star_axiom(read_sequent(s[1]));
  }
  if (s.is("elim")) {
    expect(s, "elim", 4, 4);
    const Sexpr& sp = s[4];
    if (!sp.is("splits")) bad(sp, "(splits ...)");
    std::vector<ElimSplit> splits;
    for (std::size_t i = 1; i < sp.size(); ++i) {
      expect(sp[i], "split", 2, 2);
      splits.push_back(ElimSplit{read_iset(sp[i][1]), read_iset(sp[i][2])});
    }
    return Proof::elim(read_sequent(s[1]), read_proof(s[2]), read_proof(s[3]), std::move(splits));
  }
  bad(s, "a proof");
}

TypingJudgment read_judgment(const Sexpr& s) {
  expect(s, "judg", 3, 4);
  if (!s[1].is("ctx")) bad(s[1], "(ctx ...)");
  std::vector<ContextEntry> ctx;
  for (std::size_t i = 1; i < s[1].size(); ++i) {
    const Sexpr& e = s[1][i];
    if (e.is_atom || e.size() < 2 || e.size() > 3) bad(e, "(x (mset ...) type?)");
    std::optional<SimpleType> t;
    if (e.size() == 3) t = read_type(e[2]);
    ctx.push_back(ContextEntry{sym(e[0]), read_mset(e[1]), t});
  }
  std::optional<SimpleType> t;
  if (s.size() == 5) t = read_type(s[4]);
  return TypingJudgment{std::move(ctx), read_term(s[2]), read_point(s[3]), t};
}

TypingDeriv read_deriv(const Sexpr& s) {
  if (s.is("tvar")) {
    expect(s, "tvar", 1, 1);
    return TypingDeriv(TypingRule::Var, read_judgment(s[1]));
  }
  if (s.is("tabs")) {
    expect(s, "tabs", 2, 2);
    return TypingDeriv(TypingRule::Abs, read_judgment(s[1]), {read_deriv(s[2])});
  }
  if (s.is("tapp")) {
    expect(s, "tapp", 3, 3);
    std::vector<TypingDeriv> ps{read_deriv(s[2])};
    if (s[3].is_atom) bad(s[3], "a list of derivations");
    for (const auto& d : s[3].list) ps.push_back(read_deriv(d));
    return TypingDeriv(TypingRule::App, read_judgment(s[1]), std::move(ps));
  }
  bad(s, "a typing derivation");
}

std::vector<VarDecl> read_vars(const Sexpr& s) {
  if (!s.is("vars")) bad(s, "(vars ...)");
  std::vector<VarDecl> out;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const Sexpr& e = s[i];
    if (e.is_atom || e.size() < 1 || e.size() > 2) bad(e, "(x type?)");
    std::optional<SimpleType> t;
    if (e.size() == 2) t = read_type(e[1]);
    out.push_back(VarDecl{sym(e[0]), t});
  }
  return out;
}

FamilyTyping read_family(const Sexpr& s) {
  if (!s.is("family") || s.size() < 4) bad(s, "(family (iset ...) (vars ...) M (at j d) ...)");
  FamilyTyping f{read_iset(s[1]), read_term(s[3]), read_vars(s[2]), {}};
  for (std::size_t i = 4; i < s.size(); ++i) {
    expect(s[i], "at", 2, 2);
    Index j = read_index(s[i][1]);
    if (f.derivations.count(j)) bad(s[i], "distinct indices");
    f.derivations.emplace(j, read_deriv(s[i][2]));
  }
  return f;
}

PreTerm read_preterm(const Sexpr& s) {
  if (s.is_atom) {
    if (s.atom == "cbot") return PreTerm::bot();
    bad(s, "a pre-term");
  }
  if (s.is("cvar")) {
    expect(s, "cvar", 2, 2);
    return PreTerm::var(sym(s[1]), read_iset(s[2]));
  }
  if (s.is("cabs")) {
    expect(s, "cabs", 4, 4);
    return PreTerm::abs(sym(s[1]), read_formula(s[2]), read_imap(s[3]), read_preterm(s[4]));
  }
  if (s.is("capp")) {
    expect(s, "capp", 2, 2);
    return PreTerm::app(read_preterm(s[1]), read_preterm(s[2]));
  }
  bad(s, "a pre-term");
}

ChurchContext read_church_context(const Sexpr& s) {
  if (!s.is("ctx")) bad(s, "(ctx ...)");
  ChurchContext out;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const Sexpr& e = s[i];
    if (e.is_atom || e.size() != 3) bad(e, "(x A (imap ...))");
    out.emplace_back(sym(e[0]), Hypothesis{read_formula(e[1]), read_imap(e[2])});
  }
  return out;
}

}  // namespace ilj
