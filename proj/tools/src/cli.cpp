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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "ilj/relmodel.hpp"
#include "ilj/text.hpp"

namespace ilj::cli {
namespace {

std::string flat(const Sexpr& s) { return print(s, std::numeric_limits<std::size_t>::max()); }

Sexpr drop_name(const Sexpr& s) {
  std::vector<Sexpr> xs{s[0]};
  xs.insert(xs.end(), s.list.begin() + 2, s.list.end());
  Sexpr out = Sexpr::make_list(std::move(xs));
  out.line = s.line;
  return out;
}

[[noreturn]] void bad_form(const Sexpr& s, const std::string& what) {
  throw ParseError("line " + std::to_string(s.line) + ": expected " + what);
}

// Usage errors found after flag parsing (unknown names, wrong kinds).
struct UsageError : Error {
  using Error::Error;
};

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> all{
      "check-typing", "check-proof", "extract",      "soundness",    "completeness",  "represent", "restrict",
      "relocate",     "substitute",  "sim-convert",  "church-check", "oracle-search", "ccc-laws"};
  return all;
}

void Workspace::declare(const std::string& kind, const std::string& name, std::size_t line) {
  if (kinds_.count(name)) throw ParseError("line " + std::to_string(line) + ": duplicate name " + name);
  kinds_[name] = kind;
  order_.emplace_back(kind, name);
}

bool Workspace::has(const std::string& name) const { return kinds_.count(name) != 0; }

const std::string& Workspace::kind_of(const std::string& name) const {
  auto it = kinds_.find(name);
  if (it == kinds_.end()) throw UsageError("unknown object " + name);
  return it->second;
}

std::vector<std::string> Workspace::names_of(const std::string& kind) const {
  std::vector<std::string> out;
  for (const auto& [k, n] : order_)
    if (k == kind) out.push_back(n);
  return out;
}

void Workspace::add_text(const std::string& text, const std::string& origin) {
  try {
    for (const Sexpr& s : parse_sexprs(text)) {
      if (s.is_atom || s.size() < 2) bad_form(s, "(kind name ...)");
      const std::string& kind = s.head();
      if (kind == "carrier") {
        if (s.size() != 3 || !s[1].is_atom || s[2].is_atom) bad_form(s, "(carrier atom (elements ...))");
        std::vector<std::string> elems;
        for (const auto& e : s[2].list) {
          if (!e.is_atom) bad_form(e, "a carrier element");
          elems.push_back(e.atom);
        }
        carriers_.declare(s[1].atom, std::move(elems));
        continue;
      }
      if (!s[1].is_atom) bad_form(s, "an object name");
      const std::string& name = s[1].atom;
      if (kind == "term") {
        if (s.size() != 3 && s.size() != 4) bad_form(s, "(term name M (vars ...)?)");
        TermDecl d{read_term(s[2]), {}};
        if (s.size() == 4) {
          d.vars = read_vars(s[3]);
        } else {
          for (const auto& x : free_vars(d.term)) d.vars.push_back(VarDecl{x, std::nullopt});
        }
        terms.emplace(name, std::move(d));
      } else if (kind == "formula") {
        if (s.size() != 3) bad_form(s, "(formula name A)");
        formulas.emplace(name, read_formula(s[2]));
      } else if (kind == "proof") {
        if (s.size() != 3) bad_form(s, "(proof name π)");
        proofs.emplace(name, read_proof(s[2]));
      } else if (kind == "deriv") {
        if (s.size() != 3) bad_form(s, "(deriv name d)");
        derivs.emplace(name, read_deriv(s[2]));
      } else if (kind == "family") {
        families.emplace(name, read_family(drop_name(s)));
      } else if (kind == "points") {
        if (s.size() != 4) bad_form(s, "(points name σ|dinf ((j p) ...))");
        PointsDecl d;
        if (!(s[2].is_atom && s[2].atom == "dinf")) d.type = read_type(s[2]);
        d.family = read_points(s[3]);
        points.emplace(name, std::move(d));
      } else if (kind == "scaffold") {
        if (s.size() != 4 || !s[2].is("hyps")) bad_form(s, "(scaffold name (hyps ...) B)");
        Scaffold sc{{}, read_formula(s[3])};
        for (std::size_t i = 1; i < s[2].size(); ++i) sc.hyps.push_back(read_hyp(s[2][i]));
        scaffolds.emplace(name, std::move(sc));
      } else if (kind == "church") {
        if (s.size() != 5) bad_form(s, "(church name (ctx ...) s B)");
        churches.emplace(name, ChurchDecl{read_church_context(s[2]), read_preterm(s[3]), read_formula(s[4])});
      } else {
        bad_form(s, "a known kind, got " + kind);
      }
      declare(kind, name, s.line);
    }
  } catch (const ParseError& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

Workspace Workspace::load(const std::vector<std::string>& files) {
  Workspace ws;
  for (const auto& f : files) {
    std::ifstream in(f);
    if (!in) throw ParseError(f + ": cannot open");
    std::stringstream buf;
    buf << in.rdbuf();
    ws.add_text(buf.str(), f);
  }
  return ws;
}

namespace {

struct Options {
  std::string command;
  std::vector<std::string> files;
  std::uint64_t seed = 1;
  std::size_t bound = 2;
  std::string mode;
  std::string out;
  std::string name;
  std::string with;
  std::size_t at = 0;
  std::string indices;
  std::string map;
  std::string vars;
};

using Record = std::vector<std::pair<std::string, std::string>>;

class Runner {
 public:
  Runner(const Options& o, const Workspace& ws) : o_(o), ws_(ws) {}

  int exec(std::ostream& out) {
    const std::string& c = o_.command;
    if (c == "check-typing") check_typing();
    else if (c == "check-proof") each("proof", [&](const std::string& n, Record& r) { check_proof_cmd(n, r); });
    else if (c == "extract") each("proof", [&](const std::string& n, Record& r) { extract_cmd(n, r); });
    else if (c == "soundness") each("proof", [&](const std::string& n, Record& r) { soundness_cmd(n, r); });
    else if (c == "completeness") each("family", [&](const std::string& n, Record& r) { completeness_cmd(n, r); });
    else if (c == "represent") each("points", [&](const std::string& n, Record& r) { represent_cmd(n, r); });
    else if (c == "restrict") single({"formula", "proof"}, [&](const std::string& n, Record& r) { restrict_cmd(n, r); });
    else if (c == "relocate") single({"formula", "proof"}, [&](const std::string& n, Record& r) { relocate_cmd(n, r); });
    else if (c == "substitute") single({"proof"}, [&](const std::string& n, Record& r) { substitute_cmd(n, r); });
    else if (c == "sim-convert") single({"formula"}, [&](const std::string& n, Record& r) { sim_cmd(n, r); });
    else if (c == "church-check") each("church", [&](const std::string& n, Record& r) { church_cmd(n, r); });
    else if (c == "oracle-search") each("term", [&](const std::string& n, Record& r) { search_cmd(n, r); });
    else if (c == "ccc-laws") ccc_cmd();
    else throw UsageError("unknown command " + c);

    if (!o_.out.empty()) {
      std::ofstream f(o_.out);
      if (!f) throw UsageError("cannot write " + o_.out);
      for (const auto& s : emitted_) f << print(s) << "\n";
    }
    int code = kOk;
    for (std::size_t i = 0; i < records_.size(); ++i) {
      if (i) out << "\n";
      for (const auto& [k, v] : records_[i]) out << k << ": " << v << "\n";
      const std::string& st = records_[i][2].second;
      if (st != "ok") code = kInvalid;
    }
    return code;
  }

 private:
  using Body = std::function<void(const std::string&, Record&)>;

  std::vector<std::string> targets(const std::vector<std::string>& kinds) const {
    if (!o_.name.empty()) {
      const std::string& k = ws_.kind_of(o_.name);
      if (std::find(kinds.begin(), kinds.end(), k) == kinds.end())
        throw UsageError(o_.name + " is a " + k + ", not a " + kinds.front());
      return {o_.name};
    }
    std::vector<std::string> out;
    for (const auto& [k, n] : ws_.order())
      if (std::find(kinds.begin(), kinds.end(), k) != kinds.end()) out.push_back(n);
    if (out.empty()) throw UsageError("no " + kinds.front() + " objects in the workspace");
    return out;
  }

  void run_one(const std::string& name, const Body& body) {
    Record r{{"command", o_.command}, {"object", name}, {"status", "ok"}};
    try {
      body(name, r);
    } catch (const UsageError&) {
      throw;
    } catch (const Error& e) {
      r.resize(3);
      r[2].second = "error";
      r.emplace_back("message", e.what());
    }
    records_.push_back(std::move(r));
  }

  void each(const std::string& kind, const Body& body) {
    for (const auto& n : targets({kind})) run_one(n, body);
  }

  void single(const std::vector<std::string>& kinds, const Body& body) {
    if (o_.name.empty()) throw UsageError(o_.command + " needs --name");
    run_one(targets(kinds).front(), body);
  }

  static void invalid(Record& r, const Verdict& v) {
    r[2].second = "invalid";
    r.emplace_back("path", v.path);
    r.emplace_back("rule", v.rule);
    r.emplace_back("message", v.message);
  }

  std::vector<std::string> vars_flag() const {
    std::vector<std::string> out;
    std::istringstream in(o_.vars);
    for (std::string x; in >> x;) out.push_back(x);
    return out;
  }

  // --vars first, then x1..xn.
  std::vector<std::string> names_for(std::size_t n) const {
    std::vector<std::string> out = vars_flag();
    if (out.size() > n) out.resize(n);
    for (std::size_t i = out.size(); i < n; ++i) out.push_back("x" + std::to_string(i + 1));
    return out;
  }

  // Emits an object either inline or into the --out workspace.
  void emit(Record& r, const std::string& kind, const std::string& name, const Sexpr& body) {
    if (o_.out.empty()) {
      r.emplace_back("result", flat(body));
      return;
    }
    std::vector<Sexpr> xs{Sexpr::make_atom(kind), Sexpr::make_atom(name)};
    if (kind == "family") {
      xs.insert(xs.end(), body.list.begin() + 1, body.list.end());
    } else {
      xs.push_back(body);
    }
    emitted_.push_back(Sexpr::make_list(std::move(xs)));
    r.emplace_back("out", o_.out);
  }

  bool typed_mode(bool detected) const {
    if (o_.mode == "typed") return true;
    if (o_.mode == "untyped") return false;
    return detected;
  }

  void check_typing() {
    for (const auto& n : targets({"deriv", "family"})) {
      run_one(n, [&](const std::string& name, Record& r) {
        if (ws_.kind_of(name) == "deriv") {
          const TypingDeriv& d = ws_.derivs.at(name);
          bool typed = typed_mode(d.judgment().type.has_value());
          Verdict v = typed ? check_typed(d, ws_.carriers()) : check_untyped(d);
          r.emplace_back("mode", typed ? "typed" : "untyped");
          if (!v) return invalid(r, v);
          r.emplace_back("subject", flat(to_sexpr(d.judgment().subject)));
          r.emplace_back("point", flat(to_sexpr(d.judgment().point)));
        } else {
          const FamilyTyping& f = ws_.families.at(name);
          Verdict v = check_family(f, ws_.carriers());
          if (!v) return invalid(r, v);
          r.emplace_back("subject", flat(to_sexpr(f.subject)));
          r.emplace_back("indices", flat(to_sexpr(f.indices)));
        }
      });
    }
  }

  void check_proof_cmd(const std::string& n, Record& r) {
    const Proof& p = ws_.proofs.at(n);
    Verdict v = check_proof(p);
    if (!v) return invalid(r, v);
    r.emplace_back("size", std::to_string(p.size()));
    r.emplace_back("conclusion", flat(to_sexpr(p.conclusion())));
    r.emplace_back("term", flat(to_sexpr(extract_term(p, names_for(p.hyps().size())))));
  }

  void extract_cmd(const std::string& n, Record& r) {
    const Proof& p = ws_.proofs.at(n);
    Verdict v = check_proof(p);
    if (!v) return invalid(r, v);
    auto names = names_for(p.hyps().size());
    r.emplace_back("vars", flat(to_sexpr(vars_of(names))));
    r.emplace_back("term", flat(to_sexpr(extract_term(p, names))));
    r.emplace_back("church", flat(to_sexpr(to_church(p, names))));
  }

  static std::vector<VarDecl> vars_of(const std::vector<std::string>& names) {
    std::vector<VarDecl> out;
    for (const auto& x : names) out.push_back(VarDecl{x, std::nullopt});
    return out;
  }

  void soundness_cmd(const std::string& n, Record& r) {
    const Proof& p = ws_.proofs.at(n);
    Verdict v = check_proof(p);
    if (!v) return invalid(r, v);
    FamilyTyping f = soundness(p, names_for(p.hyps().size()));
    Verdict fv = check_family(f);
    if (!fv) return invalid(r, fv);
    r.emplace_back("indices", flat(to_sexpr(f.indices)));
    emit(r, "family", n, to_sexpr(f));
  }

  static void avoid(IndexAllocator& alloc, const Formula& a) {
    alloc.avoid(a.dom());
    if (a.is_arrow()) {
      alloc.avoid(a.map().source());
      alloc.avoid(a.map().image());
      avoid(alloc, a.from());
      avoid(alloc, a.to());
    }
  }

  void completeness_cmd(const std::string& n, Record& r) {
    const FamilyTyping& f = ws_.families.at(n);
    Verdict fv = check_family(f, ws_.carriers());
    if (!fv) return invalid(r, fv);
    IndexAllocator alloc(0);
    alloc.avoid(f.indices);
    Proof p = [&] {
      if (o_.with.empty()) return completeness(f, alloc);
      if (ws_.kind_of(o_.with) != "scaffold") throw UsageError(o_.with + " is not a scaffold");
      const Scaffold& s = ws_.scaffolds.at(o_.with);
      for (const auto& h : s.hyps) avoid(alloc, h.formula);
      avoid(alloc, s.conclusion);
      return completeness(f, s, alloc);
    }();
    Verdict v = check_proof(p);
    if (!v) return invalid(r, v);
    std::vector<std::string> names;
    for (const auto& d : f.vars) names.push_back(d.name);
    r.emplace_back("size", std::to_string(p.size()));
    r.emplace_back("term", flat(to_sexpr(extract_term(p, names))));
    emit(r, "proof", n, to_sexpr(p));
  }

  void represent_cmd(const std::string& n, Record& r) {
    const PointsDecl& d = ws_.points.at(n);
    IndexSet j;
    for (const auto& [k, p] : d.family) j.insert(k);
    IndexAllocator alloc(0);
    alloc.avoid(j);
    if (d.type) {
      for (const auto& [k, p] : d.family)
        if (!conforms(p, *d.type, ws_.carriers()))
          return invalid(r, Verdict::fail(std::to_string(k), "represent", "point " + p.show() + " is not in the type"));
    }
    Formula a = d.type ? represent(*d.type, j, d.family, alloc) : represent_dinf(j, d.family, alloc);
    r.emplace_back("dom", flat(to_sexpr(a.dom())));
    emit(r, "formula", n, to_sexpr(a));
  }

  IndexSet index_flag() const {
    if (o_.indices.empty()) throw UsageError(o_.command + " needs --indices");
    try {
      return read_iset(parse_sexpr(o_.indices));
    } catch (const ParseError& e) {
      throw UsageError(std::string("--indices: ") + e.what());
    }
  }

  IndexMap map_flag() const {
    if (o_.map.empty()) throw UsageError(o_.command + " needs --map");
    try {
      return read_imap(parse_sexpr(o_.map));
    } catch (const ParseError& e) {
      throw UsageError(std::string("--map: ") + e.what());
    }
  }

  void restrict_cmd(const std::string& n, Record& r) {
    IndexSet j = index_flag();
    if (ws_.kind_of(n) == "formula") {
      emit(r, "formula", n, to_sexpr(restrict(ws_.formulas.at(n), j)));
      return;
    }
    const Proof& p = ws_.proofs.at(n);
    Verdict v = check_proof(p);
    if (!v) return invalid(r, v);
    Proof q = restrict_proof(p, j);
    r.emplace_back("size", std::to_string(q.size()));
    emit(r, "proof", n, to_sexpr(q));
  }

  void relocate_cmd(const std::string& n, Record& r) {
    IndexMap u = map_flag();
    if (ws_.kind_of(n) == "formula") {
      emit(r, "formula", n, to_sexpr(relocate(u, ws_.formulas.at(n))));
      return;
    }
    const Proof& p = ws_.proofs.at(n);
    Verdict v = check_proof(p);
    if (!v) return invalid(r, v);
    Proof q = relocate_proof(p, u);
    r.emplace_back("size", std::to_string(q.size()));
    emit(r, "proof", n, to_sexpr(q));
  }

  void substitute_cmd(const std::string& n, Record& r) {
    if (o_.with.empty() || ws_.kind_of(o_.with) != "proof") throw UsageError("substitute needs --with PROOF");
    if (o_.at == 0) throw UsageError("substitute needs --at I (from 1)");
    const Proof& mu = ws_.proofs.at(n);
    const Proof& rho = ws_.proofs.at(o_.with);
    for (const Proof* p : {&mu, &rho}) {
      Verdict v = check_proof(*p);
      if (!v) return invalid(r, v);
    }
    if (o_.at > mu.hyps().size()) throw UsageError("--at is past the last hypothesis");
    std::size_t i = o_.at - 1;
    Proof q = substitute_proof(mu, rho, i, derive_merge_data(mu, rho, i));
    Verdict v = check_proof(q);
    if (!v) return invalid(r, v);
    r.emplace_back("size", std::to_string(q.size()));
    r.emplace_back("term", flat(to_sexpr(extract_term(q, names_for(q.hyps().size())))));
    emit(r, "proof", n, to_sexpr(q));
  }

  void sim_cmd(const std::string& n, Record& r) {
    if (o_.with.empty() || ws_.kind_of(o_.with) != "formula") throw UsageError("sim-convert needs --with FORMULA");
    const Formula& a = ws_.formulas.at(n);
    const Formula& b = ws_.formulas.at(o_.with);
    if (!similar(a, b)) return invalid(r, Verdict::fail("root", "similar", "formulas are not similar"));
    Proof p = sim_conversion(a, b);
    r.emplace_back("size", std::to_string(p.size()));
    r.emplace_back("term", flat(to_sexpr(extract_term(p, names_for(1)))));
    emit(r, "proof", n, to_sexpr(p));
  }

  void church_cmd(const std::string& n, Record& r) {
    const ChurchDecl& d = ws_.churches.at(n);
    if (!is_term(d.subject)) return invalid(r, Verdict::fail("root", "term", "application domains overlap"));
    Verdict v = check_church(d.context, d.subject, d.conclusion);
    if (!v) return invalid(r, v);
    r.emplace_back("term", flat(to_sexpr(erase(d.subject))));
  }

  void search_cmd(const std::string& n, Record& r) {
    const TermDecl& d = ws_.terms.at(n);
    std::vector<VarDecl> vars = d.vars;
    if (!o_.vars.empty()) {
      auto names = vars_flag();
      if (names.size() != vars.size()) throw UsageError("--vars must rename every variable");
      for (std::size_t i = 0; i < vars.size(); ++i) vars[i].name = names[i];
    }
    SearchBounds b;
    b.weight = o_.bound;
    auto results = search(d.term, vars, b, ws_.carriers());
    r.emplace_back("vars", flat(to_sexpr(vars)));
    r.emplace_back("bound", std::to_string(o_.bound));
    r.emplace_back("count", std::to_string(results.size()));
    for (const auto& res : results) r.emplace_back("judgment", flat(to_sexpr(res.judgment)));
  }

  // Random laws of the relational category over small base objects.
  void ccc_cmd() {
    run_one("rel", [&](const std::string&, Record& r) {
      std::mt19937_64 rng(o_.seed);
      auto below = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
      std::size_t atoms = std::max<std::size_t>(o_.bound, 1);
      auto object = [&] {
        std::set<Point> xs;
        std::size_t k = 1 + below(atoms);
        for (std::size_t i = 0; i < k; ++i) xs.insert(Point::atom("e" + std::to_string(below(atoms + 1))));
        return Object::base(xs);
      };
      auto morphism = [&](const Object& s, const Object& t) {
        Morphism m(s, t);
        auto src = s.enumerate(), tgt = t.enumerate();
        std::size_t pairs = below(4);
        for (std::size_t i = 0; i < pairs; ++i) {
          Multiset<Point> ms;
          std::size_t card = below(3);
          for (std::size_t c = 0; c < card; ++c) ms.add(src[below(src.size())]);
          m.add(ms, tgt[below(tgt.size())]);
        }
        return m;
      };
      const std::size_t trials = 200;
      std::size_t ident = 0, assoc = 0, curried = 0;
      for (std::size_t t = 0; t < trials; ++t) {
        Object a = object(), b = object(), c = object(), d = object();
        Morphism f = morphism(a, b), g = morphism(b, c), h = morphism(c, d);
        if (compose(f, identity(a)) == f && compose(identity(b), f) == f) ++ident;
        if (compose(h, compose(g, f)) == compose(compose(h, g), f)) ++assoc;
        Object ab = Object::product({a, b});
        Morphism k = morphism(ab, c);
        if (uncurry(curry(k)) == k) ++curried;
      }
      r.emplace_back("seed", std::to_string(o_.seed));
      r.emplace_back("trials", std::to_string(trials));
      r.emplace_back("identity", std::to_string(ident));
      r.emplace_back("associativity", std::to_string(assoc));
      r.emplace_back("curry", std::to_string(curried));
      if (ident != trials || assoc != trials || curried != trials)
        invalid(r, Verdict::fail("rel", "ccc-laws", "a law failed on a random instance"));
    });
  }

  const Options& o_;
  const Workspace& ws_;
  std::vector<Record> records_;
  std::vector<Sexpr> emitted_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Indexed intuitionistic logic and intersection types"};
  app.add_option("command", o.command, "Command to run")->required()->check(CLI::IsMember(commands()));
  app.add_option("files", o.files, ".ilj workspace files");
  app.add_option("--seed", o.seed, "Seed for randomized commands");
  app.add_option("--bound", o.bound, "Oracle weight bound");
  app.add_option("--mode", o.mode, "Typing mode")->check(CLI::IsMember({"typed", "untyped"}));
  app.add_option("--out", o.out, "Write emitted objects to FILE");
  app.add_option("--name", o.name, "Object to operate on");
  app.add_option("--with", o.with, "Second object (scaffold, proof or formula)");
  app.add_option("--at", o.at, "Hypothesis position, from 1");
  app.add_option("--indices", o.indices, "Index set, e.g. \"(iset 0 2)\"");
  app.add_option("--map", o.map, "Index map, e.g. \"(imap (0 5))\"");
  app.add_option("--vars", o.vars, "Variable names, space separated");
  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "ilj: " << e.what() << "\n";
    return kUsage;
  }
  try {
    if (o.command != "ccc-laws" && o.files.empty()) throw UsageError(o.command + " needs workspace files");
    Workspace ws = Workspace::load(o.files);
    Runner runner(o, ws);
    std::ostringstream buf;
    int code = runner.exec(buf);
    out << buf.str();
    return code;
  } catch (const UsageError& e) {
    err << "ilj: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "ilj: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace ilj::cli
