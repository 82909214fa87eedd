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

#include "ilj/formulas.hpp"

namespace ilj {

struct Formula::Node {
  Kind kind = Kind::Star;
  Flavor flavor = Flavor::Untyped;
  std::string name;
  std::optional<Formula> from;
  std::optional<Formula> to;
  IndexMap map;
  IndexSet dom;
  Family fam;
  std::optional<SimpleType> type;
  std::size_t size = 1;
  std::size_t arrows = 0;
};

Formula Formula::atom(std::string name, Family f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->flavor = Flavor::Typed;
  for (const auto& [j, p] : f) {
    if (!p.is_atom()) throw Error("atomic formula over " + name + " carries the non-atomic point " + p.show());
    n->dom.insert(j);
  }
  n->type = SimpleType::atom(name);
  n->name = std::move(name);
  n->fam = std::move(f);
  return Formula(std::move(n));
}

Formula Formula::star(IndexSet j) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Star;
  n->flavor = Flavor::Untyped;
  for (Index i : j) n->fam.emplace(i, Point::star());
  n->dom = std::move(j);
  return Formula(std::move(n));
}

Formula Formula::arrow(Formula a, IndexMap u, Formula b) {
  if (a.flavor() != b.flavor()) throw Error("arrow mixes typed and untyped formulas");
  if (!(u.source() == a.dom()))
    throw Error("arrow map " + to_string(u) + " is not total on " + to_string(a.dom()));
  if (!u.image().subset_of(b.dom()))
    throw Error("arrow map " + to_string(u) + " leaves the domain " + to_string(b.dom()));
  auto n = std::make_shared<Node>();
  n->kind = Kind::Arrow;
  n->flavor = a.flavor();
  n->dom = b.dom();
  std::map<Index, Multiset<Point>> ms;
  for (const auto& [k, j] : u) ms[j].add(a.fam(k));
  for (const auto& [j, p] : b.fam()) n->fam.emplace(j, Point::pair(ms[j], p));
  if (n->flavor == Flavor::Typed) n->type = SimpleType::arrow(a.underlying(), b.underlying());
  n->size = 1 + a.size() + b.size();
  n->arrows = 1 + b.arrow_depth();
  n->from = std::move(a);
  n->map = std::move(u);
  n->to = std::move(b);
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }
Flavor Formula::flavor() const { return node_->flavor; }

const std::string& Formula::atom_name() const {
  if (!is_atom()) throw Error("atom_name() of a non-atomic formula");
  return node_->name;
}

const Formula& Formula::from() const {
  if (!is_arrow()) throw Error("from() of a non-arrow formula");
  return *node_->from;
}

const IndexMap& Formula::map() const {
  if (!is_arrow()) throw Error("map() of a non-arrow formula");
  return node_->map;
}

const Formula& Formula::to() const {
  if (!is_arrow()) throw Error("to() of a non-arrow formula");
  return *node_->to;
}

const IndexSet& Formula::dom() const { return node_->dom; }
const Family& Formula::fam() const { return node_->fam; }

const Point& Formula::fam(Index j) const {
  auto it = node_->fam.find(j);
  if (it == node_->fam.end()) throw Error("fam: index " + std::to_string(j) + " outside the domain");
  return it->second;
}

SimpleType Formula::underlying() const {
  if (!node_->type) throw Error("untyped formula has no underlying type");
  return *node_->type;
}

std::size_t Formula::arrow_depth() const { return node_->arrows; }
std::size_t Formula::size() const { return node_->size; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.flavor() != b.flavor()) return false;
  switch (a.kind()) {
    case Formula::Kind::Atom: return a.atom_name() == b.atom_name() && a.fam() == b.fam();
    case Formula::Kind::Star: return a.dom() == b.dom();
    case Formula::Kind::Arrow: return a.map() == b.map() && a.from() == b.from() && a.to() == b.to();
  }
  return false;
}

std::string Formula::show() const {
  switch (kind()) {
    case Kind::Atom: {
      std::string s = "<" + atom_name() + ",{";
      bool first = true;
      for (const auto& [j, p] : fam()) {
        if (!first) s += ",";
        s += std::to_string(j) + ":" + p.show();
        first = false;
      }
      return s + "}>";
    }
    case Kind::Star: return "bot" + to_string(dom());
    case Kind::Arrow: return "(" + from().show() + " =>" + to_string(map()) + " " + to().show() + ")";
  }
  return "";
}

Multiset<Point> hyp_family(const Hypothesis& h, Index j) {
  Multiset<Point> m;
  for (const auto& [k, t] : h.map)
    if (t == j) m.add(h.formula.fam(k));
  return m;
}

Formula restrict(const Formula& a, const IndexSet& j) {
  switch (a.kind()) {
    case Formula::Kind::Atom: {
      Family f;
      for (const auto& [i, p] : a.fam())
        if (j.contains(i)) f.emplace(i, p);
      return Formula::atom(a.atom_name(), std::move(f));
    }
    case Formula::Kind::Star: return Formula::star(a.dom().intersect(j));
    case Formula::Kind::Arrow: {
      IndexSet k = a.map().preimage(a.to().dom().intersect(j));
      return Formula::arrow(restrict(a.from(), k), a.map().restrict(k), restrict(a.to(), j));
    }
  }
  throw Error("restrict: unknown formula");
}

Formula relocate(const IndexMap& u, const Formula& a) {
  if (!(u.source() == a.dom()) || !u.injective())
    throw Error("relocate: " + to_string(u) + " is not a bijection from " + to_string(a.dom()));
  switch (a.kind()) {
    case Formula::Kind::Atom: {
      Family f;
      for (const auto& [i, p] : a.fam()) f.emplace(u(i), p);
      return Formula::atom(a.atom_name(), std::move(f));
    }
    case Formula::Kind::Star: return Formula::star(u.image());
    case Formula::Kind::Arrow: return Formula::arrow(a.from(), compose(u, a.map()), relocate(u, a.to()));
  }
  throw Error("relocate: unknown formula");
}

bool similar(const Formula& a, const Formula& b) {
  if (a.flavor() != b.flavor()) return false;
  if (a.flavor() == Flavor::Typed && !(a.underlying() == b.underlying())) return false;
  return a.dom() == b.dom() && a.fam() == b.fam();
}

Formula merge(const Formula& a, const Formula& b) {
  if (!a.dom().disjoint(b.dom())) throw Error("merge: overlapping domains");
  if (a.kind() != b.kind() || a.flavor() != b.flavor()) throw Error("merge: formulas of different shapes");
  switch (a.kind()) {
    case Formula::Kind::Atom: {
      if (a.atom_name() != b.atom_name()) throw Error("merge: different atoms");
      Family f = a.fam();
      f.insert(b.fam().begin(), b.fam().end());
      return Formula::atom(a.atom_name(), std::move(f));
    }
    case Formula::Kind::Star: return Formula::star(a.dom().unite(b.dom()));
    case Formula::Kind::Arrow:
      return Formula::arrow(merge(a.from(), b.from()), a.map().disjoint_union(b.map()), merge(a.to(), b.to()));
  }
  throw Error("merge: unknown formula");
}

IndexSet IndexAllocator::take(std::size_t n) {
  IndexSet s = IndexSet::range(next_, n);
  next_ += n;
  return s;
}

void IndexAllocator::avoid(const IndexSet& s) {
  if (!s.empty() && s.max() >= next_) next_ = s.max() + 1;
}

namespace {

struct Split {
  IndexSet k;
  IndexMap u;
  Family g;
  Family b;
};

// Splits each f(j) = (m_j, b_j) over fresh K_j, elements of m_j in
// ascending order on ascending indices.
Split split_family(const IndexSet& j, const Family& f, IndexAllocator& alloc) {
  Split s;
  for (Index i : j) {
    auto it = f.find(i);
    if (it == f.end()) throw Error("represent: family undefined at " + std::to_string(i));
    const Point& p = it->second;
    if (!p.is_function()) throw Error("represent: point " + p.show() + " is not a pair");
    auto elems = p.domain().elements();
    IndexSet kj = alloc.take(elems.size());
    std::size_t n = 0;
    for (Index k : kj) {
      s.k.insert(k);
      s.u.set(k, i);
      s.g.emplace(k, elems[n++]);
    }
    s.b.emplace(i, p.codomain());
  }
  return s;
}

}  // namespace

Formula represent(const SimpleType& sigma, const IndexSet& j, const Family& f, IndexAllocator& alloc) {
  if (sigma.is_atom()) {
    Family g;
    for (Index i : j) {
      auto it = f.find(i);
      if (it == f.end()) throw Error("represent: family undefined at " + std::to_string(i));
      if (!it->second.is_atom()) throw Error("represent: point " + it->second.show() + " is not of type " + sigma.show());
      g.emplace(i, it->second);
    }
    return Formula::atom(sigma.name(), std::move(g));
  }
  for (Index i : j)
    if (f.count(i) && !f.at(i).is_pair()) throw Error("represent: point " + f.at(i).show() + " is not of type " + sigma.show());
  Split s = split_family(j, f, alloc);
  Formula a = represent(sigma.from(), s.k, s.g, alloc);
  Formula b = represent(sigma.to(), j, s.b, alloc);
  return Formula::arrow(std::move(a), std::move(s.u), std::move(b));
}

Formula represent_dinf(const IndexSet& j, const Family& f, IndexAllocator& alloc, std::size_t min_arrows) {
  bool all_star = true;
  for (Index i : j) {
    auto it = f.find(i);
    if (it == f.end()) throw Error("represent: family undefined at " + std::to_string(i));
    if (!is_dinf_point(it->second)) throw Error("represent: " + it->second.show() + " is not a point of D-infinity");
    if (!it->second.is_star()) all_star = false;
  }
  if (all_star && min_arrows == 0) return Formula::star(j);
  Split s = split_family(j, f, alloc);
  Formula a = represent_dinf(s.k, s.g, alloc, 0);
  Formula b = represent_dinf(j, s.b, alloc, min_arrows == 0 ? 0 : min_arrows - 1);
  return Formula::arrow(std::move(a), std::move(s.u), std::move(b));
}

}  // namespace ilj
