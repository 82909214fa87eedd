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

#include "ilj/point.hpp"

#include <algorithm>
#include <functional>

namespace ilj {

struct Point::Node {
  Kind kind = Kind::Star;
  std::string name;
  Index tag = 0;
  Multiset<Point> dom;
  std::vector<Point> cod;  // zero or one element
  std::size_t size = 0;
  std::size_t weight = 0;
};

namespace {

const Multiset<Point>& empty_mset() {
  static const Multiset<Point> m;
  return m;
}

}  // namespace

Point Point::star() {
  static const Point s(std::make_shared<Node>());
  return s;
}

Point Point::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::move(name);
  return Point(std::move(n));
}

Point Point::pair(Multiset<Point> m, Point a) {
  if (m.empty() && a.is_star()) return star();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pair;
  n->size = a.size();
  n->weight = a.node_->weight + (m.empty() ? 1 : 0);
  for (const auto& [b, c] : m) {
    n->size += c * (1 + b.size());
    n->weight += c * (1 + b.node_->weight);
  }
  n->dom = std::move(m);
  n->cod.push_back(std::move(a));
  return Point(std::move(n));
}

Point Point::tagged(Index tag, Point a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tagged;
  n->tag = tag;
  n->size = a.size();
  n->weight = a.node_->weight;
  n->cod.push_back(std::move(a));
  return Point(std::move(n));
}

Point::Kind Point::kind() const { return node_->kind; }

const std::string& Point::atom_name() const {
  if (!is_atom()) throw Error("atom_name() of a non-atom point");
  return node_->name;
}

const Multiset<Point>& Point::domain() const {
  if (is_star()) return empty_mset();
  if (!is_pair()) throw Error("domain() of a point that is not a pair: " + show());
  return node_->dom;
}

const Point& Point::codomain() const {
  if (is_star()) return *this;
  if (!is_pair()) throw Error("codomain() of a point that is not a pair: " + show());
  return node_->cod.front();
}

Index Point::tag() const {
  if (!is_tagged()) throw Error("tag() of an untagged point");
  return node_->tag;
}

const Point& Point::value() const {
  if (!is_tagged()) throw Error("value() of an untagged point");
  return node_->cod.front();
}

std::size_t Point::size() const { return node_->size; }
std::size_t Point::weight() const { return node_->weight; }

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.kind() != b.kind()) return a.kind() <=> b.kind();
  switch (a.kind()) {
    case Point::Kind::Star: return std::strong_ordering::equal;
    case Point::Kind::Atom: return a.atom_name() <=> b.atom_name();
    case Point::Kind::Pair: {
      if (auto c = a.codomain() <=> b.codomain(); c != 0) return c;
      return a.domain() <=> b.domain();
    }
    case Point::Kind::Tagged: {
      if (auto c = a.tag() <=> b.tag(); c != 0) return c;
      return a.value() <=> b.value();
    }
  }
  return std::strong_ordering::equal;
}

std::string Point::show() const {
  switch (kind()) {
    case Kind::Star: return "*";
    case Kind::Atom: return atom_name();
    case Kind::Tagged: return "(" + std::to_string(tag()) + ":" + value().show() + ")";
    case Kind::Pair: {
      std::string s = "([";
      bool first = true;
      for (const auto& b : domain().elements()) {
        if (!first) s += ",";
        s += b.show();
        first = false;
      }
      return s + "]," + codomain().show() + ")";
    }
  }
  return "";
}

std::size_t dinfr_size(const Point& a) { return a.size(); }

void Carriers::declare(const std::string& atom, std::vector<std::string> elements) {
  if (sets_.count(atom)) throw Error("carrier for atom " + atom + " declared twice");
  sets_.emplace(atom, std::move(elements));
}

const std::vector<std::string>& Carriers::elements(const std::string& atom) const {
  auto it = sets_.find(atom);
  if (it == sets_.end()) throw Error("no carrier declared for atom " + atom);
  return it->second;
}

bool conforms(const Point& a, const SimpleType& sigma, const Carriers* carriers) {
  if (sigma.is_atom()) {
    if (!a.is_atom()) return false;
    if (!carriers) return true;
    if (!carriers->declared(sigma.name())) return false;
    const auto& els = carriers->elements(sigma.name());
    return std::find(els.begin(), els.end(), a.atom_name()) != els.end();
  }
  if (!a.is_pair()) return false;
  for (const auto& [b, c] : a.domain())
    if (!conforms(b, sigma.from(), carriers)) return false;
  return conforms(a.codomain(), sigma.to(), carriers);
}

bool is_dinf_point(const Point& a) {
  if (a.is_star()) return true;
  if (!a.is_pair()) return false;
  for (const auto& [b, c] : a.domain())
    if (!is_dinf_point(b)) return false;
  return is_dinf_point(a.codomain());
}

namespace {

// Multisets over pool whose total item weight is exactly w.
void multisets_of_weight(const std::vector<std::pair<Point, std::size_t>>& pool, std::size_t start,
                         std::size_t w, Multiset<Point>& cur, std::vector<Multiset<Point>>& out) {
  if (w == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    const auto& [p, pw] = pool[i];
    if (pw > w) continue;
    cur.add(p);
    multisets_of_weight(pool, i, w - pw, cur, out);
    cur.remove(p);
  }
}

// Points of exact weight w, built from a generator of the domain and
// codomain layers.
std::vector<Point> pairs_of_weight(std::size_t w, const std::function<const std::vector<Point>&(std::size_t)>& dom_layer,
                                   const std::function<const std::vector<Point>&(std::size_t)>& cod_layer) {
  std::vector<Point> out;
  if (w >= 1)
    for (const auto& a : cod_layer(w - 1)) {
      Point p = Point::pair({}, a);
      if (!p.is_star() && p.weight() == w) out.push_back(p);
    }
  std::vector<std::pair<Point, std::size_t>> pool;
  for (std::size_t k = 0; k + 1 <= w; ++k)
    for (const auto& b : dom_layer(k)) pool.emplace_back(b, 1 + k);
  for (std::size_t wm = 1; wm <= w; ++wm) {
    std::vector<Multiset<Point>> ms;
    Multiset<Point> cur;
    multisets_of_weight(pool, 0, wm, cur, ms);
    for (const auto& a : cod_layer(w - wm))
      for (const auto& m : ms) out.push_back(Point::pair(m, a));
  }
  return out;
}

}  // namespace

std::vector<Point> enumerate_dinf(std::size_t bound) {
  std::vector<std::vector<Point>> layers;
  layers.push_back({Point::star()});
  std::function<const std::vector<Point>&(std::size_t)> layer = [&](std::size_t k) -> const std::vector<Point>& {
    return layers.at(k);
  };
  for (std::size_t w = 1; w <= bound; ++w) layers.push_back(pairs_of_weight(w, layer, layer));
  std::set<Point> all;
  for (const auto& l : layers) all.insert(l.begin(), l.end());
  return {all.begin(), all.end()};
}

namespace {

struct TypedLayers {
  const Carriers& carriers;
  std::map<std::pair<SimpleType, std::size_t>, std::vector<Point>> memo;

  const std::vector<Point>& get(const SimpleType& s, std::size_t w) {
    auto key = std::make_pair(s, w);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Point> out;
    if (s.is_atom()) {
      if (w == 0)
        for (const auto& e : carriers.elements(s.name())) out.push_back(Point::atom(e));
    } else {
      std::function<const std::vector<Point>&(std::size_t)> dom = [&](std::size_t k) -> const std::vector<Point>& {
        return get(s.from(), k);
      };
      std::function<const std::vector<Point>&(std::size_t)> cod = [&](std::size_t k) -> const std::vector<Point>& {
        return get(s.to(), k);
      };
      out = pairs_of_weight(w, dom, cod);
    }
    return memo.insert_or_assign(key, std::move(out)).first->second;
  }
};

}  // namespace

std::vector<Point> enumerate_points(const SimpleType& sigma, std::size_t bound, const Carriers& carriers) {
  TypedLayers layers{carriers, {}};
  std::set<Point> all;
  for (std::size_t w = 0; w <= bound; ++w) {
    const auto& l = layers.get(sigma, w);
    all.insert(l.begin(), l.end());
  }
  return {all.begin(), all.end()};
}

std::vector<Multiset<Point>> enumerate_multisets(const std::vector<Point>& pool, std::size_t max_card) {
  std::vector<Multiset<Point>> out;
  Multiset<Point> cur;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t start, std::size_t left) {
    out.push_back(cur);
    if (left == 0) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      cur.add(pool[i]);
      go(i, left - 1);
      cur.remove(pool[i]);
    }
  };
  go(0, max_card);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ilj
