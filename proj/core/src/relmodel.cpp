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

#include "ilj/relmodel.hpp"

#include <map>

namespace ilj {

Object Object::base(std::set<Point> elements) {
  Object o;
  o.kind_ = Kind::Base;
  o.elems_ = std::move(elements);
  return o;
}

Object Object::product(std::vector<Object> components) {
  Object o;
  o.kind_ = Kind::Product;
  o.parts_ = std::move(components);
  return o;
}

Object Object::arrow(Object from, Object to) {
  Object o;
  o.kind_ = Kind::Arrow;
  o.parts_ = {std::move(from), std::move(to)};
  return o;
}

const std::set<Point>& Object::elements() const {
  if (kind_ != Kind::Base) throw Error("elements() of a non-base object");
  return elems_;
}

const Object& Object::from() const {
  if (kind_ != Kind::Arrow) throw Error("from() of a non-arrow object");
  return parts_[0];
}

const Object& Object::to() const {
  if (kind_ != Kind::Arrow) throw Error("to() of a non-arrow object");
  return parts_[1];
}

bool Object::contains(const Point& p) const {
  switch (kind_) {
    case Kind::Base: return elems_.count(p) != 0;
    case Kind::Product:
      return p.is_tagged() && p.tag() >= 1 && p.tag() <= parts_.size() && parts_[p.tag() - 1].contains(p.value());
    case Kind::Arrow: {
      if (!p.is_function()) return false;
      for (const auto& [a, c] : p.domain())
        if (!from().contains(a)) return false;
      return to().contains(p.codomain());
    }
  }
  return false;
}

bool Object::finite() const {
  switch (kind_) {
    case Kind::Base: return true;
    case Kind::Product:
      for (const auto& c : parts_)
        if (!c.finite()) return false;
      return true;
    case Kind::Arrow: return false;
  }
  return false;
}

std::vector<Point> Object::enumerate() const {
  switch (kind_) {
    case Kind::Base: return {elems_.begin(), elems_.end()};
    case Kind::Product: {
      std::vector<Point> out;
      for (std::size_t i = 0; i < parts_.size(); ++i)
        for (const auto& a : parts_[i].enumerate()) out.push_back(Point::tagged(i + 1, a));
      return out;
    }
    case Kind::Arrow: throw Error("arrow objects are infinite");
  }
  return {};
}

bool operator==(const Object& a, const Object& b) {
  return a.kind_ == b.kind_ && a.elems_ == b.elems_ && a.parts_ == b.parts_;
}

Morphism::Morphism(Object source, Object target, std::set<Pair> pairs)
    : source_(std::move(source)), target_(std::move(target)) {
  for (auto& [m, b] : pairs) add(m, b);
}

void Morphism::add(Multiset<Point> m, Point b) {
  for (const auto& [a, c] : m)
    if (!source_.contains(a)) throw Error("morphism pair draws " + a.show() + " outside its source");
  if (!target_.contains(b)) throw Error("morphism pair targets " + b.show() + " outside its target");
  pairs_.emplace(std::move(m), std::move(b));
}

Morphism identity(const Object& x) {
  Morphism id(x, x);
  for (const auto& a : x.enumerate()) id.add(Multiset<Point>{a}, a);
  return id;
}

Morphism compose(const Morphism& t, const Morphism& s) {
  if (!(s.target() == t.source())) throw Error("compose: object mismatch");
  std::map<Point, std::vector<const Multiset<Point>*>> by_target;
  for (const auto& [m, b] : s.pairs()) by_target[b].push_back(&m);
  Morphism out(s.source(), t.target());
  for (const auto& [mt, c] : t.pairs()) {
    // Sums m_1 + ... + m_k over all assignments of s-pairs to the b_j.
    std::set<Multiset<Point>> partial{Multiset<Point>{}};
    for (const auto& b : mt.elements()) {
      auto it = by_target.find(b);
      if (it == by_target.end()) {
        partial.clear();
        break;
      }
      std::set<Multiset<Point>> next;
      for (const auto& p : partial)
        for (const auto* m : it->second) next.insert(p + *m);
      partial = std::move(next);
    }
    for (const auto& m : partial) out.add(m, c);
  }
  return out;
}

Morphism curry(const Morphism& s) {
  const Object& zx = s.source();
  if (zx.kind() != Object::Kind::Product || zx.components().size() != 2)
    throw Error("curry: source is not a binary product");
  const Object& z = zx.components()[0];
  const Object& x = zx.components()[1];
  Morphism out(z, Object::arrow(x, s.target()));
  for (const auto& [m, b] : s.pairs()) {
    Multiset<Point> left, right;
    for (const auto& [p, c] : m) {
      if (!p.is_tagged() || (p.tag() != 1 && p.tag() != 2)) throw Error("curry: malformed tag on " + p.show());
      (p.tag() == 1 ? left : right).add(p.value(), c);
    }
    out.add(left, Point::pair(right, b));
  }
  return out;
}

Morphism uncurry(const Morphism& s) {
  const Object& xy = s.target();
  if (xy.kind() != Object::Kind::Arrow) throw Error("uncurry: target is not an arrow object");
  Morphism out(Object::product({s.source(), xy.from()}), xy.to());
  for (const auto& [m, p] : s.pairs()) {
    Multiset<Point> both;
    for (const auto& [c, k] : m) both.add(Point::tagged(1, c), k);
    for (const auto& [a, k] : p.domain()) both.add(Point::tagged(2, a), k);
    out.add(both, p.codomain());
  }
  return out;
}

Morphism ev_fragment(const Object& x, const Object& y, std::size_t cap) {
  Object fx = Object::arrow(x, y);
  Morphism out(Object::product({fx, x}), y);
  for (const auto& m : enumerate_multisets(x.enumerate(), cap))
    for (const auto& b : y.enumerate()) {
      Multiset<Point> arg{Point::tagged(1, Point::pair(m, b))};
      for (const auto& [a, k] : m) arg.add(Point::tagged(2, a), k);
      out.add(arg, b);
    }
  return out;
}

Morphism projection(const Object& product, std::size_t i) {
  if (product.kind() != Object::Kind::Product || i < 1 || i > product.components().size())
    throw Error("projection: bad component " + std::to_string(i));
  const Object& xi = product.components()[i - 1];
  Morphism out(product, xi);
  for (const auto& a : xi.enumerate()) out.add(Multiset<Point>{Point::tagged(i, a)}, a);
  return out;
}

Morphism tuple(const std::vector<Morphism>& parts) {
  if (parts.empty()) throw Error("tuple of no morphisms");
  std::vector<Object> targets;
  for (const auto& s : parts) {
    if (!(s.source() == parts.front().source())) throw Error("tuple: sources differ");
    targets.push_back(s.target());
  }
  Morphism out(parts.front().source(), Object::product(targets));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& [m, b] : parts[i].pairs()) out.add(m, Point::tagged(i + 1, b));
  return out;
}

}  // namespace ilj
