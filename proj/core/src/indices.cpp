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

#include "ilj/indices.hpp"

#include <algorithm>
#include <iterator>

namespace ilj {

IndexSet IndexSet::range(Index first, std::size_t count) {
  IndexSet s;
  for (std::size_t k = 0; k < count; ++k) s.elems_.insert(first + k);
  return s;
}

Index IndexSet::max() const {
  if (elems_.empty()) throw Error("max of empty index set");
  return *elems_.rbegin();
}

bool IndexSet::subset_of(const IndexSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

bool IndexSet::disjoint(const IndexSet& other) const {
  auto a = elems_.begin();
  auto b = other.elems_.begin();
  while (a != elems_.end() && b != other.elems_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
  std::set<Index> out;
  std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                        std::inserter(out, out.end()));
  return IndexSet(std::move(out));
}

IndexSet IndexSet::unite(const IndexSet& other) const {
  std::set<Index> out = elems_;
  out.insert(other.elems_.begin(), other.elems_.end());
  return IndexSet(std::move(out));
}

IndexSet IndexSet::minus(const IndexSet& other) const {
  std::set<Index> out;
  std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                      std::inserter(out, out.end()));
  return IndexSet(std::move(out));
}

IndexSet IndexSet::disjoint_sum(const IndexSet& other) const {
  if (!disjoint(other))
    throw Error("disjoint sum of overlapping index sets " + to_string(*this) + " and " +
                to_string(other));
  return unite(other);
}

IndexMap IndexMap::identity(const IndexSet& on) {
  IndexMap u;
  for (Index i : on) u.graph_.emplace(i, i);
  return u;
}

IndexMap IndexMap::constant(const IndexSet& on, Index target) {
  IndexMap u;
  for (Index i : on) u.graph_.emplace(i, target);
  return u;
}

IndexSet IndexMap::source() const {
  IndexSet s;
  for (const auto& [k, v] : graph_) s.insert(k);
  return s;
}

IndexSet IndexMap::image() const {
  IndexSet s;
  for (const auto& [k, v] : graph_) s.insert(v);
  return s;
}

std::optional<Index> IndexMap::find(Index i) const {
  auto it = graph_.find(i);
  if (it == graph_.end()) return std::nullopt;
  return it->second;
}

Index IndexMap::operator()(Index i) const {
  auto it = graph_.find(i);
  if (it == graph_.end()) throw Error("index map undefined at " + std::to_string(i));
  return it->second;
}

IndexSet IndexMap::preimage(Index k) const {
  IndexSet s;
  for (const auto& [a, b] : graph_)
    if (b == k) s.insert(a);
  return s;
}

IndexSet IndexMap::preimage(const IndexSet& ks) const {
  IndexSet s;
  for (const auto& [a, b] : graph_)
    if (ks.contains(b)) s.insert(a);
  return s;
}

IndexMap IndexMap::restrict(const IndexSet& on) const {
  IndexMap u;
  for (const auto& [a, b] : graph_)
    if (on.contains(a)) u.graph_.emplace(a, b);
  return u;
}

bool IndexMap::injective() const { return image().size() == graph_.size(); }

bool IndexMap::is_bijection_onto(const IndexSet& target) const {
  return injective() && image() == target;
}

IndexMap IndexMap::inverse() const {
  IndexMap u;
  for (const auto& [a, b] : graph_)
    if (!u.graph_.emplace(b, a).second) throw Error("inverse of a non-injective map " + to_string(*this));
  return u;
}

IndexMap IndexMap::disjoint_union(const IndexMap& other) const {
  IndexMap u = *this;
  for (const auto& [a, b] : other.graph_)
    if (!u.graph_.emplace(a, b).second)
      throw Error("union of index maps overlapping at " + std::to_string(a));
  return u;
}

IndexMap compose(const IndexMap& outer, const IndexMap& inner) {
  IndexMap u;
  for (const auto& [a, b] : inner) {
    auto c = outer.find(b);
    if (!c) throw Error("composition: " + std::to_string(b) + " outside the source of the outer map");
    u.set(a, *c);
  }
  return u;
}

IndexSet preimage(const IndexMap& u, Index k) { return u.preimage(k); }

std::string to_string(const IndexSet& s) {
  std::string out = "{";
  bool first = true;
  for (Index i : s) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::string to_string(const IndexMap& u) {
  std::string out = "{";
  bool first = true;
  for (const auto& [a, b] : u) {
    if (!first) out += ",";
    out += std::to_string(a) + "->" + std::to_string(b);
    first = false;
  }
  return out + "}";
}

}  // namespace ilj
