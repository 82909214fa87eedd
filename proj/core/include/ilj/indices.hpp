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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ilj/error.hpp"

namespace ilj {

using Index = std::uint64_t;

class IndexSet {
 public:
  using const_iterator = std::set<Index>::const_iterator;

  IndexSet() = default;
  IndexSet(std::initializer_list<Index> xs) : elems_(xs) {}
  explicit IndexSet(std::set<Index> xs) : elems_(std::move(xs)) {}

  // {first, first+1, ..., first+count-1}
  static IndexSet range(Index first, std::size_t count);

  bool contains(Index i) const { return elems_.count(i) != 0; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const_iterator begin() const { return elems_.begin(); }
  const_iterator end() const { return elems_.end(); }
  const std::set<Index>& elements() const { return elems_; }
  Index max() const;

  void insert(Index i) { elems_.insert(i); }

  bool subset_of(const IndexSet& other) const;
  bool disjoint(const IndexSet& other) const;
  IndexSet intersect(const IndexSet& other) const;
  IndexSet unite(const IndexSet& other) const;
  IndexSet minus(const IndexSet& other) const;
  // J + K; throws when J and K overlap.
  IndexSet disjoint_sum(const IndexSet& other) const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::set<Index> elems_;
};

// A finite map between index sets. Finite maps are almost injective.
class IndexMap {
 public:
  using const_iterator = std::map<Index, Index>::const_iterator;

  IndexMap() = default;
  IndexMap(std::initializer_list<std::pair<const Index, Index>> xs) : graph_(xs) {}
  explicit IndexMap(std::map<Index, Index> g) : graph_(std::move(g)) {}

  static IndexMap identity(const IndexSet& on);
  static IndexMap constant(const IndexSet& on, Index target);

  IndexSet source() const;
  IndexSet image() const;
  std::size_t size() const { return graph_.size(); }
  bool empty() const { return graph_.empty(); }
  const_iterator begin() const { return graph_.begin(); }
  const_iterator end() const { return graph_.end(); }
  const std::map<Index, Index>& graph() const { return graph_; }

  bool defined_at(Index i) const { return graph_.count(i) != 0; }
  std::optional<Index> find(Index i) const;
  Index operator()(Index i) const;  // throws outside the source

  void set(Index from, Index to) { graph_[from] = to; }

  IndexSet preimage(Index k) const;
  IndexSet preimage(const IndexSet& ks) const;
  IndexMap restrict(const IndexSet& on) const;
  bool injective() const;
  bool is_bijection_onto(const IndexSet& target) const;
  IndexMap inverse() const;  // throws unless injective
  // Union of graphs with disjoint sources; throws on overlap.
  IndexMap disjoint_union(const IndexMap& other) const;

  friend bool operator==(const IndexMap&, const IndexMap&) = default;
  friend auto operator<=>(const IndexMap&, const IndexMap&) = default;

 private:
  std::map<Index, Index> graph_;
};

// outer ∘ inner; every image point of inner must lie in the source of outer.
IndexMap compose(const IndexMap& outer, const IndexMap& inner);

IndexSet preimage(const IndexMap& u, Index k);

template <class E>
class Multiset {
 public:
  using const_iterator = typename std::map<E, std::size_t>::const_iterator;

  Multiset() = default;
  Multiset(std::initializer_list<E> xs) {
    for (const auto& x : xs) add(x);
  }
  template <class Range>
  static Multiset from_range(const Range& xs) {
    Multiset m;
    for (const auto& x : xs) m.add(x);
    return m;
  }

  void add(const E& e, std::size_t n = 1) {
    if (n != 0) counts_[e] += n;
  }
  // Removes n copies; throws when fewer are present.
  void remove(const E& e, std::size_t n = 1) {
    auto it = counts_.find(e);
    if (it == counts_.end() || it->second < n) throw Error("multiset: removing absent element");
    it->second -= n;
    if (it->second == 0) counts_.erase(it);
  }

  std::size_t count(const E& e) const {
    auto it = counts_.find(e);
    return it == counts_.end() ? 0 : it->second;
  }
  std::size_t card() const {
    std::size_t n = 0;
    for (const auto& [e, c] : counts_) n += c;
    return n;
  }
  std::size_t distinct() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }
  const std::map<E, std::size_t>& counts() const { return counts_; }
  const_iterator begin() const { return counts_.begin(); }
  const_iterator end() const { return counts_.end(); }

  // Elements with repetition, ascending.
  std::vector<E> elements() const {
    std::vector<E> out;
    for (const auto& [e, c] : counts_)
      for (std::size_t k = 0; k < c; ++k) out.push_back(e);
    return out;
  }

  bool includes(const Multiset& sub) const {
    for (const auto& [e, c] : sub.counts_)
      if (count(e) < c) return false;
    return true;
  }

  Multiset& operator+=(const Multiset& other) {
    for (const auto& [e, c] : other.counts_) counts_[e] += c;
    return *this;
  }
  friend Multiset operator+(Multiset a, const Multiset& b) { return a += b; }
  Multiset operator-(const Multiset& other) const {
    Multiset out = *this;
    for (const auto& [e, c] : other.counts_) out.remove(e, c);
    return out;
  }

  friend bool operator==(const Multiset&, const Multiset&) = default;
  friend auto operator<=>(const Multiset& a, const Multiset& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  std::map<E, std::size_t> counts_;
};

template <class E>
Multiset<E> mset_from_list(const std::vector<E>& items) {
  return Multiset<E>::from_range(items);
}

// [ family(i) | i ∈ J ]
template <class E>
Multiset<E> mset_select(const std::map<Index, E>& family, const IndexSet& j) {
  Multiset<E> m;
  for (Index i : j) {
    auto it = family.find(i);
    if (it == family.end()) throw Error("mset_select: index " + std::to_string(i) + " outside family");
    m.add(it->second);
  }
  return m;
}

// j if j < i, else j + 1.
inline Index csucc(Index j, Index i) { return j < i ? j : j + 1; }

// Removes the i-th entry (1-based).
template <class E>
std::vector<E> seq_delete(const std::vector<E>& s, std::size_t i) {
  if (i < 1 || i > s.size())
    throw Error("seq_delete: position " + std::to_string(i) + " out of range");
  std::vector<E> out;
  out.reserve(s.size() - 1);
  for (std::size_t k = 0; k < s.size(); ++k)
    if (k + 1 != i) out.push_back(s[k]);
  return out;
}

std::string to_string(const IndexSet& s);
std::string to_string(const IndexMap& u);

}  // namespace ilj
