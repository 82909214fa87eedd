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
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ilj/indices.hpp"
#include "ilj/terms.hpp"

namespace ilj {

// A point of a relational object: ⋆, an atom element, a pair (m, a)
// with m a finite multiset, or a tagged point (i, a) of a product.
// The pair ([], ⋆) is normalized to ⋆, so ⋆ unfolds to ([], ⋆).
class Point {
 public:
  enum class Kind { Star, Atom, Pair, Tagged };

  static Point star();
  static Point atom(std::string name);
  static Point pair(Multiset<Point> m, Point a);
  static Point tagged(Index tag, Point a);

  Kind kind() const;
  bool is_star() const { return kind() == Kind::Star; }
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_pair() const { return kind() == Kind::Pair; }
  bool is_tagged() const { return kind() == Kind::Tagged; }
  // ⋆ and pairs both read as (m, a).
  bool is_function() const { return is_star() || is_pair(); }

  const std::string& atom_name() const;
  const Multiset<Point>& domain() const;  // [] for ⋆
  const Point& codomain() const;          // ⋆ for ⋆
  Index tag() const;
  const Point& value() const;  // tagged points

  // size(⋆) = 0, size((m, a)) = size(a) + Σ (1 + size(b)) over m.
  std::size_t size() const;
  // Enumeration measure: size plus one per empty multiset inside a
  // non-⋆ pair. Unlike size it has finitely many points per value,
  // since ([], a) and a have equal size.
  std::size_t weight() const;

  friend std::strong_ordering operator<=>(const Point& a, const Point& b);
  friend bool operator==(const Point& a, const Point& b) { return (a <=> b) == 0; }

  std::string show() const;

 private:
  struct Node;
  explicit Point(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

using PointSet = std::set<Point>;
using Family = std::map<Index, Point>;

std::size_t dinfr_size(const Point& a);

// Finite interpretations of atomic types, e.g. ⟦α⟧ = {p, q}.
class Carriers {
 public:
  Carriers() = default;
  void declare(const std::string& atom, std::vector<std::string> elements);
  bool declared(const std::string& atom) const { return sets_.count(atom) != 0; }
  const std::vector<std::string>& elements(const std::string& atom) const;
  const std::map<std::string, std::vector<std::string>>& all() const { return sets_; }

 private:
  std::map<std::string, std::vector<std::string>> sets_;
};

// Membership of a point in ⟦σ⟧; carrier membership of atoms is checked
// only when carriers are supplied.
bool conforms(const Point& a, const SimpleType& sigma, const Carriers* carriers = nullptr);
bool is_dinf_point(const Point& a);

// Points of ⟦σ⟧ (resp. D∞) of weight at most bound, ascending.
std::vector<Point> enumerate_points(const SimpleType& sigma, std::size_t bound, const Carriers& carriers);
std::vector<Point> enumerate_dinf(std::size_t bound);

// All multisets of cardinality at most k over the given points, ascending.
std::vector<Multiset<Point>> enumerate_multisets(const std::vector<Point>& pool, std::size_t max_card);

}  // namespace ilj
