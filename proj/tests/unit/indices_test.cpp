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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "ilj/indices.hpp"

namespace ilj {
namespace {

TEST(Multiset, FromListCounts) {
  auto m = mset_from_list(std::vector<int>{0, 1, 0, 2, 1});
  EXPECT_EQ(m.count(0), 2u);
  EXPECT_EQ(m.count(1), 2u);
  EXPECT_EQ(m.count(2), 1u);
  EXPECT_EQ(m.count(3), 0u);
  EXPECT_EQ(m.card(), 5u);
}

TEST(Multiset, EmptyList) {
  auto m = mset_from_list(std::vector<int>{});
  EXPECT_TRUE(m.empty());
  EXPECT_EQ(m.card(), 0u);
}

TEST(Multiset, SumAddsCounts) {
  auto m = mset_from_list(std::vector<std::string>{"a", "a", "b"}) + mset_from_list(std::vector<std::string>{"a"});
  EXPECT_EQ(m.count("a"), 3u);
  EXPECT_EQ(m.count("b"), 1u);
}

TEST(Multiset, DifferenceAndRemove) {
  auto m = mset_from_list(std::vector<int>{1, 1, 2});
  EXPECT_EQ(m - Multiset<int>{1}, (Multiset<int>{1, 2}));
  EXPECT_THROW(m - Multiset<int>{3}, Error);
  EXPECT_TRUE(m.includes(Multiset<int>{1, 1}));
  EXPECT_FALSE(m.includes(Multiset<int>{2, 2}));
}

TEST(Multiset, SelectFromFamily) {
  std::map<Index, char> fam{{1, 'a'}, {2, 'a'}, {3, 'b'}};
  EXPECT_EQ(mset_select(fam, IndexSet{1, 2}), (Multiset<char>{'a', 'a'}));
  EXPECT_TRUE(mset_select(fam, IndexSet{}).empty());
  EXPECT_EQ(mset_select(std::map<Index, char>{{1, 'a'}}, IndexSet{1}), (Multiset<char>{'a'}));
  EXPECT_THROW(mset_select(fam, IndexSet{9}), Error);
}

TEST(IndexMap, Preimage) {
  IndexMap u{{1, 5}, {2, 5}};
  EXPECT_EQ(u.preimage(5), (IndexSet{1, 2}));
  EXPECT_TRUE(IndexMap{}.preimage(4).empty());
  EXPECT_TRUE((IndexMap{{3, 7}}).preimage(8).empty());
}

TEST(IndexMap, ComposeInverseRestrict) {
  IndexMap u{{1, 5}, {2, 6}};
  IndexMap v{{5, 9}, {6, 8}};
  EXPECT_EQ(compose(v, u), (IndexMap{{1, 9}, {2, 8}}));
  EXPECT_EQ(u.inverse(), (IndexMap{{5, 1}, {6, 2}}));
  EXPECT_THROW((IndexMap{{1, 5}, {2, 5}}).inverse(), Error);
  EXPECT_EQ(u.restrict(IndexSet{2}), (IndexMap{{2, 6}}));
  EXPECT_TRUE(u.is_bijection_onto(IndexSet{5, 6}));
  EXPECT_FALSE(u.is_bijection_onto(IndexSet{5}));
  EXPECT_THROW(u.disjoint_union(IndexMap{{2, 1}}), Error);
}

TEST(IndexSet, DisjointSum) {
  IndexSet a{1, 2};
  EXPECT_EQ(a.disjoint_sum(IndexSet{3}), (IndexSet{1, 2, 3}));
  EXPECT_THROW(a.disjoint_sum(IndexSet{2}), Error);
  EXPECT_EQ(a.minus(IndexSet{1}), IndexSet{2});
  EXPECT_EQ(IndexSet::range(4, 3), (IndexSet{4, 5, 6}));
}

TEST(Csucc, BothBranches) {
  EXPECT_EQ(csucc(1, 3), 1u);
  EXPECT_EQ(csucc(3, 3), 4u);
  EXPECT_EQ(csucc(1, 1), 2u);
}

TEST(SeqDelete, Positions) {
  std::vector<char> s{'a', 'b', 'c'};
  EXPECT_EQ(seq_delete(s, 2), (std::vector<char>{'a', 'c'}));
  EXPECT_TRUE(seq_delete(std::vector<char>{'a'}, 1).empty());
  EXPECT_THROW(seq_delete(std::vector<char>{'a', 'b'}, 3), Error);
  EXPECT_THROW(seq_delete(s, 0), Error);
}

}  // namespace
}  // namespace ilj
