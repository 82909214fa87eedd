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

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ilj/church.hpp"
#include "ilj/formulas.hpp"
#include "ilj/itsys.hpp"
#include "ilj/ljker.hpp"
#include "ilj/relmodel.hpp"
#include "ilj/xlate.hpp"

namespace ilj::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  // Uniform in [0, n).
  std::size_t below(std::size_t n);
  bool coin(double p = 0.5);
  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs.at(below(xs.size()));
  }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

// ⟦a⟧ = {p, q}, ⟦b⟧ = {r}.
const Carriers& test_carriers();

SimpleType random_type(Rng& rng, std::size_t depth);
Point random_dinf_point(Rng& rng, std::size_t max_size);
Point random_typed_point(Rng& rng, const SimpleType& sigma, std::size_t max_weight);
Multiset<Point> random_mset(Rng& rng, const std::vector<Point>& pool, std::size_t max_card);
IndexSet random_indices(Rng& rng, std::size_t max_count, Index range);
IndexMap random_bijection(Rng& rng, const IndexSet& from, Index range);

Morphism random_morphism(Rng& rng, const Object& x, const Object& y, std::size_t max_card, std::size_t pairs);

// Untyped term over the given free variables; ⊥ appears when allowed.
Term random_untyped_term(Rng& rng, std::size_t size, const std::vector<std::string>& vars, bool allow_bot);
// A typed term of type sigma in env, or nullopt when the attempt fails.
std::optional<Term> random_typed_term(Rng& rng, const SimpleType& sigma, const std::vector<VarDecl>& env,
                                      std::size_t size);

// A formula similar to a: arrow sources relocated by random bijections.
Formula scramble(Rng& rng, const Formula& a, Index range);

// Exchange: hypothesis k of p moves to position perm[k].
Proof permute_hyps(const Proof& p, const std::vector<std::size_t>& perm);

// A completeness instance and its proof.
struct CorpusItem {
  bool typed = false;
  FamilyTyping family;
  Scaffold scaffold;
  Proof proof;
  std::vector<std::string> names;
};

struct CorpusOptions {
  std::size_t max_term_size = 6;
  std::size_t max_family = 3;
  SearchBounds bounds{};
  double redex_rate = 0.4;
};

// Searches random small terms; returns nullopt when the draw fails.
std::optional<CorpusItem> random_item(Rng& rng, bool typed, const CorpusOptions& opts = {});
std::vector<CorpusItem> make_corpus(std::uint64_t seed, std::size_t typed, std::size_t untyped,
                                    const CorpusOptions& opts = {});

// Substitution instances: an elim whose function premise is an intro
// gives μ, ρ and the merged hypotheses of the elim conclusion.
struct SubstInstance {
  Proof mu;
  Proof rho;
  std::size_t position;
  MergeData data;
};
std::vector<SubstInstance> redex_instances(const Proof& p);

// Single edits of a pre-term, each breaking one typing condition.
std::vector<PreTerm> church_mutations(const PreTerm& s);

}  // namespace ilj::testing
