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

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "ilj/error.hpp"
#include "ilj/formulas.hpp"
#include "ilj/terms.hpp"

namespace ilj {

// ⟨A_1⟩u_1, ..., ⟨A_n⟩u_n ⊢ B
struct Sequent {
  std::vector<Hypothesis> hyps;
  Formula conclusion;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

// Elimination witness for one hypothesis: the parts of dom(E_i) sent to
// the function premise (left) and to the argument premise (right).
struct ElimSplit {
  IndexSet left;
  IndexSet right;

  friend bool operator==(const ElimSplit&, const ElimSplit&) = default;
};

enum class ProofRule { Axiom, Intro, Elim, StarAxiom };

// Hypotheses are numbered from 0 in this interface.
class Proof {
 public:
  static Proof axiom(Sequent s, std::size_t i);
  static Proof intro(Sequent s, Proof premise);
  static Proof elim(Sequent s, Proof fun, Proof arg, std::vector<ElimSplit> splits);
  // Untyped only: every hypothesis and the conclusion have empty domain.
  static Proof star_axiom(Sequent s);

  ProofRule rule() const;
  const Sequent& sequent() const;
  const Formula& conclusion() const { return sequent().conclusion; }
  const std::vector<Hypothesis>& hyps() const { return sequent().hyps; }
  std::size_t axiom_index() const;
  const std::vector<Proof>& premises() const;
  const std::vector<ElimSplit>& splits() const;
  std::size_t size() const;

  friend bool operator==(const Proof& a, const Proof& b);

 private:
  struct Node;
  static std::shared_ptr<Node> make_node(ProofRule r, Sequent s);
  explicit Proof(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

const char* rule_name(ProofRule r);

Verdict check_proof(const Proof& p);
Term extract_term(const Proof& p, const std::vector<std::string>& vars);

// Builders computing the conclusion from the side data.
Proof make_axiom(const std::vector<Hypothesis>& hyps, std::size_t i);
Proof make_intro(const Proof& premise);
// hyps are the conclusion hypotheses ⟨E_i⟩w_i; the splits are read off
// the premise domains.
Proof make_elim(const std::vector<Hypothesis>& hyps, const Proof& fun, const Proof& arg);

Proof weaken(const Proof& p, const Formula& b, std::size_t position);
Proof relocate_proof(const Proof& p, const IndexMap& u);
Proof restrict_proof(const Proof& p, const IndexSet& j);

// The merged hypotheses ⟨C_j⟩w_j of a substitution, one per hypothesis
// of μ other than i.
struct MergeData {
  std::vector<Hypothesis> merged;
};

// μ : ⟨A_j⟩u_j ⊢ A and ρ : ⟨B_j⟩v_j ⊢ A_i (n-1 hypotheses) give
// π : ⟨C_j⟩w_j ⊢ A with ⌊π⌋ = ⌊μ⌋[⌊ρ⌋/x_i].
Proof substitute_proof(const Proof& mu, const Proof& rho, std::size_t i, const MergeData& data);
// Merge data C_j = A_{j◁i} ⊔ B_j, w_j = u_{j◁i} ∪ u_i∘v_j.
MergeData derive_merge_data(const Proof& mu, const Proof& rho, std::size_t i);
// ρ : ⟨B⟩v ⊢ A_i replaces hypothesis i of μ by ⟨B⟩(u_i∘v).
Proof subst_single(const Proof& mu, const Proof& rho, std::size_t i);
// μ : ⟨A⟩v ⊢ B and ρ : ⟨A_j⟩u_j ⊢ A give ⟨A_j⟩(v∘u_j) ⊢ B.
Proof subst_into_single(const Proof& mu, const Proof& rho);

// ⟨A⟩id ⊢ B for similar A and B.
Proof sim_conversion(const Formula& a, const Formula& b);
// Untyped: a proof of hyps ⊢ A when every domain is empty.
Proof empty_proof(const Formula& a, const std::vector<Formula>& hyps);

}  // namespace ilj
