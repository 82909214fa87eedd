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
#include <map>
#include <string>
#include <vector>

#include "ilj/formulas.hpp"
#include "ilj/itsys.hpp"
#include "ilj/ljker.hpp"

namespace ilj {

// A J-indexed family of intersection typings of one subject over one
// variable spine.
struct FamilyTyping {
  IndexSet indices;
  Term subject;
  std::vector<VarDecl> vars;
  std::map<Index, TypingDeriv> derivations;
};

// Every derivation checks, has the shared subject and spine, and J is
// exactly the key set.
Verdict check_family(const FamilyTyping& f, const Carriers* carriers = nullptr);

// Per-j derivations of x_i : fam(⟨A_i⟩u_i)_j ⊢ ⌊π⌋ : fam(B)_j. Throws if π
// does not check or if the multiset identity of an elimination fails.
FamilyTyping soundness(const Proof& pi, const std::vector<std::string>& vars);

struct Scaffold {
  std::vector<Hypothesis> hyps;
  Formula conclusion;
};

// Throws unless fam(B)_j and fam(⟨A_i⟩u_i)_j match the family.
void check_scaffold(const FamilyTyping& f, const Scaffold& s);

// A proof of the scaffold sequent whose term is η-equal to the subject
// (typed) or lies in Q°(subject) (untyped).
Proof completeness(const FamilyTyping& f, const Scaffold& s, IndexAllocator& alloc);

// Number of arrows an untyped conclusion needs for the subject:
// λ adds one, application consumes one.
std::size_t required_arrows(const Term& m);

// A scaffold built from the family by representation, with an untyped
// conclusion deep enough for the subject.
Scaffold synthesize_scaffold(const FamilyTyping& f, IndexAllocator& alloc);
Proof completeness(const FamilyTyping& f, IndexAllocator& alloc);

}  // namespace ilj
