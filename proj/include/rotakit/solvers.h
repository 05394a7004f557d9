// Copyright 2026 The Rotakit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROTAKIT_SOLVERS_H_
#define ROTAKIT_SOLVERS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "rotakit/model.h"
#include "rotakit/rights.h"

namespace rotakit {

// Sorted list of state indices.
using StateSet = std::vector<int>;

enum class Concept {
  kCore,
  kAbsorbing,
  kMss,
  kGeneralizedStable,
  kRotationPrograms,
};

std::string concept_name(Concept c);
Concept parse_concept(const std::string& name);

// A witness path from a state outside the solution into it.
struct EntryWitness {
  int from = -1;
  MyopicPath path;
};

struct SolutionReport {
  Concept concept_tag = Concept::kCore;
  std::vector<StateSet> state_sets;
  std::vector<AltSet> outcome_sets;  // h-image of each state set.
  std::vector<EntryWitness> witnesses;
  // Set by compute_mss. Both hold for the union of absorbing sets; a false
  // value signals an internal inconsistency.
  bool deterrence = true;
  bool external_stability = true;
};

// h-image of a state set.
AltSet outcomes_of(const RightsStructure& rights, const StateSet& states);

// States with no outgoing improving move.
SolutionReport compute_core(const SocialEnvironment& env);

// Strongly connected components via Tarjan's algorithm. Components are
// listed in reverse topological order; members are sorted.
std::vector<StateSet> strongly_connected_components(
    const ImprovementDigraph& g);

// Terminal strongly connected components, ordered by smallest member.
std::vector<StateSet> compute_absorbing_sets(const SocialEnvironment& env);
std::vector<StateSet> compute_absorbing_sets(const ImprovementDigraph& g);

// The union of all absorbing sets, together with a shortest entry path
// from every state outside it.
SolutionReport compute_mss(const SocialEnvironment& env);
SolutionReport compute_mss(const ImprovementDigraph& g,
                           const RightsStructure& rights);

// True iff `candidate` meets deterrence of external deviations and
// iterated external stability.
bool deters_and_stabilizes(const ImprovementDigraph& g,
                           const std::vector<bool>& candidate);

// Sets V with no improvement path between distinct members and a path into
// V from every outside state. Enumerates one state per absorbing set and
// throws CapExceeded when the number of selections exceeds `cap`.
std::vector<StateSet> compute_generalized_stable_sets(
    const SocialEnvironment& env, std::uint64_t cap = 1u << 16);

// Which coalition clause of a rotation program must prefer the successor.
// kForward: some K in gamma(s_i, s_{i+1}) strictly prefers h(s_{i+1}).
// kLiteral: some K in gamma(s_i, s_{i+1}) strictly prefers h(s_i).
enum class RotationDirection { kForward, kLiteral };

struct RotationProgramVerdict {
  bool ok = true;
  // 1: repeated outcome, 2: improving exit, 3: no entitled coalition.
  int clause = 0;
  int position = -1;  // Index into the ordered list.
  int offending_state = -1;
};

RotationProgramVerdict is_rotation_program(
    const SocialEnvironment& env, const std::vector<int>& ordered,
    RotationDirection direction = RotationDirection::kForward);
RotationProgramVerdict is_rotation_program(
    const ImprovementDigraph& g, const SocialEnvironment& env,
    const std::vector<int>& ordered, RotationDirection direction);

struct PartitionResult {
  bool ok = true;
  std::vector<std::vector<int>> blocks;  // Each block in rotation order.
  int witness_state = -1;                // Set when !ok.
  std::string reason;
};

// Splits `states` (normally the MSS) into rotation programs. A state in a
// program has at most one improving successor, so blocks are read off the
// cycles of the improving successor function; each block is then checked
// and all blocks must share one h-image.
PartitionResult partition_into_rotation_programs(
    const SocialEnvironment& env, const StateSet& states,
    RotationDirection direction = RotationDirection::kForward);
PartitionResult partition_into_rotation_programs(
    const ImprovementDigraph& g, const SocialEnvironment& env,
    const StateSet& states, RotationDirection direction);

}  // namespace rotakit

#endif  // ROTAKIT_SOLVERS_H_
