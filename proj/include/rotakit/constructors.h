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

#ifndef ROTAKIT_CONSTRUCTORS_H_
#define ROTAKIT_CONSTRUCTORS_H_

#include <string>
#include <vector>

#include "rotakit/conditions.h"
#include "rotakit/model.h"
#include "rotakit/rights.h"
#include "rotakit/solvers.h"

namespace rotakit {

// Rule tags stored on the arcs of the canonical structures.
enum CanonicalRule {
  kRuleWithinGraph = 1,     // (z, R) -> (x, R)
  kRuleGraphToBase = 2,     // (z, R) -> x for x in L_i(z, R)
  kRuleBaseToGraph = 3,     // x -> (z, R)
  kRuleBaseToBase = 4,      // x -> y
};

// States: one base state per alternative (in alternative order) followed by
// one graph-pair state (z, R) per z in F(R), profile by profile. Every arc
// grants each agent individually:
//   (z, R) -> (x, R) for all x != z in F(R);
//   (z, R) -> x whenever x is in L_i(z, R), for agent i only;
//   x -> (z, R) and x -> y for all distinct base states.
// Graph-pair states of different profiles are not connected.
RightsStructure build_full_rights_structure(const SocialChoiceRule& f);

// As above, but moves inside F(R) only go from (x(k, R), R) to
// (x(k+1, R), R), following the given circular orderings.
RightsStructure build_consecutive_rights_structure(
    const SocialChoiceRule& f, const OrderingWitness& orderings);

// The state index of base state x and of graph-pair state (z, R).
int base_state(const RightsStructure& rights, AltIndex x);
int graph_state(const RightsStructure& rights, int profile, AltIndex z);

struct DiagnosticSets {
  StateSet m;  // Graph-pair states of profile R.
  StateSet u;  // Base states every agent ranks at the top.
  // Graph-pair states of R' with no improvement path at R into m and u,
  // keyed by R'. Profiles with an empty set are omitted.
  std::vector<std::pair<int, StateSet>> q_by_profile;
  StateSet q;  // Union of q_by_profile.

  StateSet union_all() const;
};

// Built on a structure from one of the constructors above.
DiagnosticSets compute_diagnostic_sets(const RightsStructure& rights,
                                       const SocialChoiceRule& f,
                                       int profile);

struct ProfileImplementation {
  int profile = -1;
  bool ok = true;
  AltSet expected;
  AltSet produced;  // h-image of the MSS.
  std::string reason;
  std::vector<std::vector<int>> blocks;  // Rotation programs when checked.
};

struct ImplementationVerdict {
  bool ok = true;
  std::vector<ProfileImplementation> profiles;
};

// h(MSS(Gamma, R)) == F(R) at every profile.
ImplementationVerdict verify_implementation_in_mss(
    const RightsStructure& rights, const SocialChoiceRule& f);

// As above, and the MSS at every profile splits into rotation programs
// whose outcome sets all equal F(R).
ImplementationVerdict verify_implementation_in_rotation_programs(
    const RightsStructure& rights, const SocialChoiceRule& f,
    RotationDirection direction = RotationDirection::kForward);

}  // namespace rotakit

#endif  // ROTAKIT_CONSTRUCTORS_H_
