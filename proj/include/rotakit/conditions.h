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

#ifndef ROTAKIT_CONDITIONS_H_
#define ROTAKIT_CONDITIONS_H_

#include <vector>

#include "rotakit/model.h"

namespace rotakit {

struct MaskinVerdict {
  bool ok = true;
  int profile = -1;
  int profile_prime = -1;
  AltIndex z = -1;
};

// z in F(R) and R' a monotonic transformation of R at z imply z in F(R').
MaskinVerdict check_maskin_monotonicity(const SocialChoiceRule& f);

// A chain z = chain[0], ..., chain.back() inside F(R) where agents[k]
// strictly prefers chain[k + 1] to chain[k] at R', ending at an alternative
// other than z where reversal_agent has a preference reversal.
struct IndirectWitness {
  int profile = -1;
  int profile_prime = -1;
  AltIndex z = -1;
  std::vector<AltIndex> chain;
  std::vector<int> agents;
  int reversal_agent = -1;
};

struct IndirectVerdict {
  bool ok = true;
  std::vector<IndirectWitness> witnesses;  // One per trigger.
  // The first trigger without a witness, when !ok.
  int profile = -1;
  int profile_prime = -1;
  AltIndex z = -1;
};

// Trigger: z in F(R), z not in F(R'), and R' a monotonic transformation of R
// at z. Each trigger needs a witness chain; the shortest one is reported.
IndirectVerdict check_indirect_monotonicity(const SocialChoiceRule& f);

// How the chain in the rotation condition ends.
//   kReversalAtEndpoint: zero or more forward steps x(i) -> ... -> x(i+k),
//     each strictly preferred at R' by some agent, then some agent with a
//     preference reversal at x(i+k).
//   kLastMover: h >= 1 forward steps where the agent taking the last step
//     has the reversal at x(i+h).
enum class ChainReading { kReversalAtEndpoint, kLastMover };

struct OrderingOptions {
  int cap = 8;  // Largest #F(R) whose orderings are enumerated.
  ChainReading reading = ChainReading::kReversalAtEndpoint;
};

// A circular ordering of F(R) for each profile of the domain.
using OrderingWitness = std::vector<std::vector<AltIndex>>;

// F(R) != F(R') and either #F(R') > 1 or F(R') = {x} with x not in F(R).
bool rotation_triggered(const SocialChoiceRule& f, int r, int r_prime);

// The chain condition for position i of `ordering` (an ordering of F(R)).
bool rotation_conclusion_holds(const SocialChoiceRule& f, int r, int r_prime,
                               const std::vector<AltIndex>& ordering,
                               int position,
                               ChainReading reading =
                                   ChainReading::kReversalAtEndpoint);

struct OrderingCheck {
  bool ok = true;
  int profile_prime = -1;
  int position = -1;
};

// Rotation condition for one profile and one ordering of F(R), against every
// triggering R'.
OrderingCheck evaluate_rotation_ordering(
    const SocialChoiceRule& f, int r, const std::vector<AltIndex>& ordering,
    ChainReading reading = ChainReading::kReversalAtEndpoint);

// Property M for one profile and one ordering of F(R), against every R' with
// F(R') a singleton inside F(R) and different from F(R).
OrderingCheck evaluate_property_m(
    const SocialChoiceRule& f, int r, const std::vector<AltIndex>& ordering,
    ChainReading reading = ChainReading::kReversalAtEndpoint);

enum class SearchStatus { kFound, kNone, kTruncated };

struct OrderingFailure {
  std::vector<AltIndex> ordering;
  int profile_prime = -1;
  int position = -1;
};

struct ProfileOrderings {
  int profile = -1;
  SearchStatus status = SearchStatus::kFound;
  std::vector<std::vector<AltIndex>> passing;
  std::vector<OrderingFailure> failures;  // Populated when none pass.
};

struct RotationMonotonicityVerdict {
  // kFound: satisfied. kNone: violated. kTruncated: some F(R) exceeded the
  // cap and no profile was found violating.
  SearchStatus status = SearchStatus::kFound;
  std::vector<ProfileOrderings> profiles;

  bool satisfied() const { return status == SearchStatus::kFound; }
};

// Enumerates circular orderings of each F(R) with the first element fixed.
RotationMonotonicityVerdict check_rotation_monotonicity(
    const SocialChoiceRule& f, const OrderingOptions& options = {});

struct PropertyMVerdict {
  bool ok = true;
  int profile = -1;
  int profile_prime = -1;
  int position = -1;
};

// Checks property M for the given orderings (one per profile).
PropertyMVerdict check_property_m(const SocialChoiceRule& f,
                                  const OrderingWitness& orderings,
                                  ChainReading reading =
                                      ChainReading::kReversalAtEndpoint);

struct SharedOrderingResult {
  SearchStatus status = SearchStatus::kFound;
  OrderingWitness orderings;
  int failing_profile = -1;  // First profile with no admissible ordering.
};

// First ordering per profile, in lexicographic order with the first element
// fixed, satisfying both the rotation condition and property M.
SharedOrderingResult find_shared_ordering(const SocialChoiceRule& f,
                                          const OrderingOptions& options = {});

// Throws InputError unless `ordering` lists F(R) exactly once each.
void validate_ordering(const SocialChoiceRule& f, int r,
                       const std::vector<AltIndex>& ordering);

// a and b are equal up to rotation.
bool same_circular_order(const std::vector<AltIndex>& a,
                         const std::vector<AltIndex>& b);

}  // namespace rotakit

#endif  // ROTAKIT_CONDITIONS_H_
