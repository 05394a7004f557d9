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

// Brute-force reference implementations used only by tests. They work from
// the definitions directly (rank comparisons, subset enumeration, full
// permutation search) and share no code with the solvers beyond the data
// types.

#ifndef ROTAKIT_TESTS_ORACLES_H_
#define ROTAKIT_TESTS_ORACLES_H_

#include <string>
#include <vector>

#include "rotakit/conditions.h"
#include "rotakit/domains.h"
#include "rotakit/model.h"
#include "rotakit/rights.h"

namespace oracle {

using rotakit::AltIndex;
using rotakit::Profile;
using rotakit::RightsStructure;
using rotakit::SocialChoiceRule;

using Matrix = std::vector<std::vector<bool>>;

// improve[s][t]: some entitled coalition strictly gains moving s -> t.
Matrix improvement_matrix(const RightsStructure& rights,
                          const Profile& profile);

// Transitive closure (paths of length >= 1).
Matrix closure(Matrix m);

std::vector<int> core(const RightsStructure& rights, const Profile& profile);

// All inclusion-minimal sets with deterrence and external stability.
std::vector<std::vector<int>> minimal_stable_sets(const RightsStructure& rights,
                                                  const Profile& profile);

// Union of the states lying in some absorbing set.
std::vector<int> absorbing_union(const RightsStructure& rights,
                                 const Profile& profile);

// Union of all generalized stable sets, by subset enumeration.
std::vector<int> generalized_stable_union(const RightsStructure& rights,
                                          const Profile& profile);

std::vector<int> outcomes(const RightsStructure& rights,
                          const std::vector<int>& states);

// Some agent has x R_i z and z P'_i x for some z.
bool reversal_at(const Profile& r, const Profile& r_prime, AltIndex x);

bool indirect_monotone(const SocialChoiceRule& f);

// Conclusion of rotation monotonicity for position i of `order` when the
// profile moves from r to r_prime.
bool rotation_conclusion(const SocialChoiceRule& f, int r, int r_prime,
                         const std::vector<AltIndex>& order, int i,
                         rotakit::ChainReading reading);

bool ordering_passes(const SocialChoiceRule& f, int r,
                     const std::vector<AltIndex>& order,
                     rotakit::ChainReading reading);

// Every permutation of F(R) is tried, without fixing a first element.
bool rotation_monotone(const SocialChoiceRule& f,
                       rotakit::ChainReading reading =
                           rotakit::ChainReading::kReversalAtEndpoint);

bool property_m(const SocialChoiceRule& f,
                const std::vector<std::vector<AltIndex>>& orderings,
                rotakit::ChainReading reading =
                    rotakit::ChainReading::kReversalAtEndpoint);

// All circular orderings of a set (first element fixed).
std::vector<std::vector<AltIndex>> circular_orderings(
    const std::vector<AltIndex>& set);

// Pareto set over all n! job assignments, with assignment[i] = job of i.
std::vector<rotakit::Allocation> job_pareto_set(
    const rotakit::JobRotationProblem& problem);

// Backtracking search for a circular order of `set` in which cyclically
// consecutive allocations give `job` to different agents.
bool arrangement_exists(const std::vector<rotakit::Allocation>& set, int job);

// Stable matchings over every partial matching.
std::vector<rotakit::Matching> stable_matchings(
    const rotakit::MarriageProblem& problem);

// Allocations not blocked in the direct exclusion sense, looping over
// every coalition and every allocation.
std::vector<rotakit::Allocation> exclusion_core(
    const rotakit::Economy& economy);

}  // namespace oracle

#endif  // ROTAKIT_TESTS_ORACLES_H_
