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

// Seeded random instances for property tests and the CLI.

#ifndef ROTAKIT_GENERATORS_H_
#define ROTAKIT_GENERATORS_H_

#include <optional>
#include <random>
#include <string>

#include "rotakit/domains.h"
#include "rotakit/model.h"
#include "rotakit/rights.h"

namespace rotakit {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);  // Inclusive bounds.

std::vector<int> random_permutation(int n, Rng& rng);

// Strict orders for every agent.
Profile random_linear_profile(int num_agents, int num_alternatives, Rng& rng,
                              std::string id = "R");

// Weak orders with ties; may violate the domain restriction.
Profile random_weak_profile(int num_agents, int num_alternatives, Rng& rng,
                            std::string id = "R");

struct RandomEnvironment {
  int num_alternatives = 0;
  int num_agents = 0;
  RightsStructure rights;
  Profile profile;
};

// Up to max_states opaque states and max_agents agents, weak preferences,
// random outcomes and random coalition families.
RandomEnvironment random_environment(int max_states, int max_agents,
                                     Rng& rng);

// Strict profiles; each F(R) is a random nonempty subset of the Pareto
// frontier, so the rule is efficient.
SocialChoiceRule random_efficient_scr(int num_alternatives, int num_agents,
                                      int num_profiles, Rng& rng);

// Rejection-samples efficient rules that also pass the indirect
// monotonicity check. Returns nullopt after `tries` failures.
std::optional<SocialChoiceRule> random_indirect_monotone_scr(
    int num_alternatives, int num_agents, int num_profiles, Rng& rng,
    int tries = 200);

JobRotationProblem random_job_problem(int n, Rng& rng);
// Every agent ranks job 0 first.
JobRotationProblem random_common_best_problem(int n, Rng& rng);
// Agents 0 and 1 rank the same random job first.
JobRotationProblem random_hat_problem(int n, Rng& rng);

MarriageProblem random_marriage_problem(int num_men, int num_women, bool pure,
                                        Rng& rng);

// Each house owned by one random agent or, with some probability, a pair.
Economy random_economy(int num_agents, int num_houses, Rng& rng);

}  // namespace rotakit

#endif  // ROTAKIT_GENERATORS_H_
