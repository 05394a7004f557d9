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

#include "rotakit/generators.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "rotakit/conditions.h"

namespace rotakit {

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Profile random_linear_profile(int num_agents, int num_alternatives, Rng& rng,
                              std::string id) {
  Profile profile;
  profile.id = std::move(id);
  for (int i = 0; i < num_agents; ++i) {
    profile.prefs.push_back(
        Preference::FromOrder(random_permutation(num_alternatives, rng)));
  }
  return profile;
}

Profile random_weak_profile(int num_agents, int num_alternatives, Rng& rng,
                            std::string id) {
  Profile profile;
  profile.id = std::move(id);
  for (int i = 0; i < num_agents; ++i) {
    std::vector<int> ranks(num_alternatives);
    for (int& r : ranks) r = uniform_int(rng, 0, num_alternatives - 1);
    profile.prefs.emplace_back(std::move(ranks));
  }
  return profile;
}

RandomEnvironment random_environment(int max_states, int max_agents,
                                     Rng& rng) {
  RandomEnvironment env;
  const int num_states = uniform_int(rng, 1, max_states);
  env.num_agents = uniform_int(rng, 1, max_agents);
  env.num_alternatives = uniform_int(rng, 1, num_states);
  env.profile = random_weak_profile(env.num_agents, env.num_alternatives, rng);
  for (int s = 0; s < num_states; ++s) {
    env.rights.add_state(State{"s" + std::to_string(s), StateKind::kOpaque,
                               uniform_int(rng, 0, env.num_alternatives - 1),
                               -1});
  }
  const double density = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
  const std::uint32_t full = (1u << env.num_agents) - 1u;
  for (int s = 0; s < num_states; ++s) {
    for (int t = 0; t < num_states; ++t) {
      if (s == t || std::uniform_real_distribution<double>(0, 1)(rng) >
                        density) {
        continue;
      }
      const int count = uniform_int(rng, 1, 3);
      for (int c = 0; c < count; ++c) {
        env.rights.grant(s, t,
                         Coalition::FromMask(static_cast<std::uint32_t>(
                             uniform_int(rng, 1, static_cast<int>(full)))));
      }
    }
  }
  return env;
}

SocialChoiceRule random_efficient_scr(int num_alternatives, int num_agents,
                                      int num_profiles, Rng& rng) {
  SocialChoiceRule f;
  f.num_agents = num_agents;
  for (int x = 0; x < num_alternatives; ++x) {
    const std::string id(1, static_cast<char>('a' + x));
    f.alternatives.push_back(Alternative{id, id});
  }
  for (int k = 0; k < num_profiles; ++k) {
    Profile r = random_linear_profile(num_agents, num_alternatives, rng,
                                      "R" + std::to_string(k + 1));
    const AltSet frontier = pareto_frontier(r);
    AltSet chosen;
    while (chosen.empty()) {
      for (AltIndex x : frontier) {
        if (uniform_int(rng, 0, 1) == 1) chosen.push_back(x);
      }
    }
    f.domain.push_back(std::move(r));
    f.choices.push_back(std::move(chosen));
  }
  return f;
}

std::optional<SocialChoiceRule> random_indirect_monotone_scr(
    int num_alternatives, int num_agents, int num_profiles, Rng& rng,
    int tries) {
  for (int t = 0; t < tries; ++t) {
    SocialChoiceRule f =
        random_efficient_scr(num_alternatives, num_agents, num_profiles, rng);
    if (check_indirect_monotonicity(f).ok) return f;
  }
  return std::nullopt;
}

namespace {

std::vector<std::string> job_names(int n) {
  std::vector<std::string> names;
  for (int j = 0; j < n; ++j) names.push_back("j" + std::to_string(j + 1));
  return names;
}

}  // namespace

JobRotationProblem random_job_problem(int n, Rng& rng) {
  JobRotationProblem p;
  p.jobs = job_names(n);
  for (int i = 0; i < n; ++i) p.orders.push_back(random_permutation(n, rng));
  return p;
}

JobRotationProblem random_common_best_problem(int n, Rng& rng) {
  JobRotationProblem p;
  p.jobs = job_names(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> rest = random_permutation(n - 1, rng);
    std::vector<int> order{0};
    for (int j : rest) order.push_back(j + 1);
    p.orders.push_back(std::move(order));
  }
  return p;
}

JobRotationProblem random_hat_problem(int n, Rng& rng) {
  JobRotationProblem p = random_job_problem(n, rng);
  const int top = p.orders[0][0];
  auto& second = p.orders[1];
  std::iter_swap(second.begin(), std::find(second.begin(), second.end(), top));
  return p;
}

MarriageProblem random_marriage_problem(int num_men, int num_women, bool pure,
                                        Rng& rng) {
  MarriageProblem p;
  p.pure = pure;
  for (int m = 0; m < num_men; ++m) p.men.push_back("m" + std::to_string(m + 1));
  for (int w = 0; w < num_women; ++w) {
    p.women.push_back("w" + std::to_string(w + 1));
  }
  for (int m = 0; m < num_men; ++m) {
    p.men_prefs.push_back(random_permutation(num_women, rng));
  }
  for (int w = 0; w < num_women; ++w) {
    p.women_prefs.push_back(random_permutation(num_men, rng));
  }
  return p;
}

Economy random_economy(int num_agents, int num_houses, Rng& rng) {
  Economy e;
  e.num_agents = num_agents;
  for (int h = 0; h < num_houses; ++h) {
    e.houses.push_back("h" + std::to_string(h + 1));
    std::vector<int> group{uniform_int(rng, 0, num_agents - 1)};
    if (num_agents > 1 && uniform_int(rng, 0, 3) == 0) {
      int other = uniform_int(rng, 0, num_agents - 2);
      if (other >= group[0]) ++other;
      group.push_back(other);
      std::sort(group.begin(), group.end());
    }
    e.owners.push_back(std::move(group));
  }
  for (int i = 0; i < num_agents; ++i) {
    // Holding nothing is ranked last.
    std::vector<int> order = random_permutation(num_houses, rng);
    order.push_back(kNoHouse);
    e.orders.push_back(std::move(order));
  }
  return e;
}

}  // namespace rotakit
