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

#ifndef ROTAKIT_DOMAINS_H_
#define ROTAKIT_DOMAINS_H_

#include <string>
#include <vector>

#include "rotakit/conditions.h"
#include "rotakit/model.h"
#include "rotakit/rights.h"

namespace rotakit {

// Enumeration caps. Exceeding one throws CapExceeded.
inline constexpr int kMaxJobAgents = 6;
inline constexpr int kMaxMarriageSide = 5;
inline constexpr int kMaxEconomyAgents = 4;
inline constexpr int kMaxEconomyHouses = 4;

// Maps each agent to a job, a partner or a house, depending on the domain.
using Allocation = std::vector<int>;

// ---------------------------------------------------------------------------
// Job rotation: n agents, n jobs, strict preferences over jobs.

struct JobRotationProblem {
  std::string id;
  std::vector<std::string> jobs;
  std::vector<std::vector<int>> orders;  // Best-first job indices per agent.

  int num_agents() const { return static_cast<int>(orders.size()); }
  void validate() const;
};

// All n! allocations in lexicographic order.
std::vector<Allocation> all_job_allocations(int n);

// Each agent ranks allocations by the job it receives.
Profile extend_job_preferences(const JobRotationProblem& problem,
                               const std::vector<Allocation>& allocations);

// Pareto-efficient allocations in lexicographic order.
std::vector<Allocation> pareto_efficient_allocations(
    const JobRotationProblem& problem);

// The job every agent ranks first, or -1.
int common_best_job(const JobRotationProblem& problem);

// n_i: number of efficient allocations giving the common best job to i.
std::vector<int> best_job_counts(const JobRotationProblem& problem);

// The holder of the common best job swaps it for its second-ranked job.
Allocation swap_with_second_best(const JobRotationProblem& problem,
                                 const Allocation& x);

// Efficient allocations arranged in a circle so that neighbours give the
// common best job to different agents. The largest holder group is first
// interleaved with the smallest groups until the two largest groups are
// level, then groups are emitted round-robin from the largest down.
std::vector<Allocation> circular_arrangement(
    const JobRotationProblem& problem);

// Reverses every agent's job order (common worst job becomes common best).
JobRotationProblem reverse_job_preferences(const JobRotationProblem& problem);

struct PhiResult {
  std::vector<Allocation> ordered;  // Alternating x, x-hat pairs.
  int sub_assignments = 0;          // m
  bool complete = true;             // ordered.size() == 2m
};

// For problems where agents 0 and 1 share their top job t: t goes to agent 0
// or 1, the other jobs go Pareto-efficiently to agents 2..n-1, and the job
// left over goes to whichever of agents 0 and 1 lacks t. Odd positions (1,
// 3, ...) give t to agent 0; each even position swaps the jobs of agents 0
// and 1 in its predecessor.
PhiResult build_phi(const JobRotationProblem& problem);

// Swaps the jobs of agents 0 and 1.
Allocation swap_first_two(const Allocation& x);

enum class JobRule { kEfficient, kPhi };

struct DomainScr {
  SocialChoiceRule scr;
  std::vector<Allocation> allocations;  // Parallel to scr.alternatives.
  // Circular orderings provided by the domain, or empty.
  OrderingWitness orderings;
};

// SCR over a domain of job problems with the same jobs. For kEfficient on
// a common-best domain and for kPhi the orderings are filled in.
DomainScr job_rotation_scr(const std::vector<JobRotationProblem>& domain,
                           JobRule rule);

// ---------------------------------------------------------------------------
// Marriage: men and women with strict preferences; anyone missing from a
// list is unacceptable and ranked below staying single.

struct MarriageProblem {
  std::string id;
  std::vector<std::string> men;
  std::vector<std::string> women;
  std::vector<std::vector<int>> men_prefs;
  std::vector<std::vector<int>> women_prefs;
  bool pure = false;  // Equal sides, complete lists, perfect matchings only.

  int num_men() const { return static_cast<int>(men.size()); }
  int num_women() const { return static_cast<int>(women.size()); }
  void validate() const;
};

// wife[m] and husband[w] are -1 for singles.
struct Matching {
  std::vector<int> wife;
  std::vector<int> husband;

  bool operator==(const Matching&) const = default;
  auto operator<=>(const Matching&) const = default;
};

Matching matching_from_wives(const std::vector<int>& wife, int num_women);

enum class Side { kMen, kWomen };

// Gale-Shapley with the given side proposing.
Matching deferred_acceptance(const MarriageProblem& problem, Side proposers);

struct StabilityVerdict {
  bool ok = true;
  // Blocking pair (man, woman); one side is -1 for an agent preferring to be
  // single.
  int man = -1;
  int woman = -1;
};

StabilityVerdict is_stable(const MarriageProblem& problem, const Matching& mu);

// All matchings (perfect ones only when pure), in a fixed order.
std::vector<Matching> all_matchings(int num_men, int num_women, bool pure);

std::vector<Matching> enumerate_stable_matchings(
    const MarriageProblem& problem);

// Agents are the men followed by the women.
Profile extend_marriage_preferences(const MarriageProblem& problem,
                                    const std::vector<Matching>& matchings);

struct MarriageScr {
  SocialChoiceRule scr;
  std::vector<Matching> matchings;  // Parallel to scr.alternatives.
  // (woman-optimal, man-optimal) per profile; one element when they agree.
  OrderingWitness orderings;
};

// F(R) = {man-optimal, woman-optimal} over a domain sharing men and women.
MarriageScr marriage_optimal_scr(const std::vector<MarriageProblem>& domain);

// ---------------------------------------------------------------------------
// Housing with ownership: houses owned by nonempty groups of agents; each
// agent holds at most one house. kNoHouse stands for holding nothing.

inline constexpr int kNoHouse = -1;

struct Economy {
  std::string id;
  int num_agents = 0;
  std::vector<std::string> houses;
  std::vector<std::vector<int>> owners;  // Per house.
  // Best-first per agent over house indices and kNoHouse.
  std::vector<std::vector<int>> orders;

  int num_houses() const { return static_cast<int>(houses.size()); }
  void validate() const;
  // Position of a house (or kNoHouse) in the agent's order; lower is better.
  int rank(int agent, int house) const;
};

std::vector<Allocation> all_house_allocations(int num_agents,
                                              int num_houses);

// Houses every one of whose owners belongs to K.
std::vector<int> houses_controlled(const Economy& economy, Coalition k);

Profile extend_economy_preferences(const Economy& economy,
                                   const std::vector<Allocation>& allocations);

// States are all allocations. K may move mu to sigma iff every agent outside
// K who is strictly worse off at sigma lost a house controlled by K.
RightsStructure exclusion_rights_structure(const Economy& economy);

// Allocations that no coalition blocks by direct exclusion.
std::vector<Allocation> direct_exclusion_core(const Economy& economy);

struct EconomyScr {
  SocialChoiceRule scr;
  std::vector<Allocation> allocations;
};

// F(R) = direct exclusion core, over a domain of economies that share
// agents, houses and owners.
EconomyScr exclusion_core_scr(const std::vector<Economy>& domain);

std::string allocation_id(const Allocation& x,
                          const std::vector<std::string>& names);

}  // namespace rotakit

#endif  // ROTAKIT_DOMAINS_H_
