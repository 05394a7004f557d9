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

#include "rotakit/domains.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.h"
#include "rotakit/constructors.h"
#include "rotakit/generators.h"
#include "rotakit/io.h"
#include "rotakit/solvers.h"

namespace rotakit {
namespace {

// Jobs j1, j2, j3 are indices 0, 1, 2; (j3,j1,j2) is {2, 0, 1}.
std::set<Allocation> as_set(const std::vector<Allocation>& xs) {
  return {xs.begin(), xs.end()};
}

std::vector<JobRotationProblem> three_job_domain() {
  return parse_job_domain(load_json(ROTAKIT_FIXTURES "/three_jobs.json"));
}

TEST(Jobs, ExtensionComparesOwnJobOnly) {
  JobRotationProblem p;
  p.jobs = {"j1", "j2"};
  p.orders = {{0, 1}, {1, 0}};
  const std::vector<Allocation> all = all_job_allocations(2);
  ASSERT_EQ(all, (std::vector<Allocation>{{0, 1}, {1, 0}}));
  const Profile prof = extend_job_preferences(p, all);
  EXPECT_TRUE(prof.prefs[0].prefers(0, 1));
  EXPECT_FALSE(validate_domain_restriction(prof).has_value());
}

TEST(Jobs, ExtensionIsIndifferentOnSameJob) {
  JobRotationProblem p;
  p.jobs = {"j1", "j2", "j3"};
  p.orders = {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
  const std::vector<Allocation> all = all_job_allocations(3);
  const Profile prof = extend_job_preferences(p, all);
  // (j1,j2,j3) and (j1,j3,j2) both give agent 0 job j1.
  EXPECT_TRUE(prof.prefs[0].indifferent(0, 1));
}

TEST(Jobs, CapIsExplicit) {
  EXPECT_THROW(all_job_allocations(kMaxJobAgents + 1), CapExceeded);
}

TEST(ThreeJobs, ParetoSetsAtPAndPDoublePrime) {
  const auto domain = three_job_domain();
  EXPECT_EQ(as_set(pareto_efficient_allocations(domain[0])),
            (std::set<Allocation>{{2, 0, 1}, {0, 1, 2}, {0, 2, 1}}));
  EXPECT_EQ(as_set(pareto_efficient_allocations(domain[2])),
            (std::set<Allocation>{{2, 0, 1}, {0, 2, 1}}));
}

// At P' the two-element reference set misses (j2,j1,j3), which gives agents
// 2 and 3 their top jobs and so is undominated.
TEST(ThreeJobs, ParetoSetAtPPrimeIncludesUndominatedAllocation) {
  const auto domain = three_job_domain();
  const std::set<Allocation> reference{{2, 0, 1}, {0, 1, 2}};
  const std::set<Allocation> computed =
      as_set(pareto_efficient_allocations(domain[1]));
  EXPECT_EQ(computed, as_set(oracle::job_pareto_set(domain[1])));
  std::set<Allocation> extra;
  std::set_difference(computed.begin(), computed.end(), reference.begin(),
                      reference.end(), std::inserter(extra, extra.end()));
  EXPECT_EQ(extra, (std::set<Allocation>{{1, 0, 2}}));
  EXPECT_EQ(domain[1].orders[1][0], 0);
  EXPECT_EQ(domain[1].orders[2][0], 2);
}

TEST(ThreeJobs, EfficientRuleViolatesRotationMonotonicity) {
  const DomainScr d = job_rotation_scr(three_job_domain(), JobRule::kEfficient);
  EXPECT_EQ(check_rotation_monotonicity(d.scr).status, SearchStatus::kNone);
  EXPECT_FALSE(oracle::rotation_monotone(d.scr));
}

TEST(JobsProperty, ParetoSetMatchesOracle) {
  Rng rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const JobRotationProblem p = random_job_problem(uniform_int(rng, 1, 4), rng);
    EXPECT_EQ(as_set(pareto_efficient_allocations(p)),
              as_set(oracle::job_pareto_set(p)));
    const Profile prof = extend_job_preferences(p, all_job_allocations(p.num_agents()));
    EXPECT_FALSE(validate_domain_restriction(prof).has_value());
  }
}

TEST(CircularArrangement, TwoAgentsAlternate) {
  JobRotationProblem p;
  p.jobs = {"j1", "j2"};
  p.orders = {{0, 1}, {0, 1}};
  const auto order = circular_arrangement(p);
  EXPECT_EQ(as_set(order), (std::set<Allocation>{{0, 1}, {1, 0}}));
}

TEST(CircularArrangement, RejectsMissingCommonBest) {
  JobRotationProblem p;
  p.jobs = {"j1", "j2"};
  p.orders = {{0, 1}, {1, 0}};
  EXPECT_EQ(common_best_job(p), -1);
  EXPECT_THROW(circular_arrangement(p), InputError);
}

TEST(CircularArrangementProperty, NoConsecutiveRepeatAndCountInequality) {
  Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const JobRotationProblem p =
        random_common_best_problem(uniform_int(rng, 2, 5), rng);
    const int best = common_best_job(p);
    ASSERT_EQ(best, 0);
    const auto pareto = pareto_efficient_allocations(p);
    const auto order = circular_arrangement(p);
    EXPECT_EQ(as_set(order), as_set(pareto));
    EXPECT_EQ(order.size(), pareto.size());
    auto holder = [&](const Allocation& x) {
      return std::find(x.begin(), x.end(), best) - x.begin();
    };
    for (std::size_t k = 0; k < order.size(); ++k) {
      EXPECT_NE(holder(order[k]), holder(order[(k + 1) % order.size()]));
    }
    EXPECT_TRUE(oracle::arrangement_exists(pareto, best));
    const std::vector<int> counts = best_job_counts(p);
    int total = 0;
    for (int c : counts) total += c;
    EXPECT_EQ(total, static_cast<int>(pareto.size()));
    for (int c : counts) EXPECT_GE(total - c, c);
  }
}

// The swap with the holder's second-best job moves the best job to another
// agent and is injective on each holder's allocations.
TEST(CircularArrangementProperty, SecondBestSwapIsInjective) {
  Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const JobRotationProblem p =
        random_common_best_problem(uniform_int(rng, 2, 4), rng);
    std::vector<std::set<Allocation>> images(p.num_agents());
    for (const Allocation& x : pareto_efficient_allocations(p)) {
      const Allocation y = swap_with_second_best(p, x);
      const auto h = std::find(x.begin(), x.end(), 0) - x.begin();
      EXPECT_NE(y[h], 0);
      EXPECT_TRUE(images[h].insert(y).second);
    }
  }
}

TEST(PhiProperty, OrderingPropertiesAndClosure) {
  Rng rng(44);
  for (int trial = 0; trial < 150; ++trial) {
    const JobRotationProblem p = random_hat_problem(uniform_int(rng, 2, 5), rng);
    const int top = p.orders[0][0];
    const PhiResult phi = build_phi(p);
    ASSERT_TRUE(phi.complete);
    ASSERT_EQ(static_cast<int>(phi.ordered.size()), 2 * phi.sub_assignments);
    const std::set<Allocation> all = as_set(phi.ordered);
    EXPECT_EQ(all.size(), phi.ordered.size());
    const std::set<Allocation> pareto = as_set(pareto_efficient_allocations(p));
    const int m = static_cast<int>(phi.ordered.size());
    for (int k = 0; k < m; ++k) {
      const Allocation& x = phi.ordered[k];
      EXPECT_TRUE(pareto.count(x));
      EXPECT_TRUE(all.count(swap_first_two(x)));
      const Allocation& next = phi.ordered[(k + 1) % m];
      if (k % 2 == 0) {
        EXPECT_EQ(x[0], top);
        EXPECT_EQ(next, swap_first_two(x));
        EXPECT_LT(std::find(p.orders[1].begin(), p.orders[1].end(), next[1]),
                  std::find(p.orders[1].begin(), p.orders[1].end(), x[1]));
      } else {
        EXPECT_EQ(x[1], top);
        EXPECT_LT(std::find(p.orders[0].begin(), p.orders[0].end(), next[0]),
                  std::find(p.orders[0].begin(), p.orders[0].end(), x[0]));
      }
    }
  }
}

TEST(PhiProperty, RejectsDistinctTops) {
  JobRotationProblem p;
  p.jobs = {"j1", "j2"};
  p.orders = {{0, 1}, {1, 0}};
  EXPECT_THROW(build_phi(p), InputError);
}

// Both optimal matchings at each profile.
TEST(ThreeCouples, DeferredAcceptanceGivesBothOptimalMatchings) {
  const auto domain =
      parse_marriage_domain(load_json(ROTAKIT_FIXTURES "/three_couples.json"));
  ASSERT_EQ(domain.size(), 2u);
  // Wives of m1, m2, m3 (w1 = 0).
  const std::vector<int> men_optimal{1, 2, 0};
  EXPECT_EQ(deferred_acceptance(domain[0], Side::kMen).wife, men_optimal);
  EXPECT_EQ(deferred_acceptance(domain[0], Side::kWomen).wife,
            (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(deferred_acceptance(domain[1], Side::kMen).wife, men_optimal);
  EXPECT_EQ(deferred_acceptance(domain[1], Side::kWomen).wife,
            (std::vector<int>{2, 0, 1}));
}

TEST(ThreeCouples, OptimalRuleIsRotationMonotone) {
  const auto domain =
      parse_marriage_domain(load_json(ROTAKIT_FIXTURES "/three_couples.json"));
  const MarriageScr m = marriage_optimal_scr(domain);
  ASSERT_EQ(m.orderings.size(), 2u);
  for (int r = 0; r < 2; ++r) {
    ASSERT_EQ(m.orderings[r].size(), 2u);
    EXPECT_TRUE(evaluate_rotation_ordering(m.scr, r, m.orderings[r]).ok);
    EXPECT_TRUE(oracle::ordering_passes(m.scr, r, m.orderings[r],
                                        ChainReading::kReversalAtEndpoint));
  }
  EXPECT_TRUE(check_rotation_monotonicity(m.scr).satisfied());
  EXPECT_FALSE(validate_domain_restriction(m.scr.domain[0]).has_value());
}

TEST(MarriageProperty, StableSetAndSideOptimality) {
  Rng rng(45);
  for (int trial = 0; trial < 120; ++trial) {
    const int num_men = uniform_int(rng, 1, 4);
    const bool pure = trial % 2 == 0;
    const int num_women = pure ? num_men : uniform_int(rng, 1, 4);
    const MarriageProblem q = random_marriage_problem(num_men, num_women, pure, rng);
    auto got = enumerate_stable_matchings(q);
    auto expected = oracle::stable_matchings(q);
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(got, expected);
    for (Side side : {Side::kMen, Side::kWomen}) {
      const Matching mu = deferred_acceptance(q, side);
      EXPECT_TRUE(is_stable(q, mu).ok);
      EXPECT_NE(std::find(expected.begin(), expected.end(), mu), expected.end());
    }
    // Men-optimal: every man weakly prefers his DA partner.
    const Matching men = deferred_acceptance(q, Side::kMen);
    for (const Matching& other : expected) {
      for (int m = 0; m < q.num_men(); ++m) {
        const auto& list = q.men_prefs[m];
        auto rank = [&](int w) {
          if (w < 0) return static_cast<long>(list.size());
          return static_cast<long>(std::find(list.begin(), list.end(), w) -
                                   list.begin());
        };
        EXPECT_LE(rank(men.wife[m]), rank(other.wife[m]));
      }
    }
  }
}

// Three agents, each owning one house.
Economy housing() {
  return parse_economy_domain(load_json(ROTAKIT_FIXTURES "/housing.json"))[0];
}

TEST(Housing, DirectExclusionCoreIsMu) {
  const Economy e = housing();
  const auto core = direct_exclusion_core(e);
  // mu: agent 1 -> h2, agent 2 -> h3, agent 3 -> h1.
  EXPECT_EQ(core, (std::vector<Allocation>{{1, 2, 0}}));
  EXPECT_EQ(core, oracle::exclusion_core(e));
}

TEST(Housing, SigmaCycleWithExpectedCoalitions) {
  const Economy e = housing();
  const std::vector<Allocation> all = all_house_allocations(3, 3);
  auto index = [&](const Allocation& x) {
    return static_cast<int>(std::find(all.begin(), all.end(), x) - all.begin());
  };
  const int s1 = index({1, 0, 2});
  const int s2 = index({0, 2, 1});
  const int s3 = index({2, 1, 0});
  const RightsStructure rights = exclusion_rights_structure(e);
  const Profile prof = extend_economy_preferences(e, all);
  const ImprovementDigraph g =
      build_improvement_digraph(SocialEnvironment(rights, prof));
  auto labelled = [&](int a, int b, Coalition k) {
    const auto labels = g.labels(a, b);
    return std::find(labels.begin(), labels.end(), k) != labels.end();
  };
  EXPECT_TRUE(labelled(s1, s2, Coalition::Of({1, 2})));
  EXPECT_TRUE(labelled(s2, s3, Coalition::Of({0, 2})));
  EXPECT_TRUE(labelled(s3, s1, Coalition::Of({0, 1})));
  // Agent 0 holds its top house at sigma^1.
  for (int t = 0; t < g.num_nodes; ++t) {
    for (const Coalition& k : g.labels(s1, t)) EXPECT_FALSE(k.contains(0));
  }
}

TEST(Housing, MssOfExclusionEnvironmentIsMu) {
  const Economy e = housing();
  const std::vector<Allocation> all = all_house_allocations(3, 3);
  const RightsStructure rights = exclusion_rights_structure(e);
  const Profile prof = extend_economy_preferences(e, all);
  const SolutionReport mss = compute_mss(SocialEnvironment(rights, prof));
  StateSet states;
  for (const auto& s : mss.state_sets) {
    states.insert(states.end(), s.begin(), s.end());
  }
  const AltSet out = outcomes_of(rights, states);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(all[out[0]], (Allocation{1, 2, 0}));
}

TEST(Housing, CoreScrImplementsInMss) {
  const EconomyScr scr = exclusion_core_scr({housing()});
  const RightsStructure rights = build_full_rights_structure(scr.scr);
  EXPECT_TRUE(verify_implementation_in_mss(rights, scr.scr).ok);
}

TEST(Housing, OwnTopEndowmentIsInCore) {
  Economy e;
  e.num_agents = 2;
  e.houses = {"h1", "h2"};
  e.owners = {{0}, {1}};
  e.orders = {{0, 1, kNoHouse}, {1, 0, kNoHouse}};
  const auto core = direct_exclusion_core(e);
  EXPECT_NE(std::find(core.begin(), core.end(), Allocation{0, 1}), core.end());
}

TEST(EconomyProperty, CoreNonemptyAndMatchesEnvironmentCore) {
  Rng rng(46);
  for (int trial = 0; trial < 60; ++trial) {
    const Economy e = random_economy(uniform_int(rng, 1, 3),
                                     uniform_int(rng, 1, 3), rng);
    const auto core = direct_exclusion_core(e);
    EXPECT_FALSE(core.empty());
    EXPECT_EQ(core, oracle::exclusion_core(e));
    const std::vector<Allocation> all =
        all_house_allocations(e.num_agents, e.num_houses());
    const RightsStructure rights = exclusion_rights_structure(e);
    const Profile prof = extend_economy_preferences(e, all);
    const SolutionReport env_core = compute_core(SocialEnvironment(rights, prof));
    std::vector<Allocation> from_env;
    for (int s : env_core.state_sets[0]) from_env.push_back(all[rights.outcome(s)]);
    std::sort(from_env.begin(), from_env.end());
    auto sorted = core;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(from_env, sorted);
  }
}

}  // namespace
}  // namespace rotakit
