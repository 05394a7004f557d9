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

#include "rotakit/model.h"

#include <gtest/gtest.h>

#include "rotakit/generators.h"

namespace rotakit {
namespace {

Profile strict(std::vector<std::vector<AltIndex>> orders) {
  Profile p;
  for (auto& o : orders) p.prefs.push_back(Preference::FromOrder(o));
  return p;
}

TEST(Preference, NormalizesRanks) {
  const Preference p(std::vector<int>{5, 2, 2, 9});
  EXPECT_EQ(p.ranks(), (std::vector<int>{1, 0, 0, 2}));
  EXPECT_TRUE(p.indifferent(1, 2));
  EXPECT_TRUE(p.prefers(1, 0));
  EXPECT_FALSE(p.is_linear());
  EXPECT_EQ(p.top(), (AltSet{1, 2}));
}

TEST(Preference, FromOrderIsLinear) {
  const Preference p = Preference::FromOrder({2, 0, 1});
  EXPECT_TRUE(p.is_linear());
  EXPECT_EQ(p.rank(2), 0);
  EXPECT_EQ(p.rank(1), 2);
  EXPECT_THROW(Preference::FromOrder({0, 0, 1}), InputError);
}

TEST(LowerContourSet, IncludesTheAlternativeItself) {
  const Profile p = strict({{0, 1, 2}});
  EXPECT_EQ(lower_contour_set(p, 0, 1), (AltSet{1, 2}));
  EXPECT_EQ(lower_contour_set(p, 0, 2), (AltSet{2}));
}

TEST(Reversal, DetectsFallInPreference) {
  const Profile r = strict({{0, 1, 2}});
  const Profile rp = strict({{1, 0, 2}});
  EXPECT_TRUE(has_preference_reversal(r, rp, 0, 0));
  EXPECT_FALSE(has_preference_reversal(r, rp, 0, 1));
  EXPECT_FALSE(is_monotonic_transformation(r, rp, 0));
  EXPECT_TRUE(is_monotonic_transformation(r, rp, 1));
}

TEST(Pareto, FrontierOfOpposedAgentsIsEverything) {
  const Profile p = strict({{0, 1, 2}, {2, 1, 0}});
  EXPECT_EQ(pareto_frontier(p), (AltSet{0, 1, 2}));
}

TEST(Pareto, UnanimousTopIsUnique) {
  const Profile p = strict({{1, 0, 2}, {1, 2, 0}});
  EXPECT_EQ(pareto_frontier(p), (AltSet{1}));
  EXPECT_TRUE(pareto_dominates(p, 1, 0));
}

TEST(DomainRestriction, ReportsUnanimouslyTiedPair) {
  Profile p;
  p.prefs.emplace_back(std::vector<int>{0, 0, 1});
  p.prefs.emplace_back(std::vector<int>{1, 1, 0});
  const auto v = validate_domain_restriction(p);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->x, 0);
  EXPECT_EQ(v->y, 1);
  EXPECT_FALSE(validate_domain_restriction(strict({{0, 1, 2}})).has_value());
}

TEST(SocialChoiceRule, ValidateRejectsEmptyChoice) {
  SocialChoiceRule f;
  f.alternatives = {{"a", "a"}, {"b", "b"}};
  f.num_agents = 1;
  f.domain = {strict({{0, 1}})};
  f.domain[0].id = "R";
  f.choices = {{}};
  EXPECT_THROW(f.validate(), InputError);
  f.choices = {{1}};
  EXPECT_NO_THROW(f.validate());
  EXPECT_TRUE(f.chooses(0, 1));
}

TEST(Efficiency, FlagsDominatedChoice) {
  SocialChoiceRule f;
  f.alternatives = {{"a", "a"}, {"b", "b"}};
  f.num_agents = 2;
  f.domain = {strict({{0, 1}, {0, 1}})};
  f.domain[0].id = "R";
  f.choices = {{0, 1}};
  const EfficiencyVerdict v = check_efficiency(f);
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.dominated, 1);
  EXPECT_EQ(v.dominator, 0);
}

// Property: the frontier is exactly the set of undominated alternatives.
TEST(ParetoProperty, FrontierMatchesPairwiseScan) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int alts = uniform_int(rng, 1, 6);
    const Profile p = random_weak_profile(uniform_int(rng, 1, 4), alts, rng);
    AltSet expected;
    for (AltIndex x = 0; x < alts; ++x) {
      bool dominated = false;
      for (AltIndex y = 0; y < alts; ++y) {
        bool weak = true;
        bool strict_gain = false;
        for (const Preference& pref : p.prefs) {
          weak = weak && pref.rank(y) <= pref.rank(x);
          strict_gain = strict_gain || pref.rank(y) < pref.rank(x);
        }
        dominated = dominated || (weak && strict_gain);
      }
      if (!dominated) expected.push_back(x);
    }
    EXPECT_EQ(pareto_frontier(p), expected);
  }
}

}  // namespace
}  // namespace rotakit
