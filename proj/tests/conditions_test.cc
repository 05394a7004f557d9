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

#include "rotakit/conditions.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "rotakit/generators.h"
#include "rotakit/io.h"

namespace rotakit {
namespace {

SocialChoiceRule three_alternative_rule() {
  return load_document(ROTAKIT_FIXTURES "/three_alternatives.json").scr();
}

TEST(ThreeAlternativeRule, EfficientAndIndirectlyMonotone) {
  const SocialChoiceRule f = three_alternative_rule();
  EXPECT_TRUE(check_efficiency(f).ok);
  const IndirectVerdict v = check_indirect_monotonicity(f);
  EXPECT_TRUE(v.ok);
  // z leaves the choice set and agent 2 (0-based) ranks z lower at R'.
  EXPECT_TRUE(has_preference_reversal(f.domain[0], f.domain[1], 2, 2));
}

TEST(ThreeAlternativeRule, EveryOrderingViolatesRotationMonotonicity) {
  const SocialChoiceRule f = three_alternative_rule();
  for (ChainReading reading :
       {ChainReading::kReversalAtEndpoint, ChainReading::kLastMover}) {
    const RotationMonotonicityVerdict v =
        check_rotation_monotonicity(f, OrderingOptions{8, reading});
    EXPECT_EQ(v.status, SearchStatus::kNone);
    ASSERT_FALSE(v.profiles.empty());
    const ProfileOrderings& at_r = v.profiles[0];
    EXPECT_EQ(at_r.status, SearchStatus::kNone);
    EXPECT_TRUE(at_r.passing.empty());
    // (x,y,z) and (x,z,y) both fail.
    EXPECT_EQ(at_r.failures.size(), 2u);
  }
  EXPECT_FALSE(oracle::rotation_monotone(f));
}

TEST(ThreeAlternativeRule, FailingPositionsMatchTheArgument) {
  const SocialChoiceRule f = three_alternative_rule();
  // Ordering x,y,z fails from y: nobody has a reversal at y, and z is last
  // for everyone at R'.
  EXPECT_FALSE(rotation_conclusion_holds(f, 0, 1, {0, 1, 2}, 1));
  // Ordering x,z,y fails from x.
  EXPECT_FALSE(rotation_conclusion_holds(f, 0, 1, {0, 2, 1}, 0));
}

TEST(Maskin, ConstantRuleIsMonotonic) {
  const SocialChoiceRule f =
      load_document(ROTAKIT_FIXTURES "/constant_scr.json").scr();
  EXPECT_TRUE(check_maskin_monotonicity(f).ok);
  EXPECT_TRUE(check_indirect_monotonicity(f).ok);
}

TEST(CircularOrder, RotationsAreEqual) {
  EXPECT_TRUE(same_circular_order({0, 1, 2}, {1, 2, 0}));
  EXPECT_FALSE(same_circular_order({0, 1, 2}, {0, 2, 1}));
  EXPECT_TRUE(same_circular_order({3}, {3}));
}

TEST(Ordering, ValidationRejectsForeignAlternatives) {
  const SocialChoiceRule f = three_alternative_rule();
  EXPECT_THROW(validate_ordering(f, 1, {0, 2}), InputError);
  EXPECT_THROW(validate_ordering(f, 1, {0, 1, 1}), InputError);
  EXPECT_NO_THROW(validate_ordering(f, 1, {1, 0}));
}

TEST(Ordering, CapTruncatesSearch) {
  const SocialChoiceRule f = three_alternative_rule();
  const RotationMonotonicityVerdict v =
      check_rotation_monotonicity(f, OrderingOptions{2});
  // F(R) has three elements; F(R') alone fits, and it passes or fails
  // without reaching a violation at R.
  EXPECT_NE(v.status, SearchStatus::kFound);
  const SharedOrderingResult s = find_shared_ordering(f, OrderingOptions{2});
  EXPECT_NE(s.status, SearchStatus::kFound);
}

// Property: the checker agrees with the full-permutation oracle on small
// random rules under both chain readings.
TEST(RotationMonotonicityProperty, AgreesWithOracle) {
  Rng rng(31);
  int satisfied = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const SocialChoiceRule f = random_efficient_scr(
        uniform_int(rng, 2, 4), uniform_int(rng, 1, 3),
        uniform_int(rng, 1, 3), rng);
    for (ChainReading reading :
         {ChainReading::kReversalAtEndpoint, ChainReading::kLastMover}) {
      const RotationMonotonicityVerdict v =
          check_rotation_monotonicity(f, OrderingOptions{8, reading});
      ASSERT_NE(v.status, SearchStatus::kTruncated);
      EXPECT_EQ(v.satisfied(), oracle::rotation_monotone(f, reading))
          << "trial " << trial;
      if (reading == ChainReading::kReversalAtEndpoint && v.satisfied()) {
        ++satisfied;
      }
      for (const ProfileOrderings& p : v.profiles) {
        for (const auto& o : p.passing) {
          EXPECT_TRUE(oracle::ordering_passes(f, p.profile, o, reading));
        }
      }
    }
  }
  EXPECT_GT(satisfied, 0);
}

// Property: the last-mover reading is at least as strict as the endpoint one.
TEST(RotationMonotonicityProperty, LastMoverReadingImpliesEndpointReading) {
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const SocialChoiceRule f = random_efficient_scr(
        uniform_int(rng, 2, 4), uniform_int(rng, 1, 3), 3, rng);
    if (check_rotation_monotonicity(f, {8, ChainReading::kLastMover})
            .satisfied()) {
      EXPECT_TRUE(check_rotation_monotonicity(f).satisfied());
    }
  }
}

TEST(IndirectMonotonicityProperty, AgreesWithOracleAndWeakensMaskin) {
  Rng rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const SocialChoiceRule f = random_efficient_scr(
        uniform_int(rng, 2, 4), uniform_int(rng, 1, 3),
        uniform_int(rng, 1, 3), rng);
    const IndirectVerdict v = check_indirect_monotonicity(f);
    EXPECT_EQ(v.ok, oracle::indirect_monotone(f)) << "trial " << trial;
    if (check_maskin_monotonicity(f).ok) EXPECT_TRUE(v.ok);
    for (const IndirectWitness& w : v.witnesses) {
      ASSERT_GE(w.chain.size(), 2u);
      EXPECT_EQ(w.chain.front(), w.z);
      EXPECT_TRUE(oracle::reversal_at(f.domain[w.profile],
                                      f.domain[w.profile_prime],
                                      w.chain.back()));
      for (std::size_t k = 0; k + 1 < w.chain.size(); ++k) {
        EXPECT_TRUE(f.chooses(w.profile, w.chain[k + 1]));
        EXPECT_TRUE(f.domain[w.profile_prime].prefs[w.agents[k]].prefers(
            w.chain[k + 1], w.chain[k]));
      }
    }
  }
}

// Rotation monotonicity implies indirect monotonicity when no choice set is
// a singleton.
TEST(RotationMonotonicityProperty, ImpliesIndirectWithoutSingletons) {
  Rng rng(34);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 40; ++trial) {
    const SocialChoiceRule f = random_efficient_scr(4, 2, 3, rng);
    bool multi = true;
    for (const AltSet& s : f.choices) multi = multi && s.size() > 1;
    if (!multi || !check_rotation_monotonicity(f).satisfied()) continue;
    ++checked;
    EXPECT_TRUE(check_indirect_monotonicity(f).ok);
  }
  EXPECT_GT(checked, 0);
}

TEST(PropertyMProperty, AgreesWithOracle) {
  Rng rng(35);
  for (int trial = 0; trial < 300; ++trial) {
    const SocialChoiceRule f = random_efficient_scr(
        uniform_int(rng, 2, 4), uniform_int(rng, 1, 3), 3, rng);
    OrderingWitness orderings;
    for (const AltSet& s : f.choices) {
      auto all = oracle::circular_orderings(s);
      orderings.push_back(all[uniform_int(rng, 0,
                                          static_cast<int>(all.size()) - 1)]);
    }
    EXPECT_EQ(check_property_m(f, orderings).ok,
              oracle::property_m(f, orderings))
        << "trial " << trial;
  }
}

TEST(SharedOrdering, FoundOrderingsPassBothConditions) {
  Rng rng(36);
  for (int trial = 0; trial < 200; ++trial) {
    const SocialChoiceRule f = random_efficient_scr(
        uniform_int(rng, 2, 4), uniform_int(rng, 1, 3), 3, rng);
    const SharedOrderingResult r = find_shared_ordering(f);
    if (r.status != SearchStatus::kFound) continue;
    EXPECT_TRUE(oracle::property_m(f, r.orderings));
    for (int p = 0; p < f.num_profiles(); ++p) {
      EXPECT_TRUE(oracle::ordering_passes(f, p, r.orderings[p],
                                          ChainReading::kReversalAtEndpoint));
    }
  }
}

}  // namespace
}  // namespace rotakit
