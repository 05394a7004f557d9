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

#ifndef ROTAKIT_MODEL_H_
#define ROTAKIT_MODEL_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rotakit {

// Thrown for malformed input: bad indices, inconsistent sizes, schema errors.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an enumeration would exceed a configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Alternatives are referred to by their index in the alternative list.
using AltIndex = int;

// Sorted, duplicate-free list of alternatives.
using AltSet = std::vector<AltIndex>;

struct Alternative {
  std::string id;
  std::string label;

  bool operator==(const Alternative&) const = default;
};

// A complete weak order over alternatives, stored as ranks (0 is best).
// Ranks are normalized on construction so that the used ranks are exactly
// 0..k with no gaps.
class Preference {
 public:
  Preference() = default;
  explicit Preference(std::vector<int> ranks);

  // Builds a linear order from a best-first list of alternative indices.
  static Preference FromOrder(const std::vector<AltIndex>& best_first);

  int rank(AltIndex x) const;
  int size() const { return static_cast<int>(ranks_.size()); }
  const std::vector<int>& ranks() const { return ranks_; }

  bool prefers(AltIndex x, AltIndex y) const { return rank(x) < rank(y); }
  bool weakly_prefers(AltIndex x, AltIndex y) const {
    return rank(x) <= rank(y);
  }
  bool indifferent(AltIndex x, AltIndex y) const {
    return rank(x) == rank(y);
  }
  bool is_linear() const;

  // Alternatives at the best rank.
  AltSet top() const;

  bool operator==(const Preference&) const = default;

 private:
  std::vector<int> ranks_;
};

struct Profile {
  std::string id;
  std::vector<Preference> prefs;

  int num_agents() const { return static_cast<int>(prefs.size()); }
  bool operator==(const Profile&) const = default;
};

// Checks that all preferences rank exactly num_alternatives alternatives.
void validate_profile(const Profile& profile, int num_alternatives);

// L_i(x, R): alternatives agent i ranks no higher than x.
AltSet lower_contour_set(const Profile& profile, int agent, AltIndex x);

// True iff agent i ranks some alternative weakly below x at R but strictly
// above x at R', i.e. L_i(x, R) is not contained in L_i(x, R').
bool has_preference_reversal(const Profile& r, const Profile& r_prime,
                             int agent, AltIndex x);

// True iff no agent has a preference reversal at x between R and R'.
bool is_monotonic_transformation(const Profile& r, const Profile& r_prime,
                                 AltIndex x);

// x Pareto-dominates z: every agent weakly prefers x and one strictly.
bool pareto_dominates(const Profile& profile, AltIndex x, AltIndex z);

// Alternatives not Pareto-dominated by any alternative.
AltSet pareto_frontier(const Profile& profile);

// A pair of distinct alternatives every agent is indifferent between.
struct DomainViolation {
  AltIndex x = -1;
  AltIndex y = -1;
};

// Empty when the profile satisfies the domain restriction (x I_N y implies
// x = y).
std::optional<DomainViolation> validate_domain_restriction(
    const Profile& profile);

// A social choice rule over a finite domain of profiles.
struct SocialChoiceRule {
  std::vector<Alternative> alternatives;
  int num_agents = 0;
  std::vector<Profile> domain;
  std::vector<AltSet> choices;  // Parallel to domain.

  int num_alternatives() const {
    return static_cast<int>(alternatives.size());
  }
  int num_profiles() const { return static_cast<int>(domain.size()); }
  const AltSet& at(int profile) const { return choices.at(profile); }
  bool chooses(int profile, AltIndex x) const;

  int profile_index(const std::string& id) const;
  AltIndex alternative_index(const std::string& id) const;

  // Throws InputError on empty choice sets, bad indices, duplicate ids or
  // preferences of the wrong size.
  void validate() const;

  bool operator==(const SocialChoiceRule&) const = default;
};

// Sorts and deduplicates.
AltSet make_alt_set(std::vector<AltIndex> xs);

struct EfficiencyVerdict {
  bool ok = true;
  int profile = -1;
  AltIndex dominated = -1;
  AltIndex dominator = -1;
};

// Every chosen alternative is Pareto-undominated within its profile.
EfficiencyVerdict check_efficiency(const SocialChoiceRule& f);

}  // namespace rotakit

#endif  // ROTAKIT_MODEL_H_
