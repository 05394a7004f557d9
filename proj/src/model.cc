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

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace rotakit {

Preference::Preference(std::vector<int> ranks) : ranks_(std::move(ranks)) {
  std::set<int> used(ranks_.begin(), ranks_.end());
  for (int r : used) {
    if (r < 0) throw InputError("preference ranks must be non-negative");
  }
  std::vector<int> levels(used.begin(), used.end());
  for (int& r : ranks_) {
    r = static_cast<int>(std::lower_bound(levels.begin(), levels.end(), r) -
                         levels.begin());
  }
}

Preference Preference::FromOrder(const std::vector<AltIndex>& best_first) {
  const int n = static_cast<int>(best_first.size());
  std::vector<int> ranks(n, -1);
  for (int pos = 0; pos < n; ++pos) {
    const AltIndex x = best_first[pos];
    if (x < 0 || x >= n || ranks[x] != -1) {
      throw InputError("order must be a permutation of the alternatives");
    }
    ranks[x] = pos;
  }
  return Preference(std::move(ranks));
}

int Preference::rank(AltIndex x) const {
  if (x < 0 || x >= size()) {
    throw InputError("alternative index " + std::to_string(x) +
                     " out of range");
  }
  return ranks_[x];
}

bool Preference::is_linear() const {
  std::set<int> used(ranks_.begin(), ranks_.end());
  return used.size() == ranks_.size();
}

AltSet Preference::top() const {
  AltSet out;
  for (int x = 0; x < size(); ++x) {
    if (ranks_[x] == 0) out.push_back(x);
  }
  return out;
}

void validate_profile(const Profile& profile, int num_alternatives) {
  if (profile.prefs.empty()) {
    throw InputError("profile '" + profile.id + "' has no agents");
  }
  for (int i = 0; i < profile.num_agents(); ++i) {
    if (profile.prefs[i].size() != num_alternatives) {
      throw InputError("profile '" + profile.id + "' agent " +
                       std::to_string(i) + " ranks " +
                       std::to_string(profile.prefs[i].size()) +
                       " alternatives, expected " +
                       std::to_string(num_alternatives));
    }
  }
}

namespace {

const Preference& agent_pref(const Profile& profile, int agent) {
  if (agent < 0 || agent >= profile.num_agents()) {
    throw InputError("agent index " + std::to_string(agent) +
                     " out of range");
  }
  return profile.prefs[agent];
}

}  // namespace

AltSet lower_contour_set(const Profile& profile, int agent, AltIndex x) {
  const Preference& p = agent_pref(profile, agent);
  const int rx = p.rank(x);
  AltSet out;
  for (int y = 0; y < p.size(); ++y) {
    if (p.rank(y) >= rx) out.push_back(y);
  }
  return out;
}

bool has_preference_reversal(const Profile& r, const Profile& r_prime,
                             int agent, AltIndex x) {
  const Preference& p = agent_pref(r, agent);
  const Preference& q = agent_pref(r_prime, agent);
  if (p.size() != q.size()) {
    throw InputError("profiles rank different numbers of alternatives");
  }
  for (int y = 0; y < p.size(); ++y) {
    if (p.weakly_prefers(x, y) && q.prefers(y, x)) return true;
  }
  return false;
}

bool is_monotonic_transformation(const Profile& r, const Profile& r_prime,
                                 AltIndex x) {
  if (r.num_agents() != r_prime.num_agents()) {
    throw InputError("profiles have different numbers of agents");
  }
  for (int i = 0; i < r.num_agents(); ++i) {
    if (has_preference_reversal(r, r_prime, i, x)) return false;
  }
  return true;
}

bool pareto_dominates(const Profile& profile, AltIndex x, AltIndex z) {
  bool strict = false;
  for (const Preference& p : profile.prefs) {
    if (p.prefers(z, x)) return false;
    if (p.prefers(x, z)) strict = true;
  }
  return strict;
}

AltSet pareto_frontier(const Profile& profile) {
  if (profile.prefs.empty()) return {};
  const int n = profile.prefs.front().size();
  AltSet out;
  for (int z = 0; z < n; ++z) {
    bool dominated = false;
    for (int x = 0; x < n && !dominated; ++x) {
      dominated = pareto_dominates(profile, x, z);
    }
    if (!dominated) out.push_back(z);
  }
  return out;
}

std::optional<DomainViolation> validate_domain_restriction(
    const Profile& profile) {
  if (profile.prefs.empty()) return std::nullopt;
  const int n = profile.prefs.front().size();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      bool all_indifferent = true;
      for (const Preference& p : profile.prefs) {
        if (!p.indifferent(x, y)) {
          all_indifferent = false;
          break;
        }
      }
      if (all_indifferent) return DomainViolation{x, y};
    }
  }
  return std::nullopt;
}

AltSet make_alt_set(std::vector<AltIndex> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

bool SocialChoiceRule::chooses(int profile, AltIndex x) const {
  const AltSet& s = choices.at(profile);
  return std::binary_search(s.begin(), s.end(), x);
}

int SocialChoiceRule::profile_index(const std::string& id) const {
  for (int k = 0; k < num_profiles(); ++k) {
    if (domain[k].id == id) return k;
  }
  throw InputError("unknown profile '" + id + "'");
}

AltIndex SocialChoiceRule::alternative_index(const std::string& id) const {
  for (int k = 0; k < num_alternatives(); ++k) {
    if (alternatives[k].id == id) return k;
  }
  throw InputError("unknown alternative '" + id + "'");
}

void SocialChoiceRule::validate() const {
  if (alternatives.empty()) throw InputError("no alternatives");
  if (num_agents <= 0) throw InputError("number of agents must be positive");
  if (num_agents > 31) throw InputError("at most 31 agents are supported");
  if (domain.empty()) throw InputError("empty domain");
  if (choices.size() != domain.size()) {
    throw InputError("choice sets and domain differ in length");
  }
  std::set<std::string> alt_ids;
  for (const Alternative& a : alternatives) {
    if (!alt_ids.insert(a.id).second) {
      throw InputError("duplicate alternative id '" + a.id + "'");
    }
  }
  std::set<std::string> profile_ids;
  for (int k = 0; k < num_profiles(); ++k) {
    const Profile& r = domain[k];
    if (!profile_ids.insert(r.id).second) {
      throw InputError("duplicate profile id '" + r.id + "'");
    }
    if (r.num_agents() != num_agents) {
      throw InputError("profile '" + r.id + "' has " +
                       std::to_string(r.num_agents()) + " agents, expected " +
                       std::to_string(num_agents));
    }
    validate_profile(r, num_alternatives());
    const AltSet& c = choices[k];
    if (c.empty()) {
      throw InputError("empty choice set at profile '" + r.id + "'");
    }
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] < 0 || c[j] >= num_alternatives()) {
        throw InputError("choice at profile '" + r.id + "' out of range");
      }
      if (j > 0 && c[j - 1] >= c[j]) {
        throw InputError("choice set at profile '" + r.id +
                         "' must be sorted and duplicate-free");
      }
    }
  }
}

EfficiencyVerdict check_efficiency(const SocialChoiceRule& f) {
  for (int k = 0; k < f.num_profiles(); ++k) {
    for (AltIndex z : f.choices[k]) {
      for (AltIndex x = 0; x < f.num_alternatives(); ++x) {
        if (pareto_dominates(f.domain[k], x, z)) {
          return EfficiencyVerdict{false, k, z, x};
        }
      }
    }
  }
  return EfficiencyVerdict{};
}

}  // namespace rotakit
