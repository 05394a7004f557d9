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

#ifndef ROTAKIT_RIGHTS_H_
#define ROTAKIT_RIGHTS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rotakit/model.h"

namespace rotakit {

// A nonempty set of agents, stored as a bit mask (agents 0..30).
class Coalition {
 public:
  Coalition() = default;
  static Coalition Of(const std::vector<int>& members);
  static Coalition Singleton(int agent);
  static Coalition FromMask(std::uint32_t mask) { return Coalition(mask); }

  std::uint32_t mask() const { return mask_; }
  bool contains(int agent) const {
    return agent >= 0 && agent < 32 && ((mask_ >> agent) & 1u);
  }
  bool empty() const { return mask_ == 0; }
  int size() const;
  std::vector<int> members() const;
  std::string to_string() const;  // e.g. "{0,2}"

  auto operator<=>(const Coalition&) const = default;

 private:
  explicit Coalition(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

// h(t) P_K h(s): every member of K strictly prefers x to y.
bool coalition_prefers(const Profile& profile, Coalition k, AltIndex x,
                       AltIndex y);

enum class StateKind { kBase, kGraphPair, kOpaque };

struct State {
  std::string id;
  StateKind kind = StateKind::kOpaque;
  AltIndex outcome = -1;
  int profile = -1;  // Profile index for graph-pair states.

  bool operator==(const State&) const = default;
};

// Entitlements from one state to another. `rule` records which construction
// rule granted them (0 when built by hand).
struct RightsArc {
  int to = -1;
  std::vector<Coalition> coalitions;
  int rule = 0;

  bool operator==(const RightsArc&) const = default;
};

// Gamma = (S, h, gamma) over a fixed alternative set.
class RightsStructure {
 public:
  int add_state(State state);

  // Adds K to gamma(from, to). Self-arcs are rejected. Duplicates are
  // ignored. The rule tag of an arc is kept from its first grant.
  void grant(int from, int to, Coalition k, int rule = 0);

  int num_states() const { return static_cast<int>(states_.size()); }
  const State& state(int s) const { return states_.at(s); }
  const std::vector<State>& states() const { return states_; }
  AltIndex outcome(int s) const { return state(s).outcome; }
  int state_index(const std::string& id) const;

  // Arcs leaving s, sorted by target.
  const std::vector<RightsArc>& arcs_from(int s) const { return arcs_.at(s); }
  // gamma(from, to); empty when nothing is granted.
  const std::vector<Coalition>& entitled(int from, int to) const;
  int rule(int from, int to) const;

  // Every coalition in every gamma entry is a singleton.
  bool is_individual_based() const;

  // Checks outcomes against the alternative count and coalitions against
  // the agent count.
  void validate(int num_alternatives, int num_agents) const;

  bool operator==(const RightsStructure&) const = default;

 private:
  std::vector<State> states_;
  std::vector<std::vector<RightsArc>> arcs_;
};

// A rights structure paired with one profile. Holds references only.
class SocialEnvironment {
 public:
  SocialEnvironment(const RightsStructure& rights, const Profile& profile);

  const RightsStructure& rights() const { return *rights_; }
  const Profile& profile() const { return *profile_; }
  int num_states() const { return rights_->num_states(); }

 private:
  const RightsStructure* rights_;
  const Profile* profile_;
};

struct ImprovementEdge {
  int from = -1;
  int to = -1;
  Coalition coalition;
};

// Edge (s, t, K) iff K in gamma(s, t) and h(t) P_K h(s).
struct ImprovementDigraph {
  int num_nodes = 0;
  std::vector<ImprovementEdge> edges;      // Ordered by (from, to, K).
  std::vector<std::vector<int>> successors;  // Distinct, ascending.

  bool has_edge(int from, int to) const;
  // Coalitions labelling edges from -> to, in gamma order.
  std::vector<Coalition> labels(int from, int to) const;
};

ImprovementDigraph build_improvement_digraph(const SocialEnvironment& env);

// A finite myopic improvement path s_1..s_m; coalitions[j] moves
// states[j] to states[j + 1].
struct MyopicPath {
  std::vector<int> states;
  std::vector<Coalition> coalitions;
};

// Shortest path (by edge count) from `from` into `target`, found by BFS
// visiting successors in state declaration order. A start state already in
// the target yields the one-state path.
std::optional<MyopicPath> find_myopic_improvement_path(
    const SocialEnvironment& env, int from, const std::vector<int>& target);
std::optional<MyopicPath> find_myopic_improvement_path(
    const ImprovementDigraph& g, int from, const std::vector<int>& target);

// reach[s][t]: a path of length >= 1 leads from s to t.
std::vector<std::vector<bool>> strict_reachability(const ImprovementDigraph& g);

}  // namespace rotakit

#endif  // ROTAKIT_RIGHTS_H_
