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

#include "rotakit/rights.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <string>
#include <vector>

namespace rotakit {

Coalition Coalition::Of(const std::vector<int>& members) {
  if (members.empty()) throw InputError("coalitions must be nonempty");
  std::uint32_t mask = 0;
  for (int i : members) {
    if (i < 0 || i > 30) {
      throw InputError("agent index " + std::to_string(i) + " out of range");
    }
    mask |= 1u << i;
  }
  return Coalition(mask);
}

Coalition Coalition::Singleton(int agent) { return Of({agent}); }

int Coalition::size() const { return std::popcount(mask_); }

std::vector<int> Coalition::members() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string Coalition::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

bool coalition_prefers(const Profile& profile, Coalition k, AltIndex x,
                       AltIndex y) {
  if (k.empty()) return false;
  for (int i : k.members()) {
    if (i >= profile.num_agents()) {
      throw InputError("coalition " + k.to_string() +
                       " names an agent outside the profile");
    }
    if (!profile.prefs[i].prefers(x, y)) return false;
  }
  return true;
}

int RightsStructure::add_state(State state) {
  states_.push_back(std::move(state));
  arcs_.emplace_back();
  return num_states() - 1;
}

void RightsStructure::grant(int from, int to, Coalition k, int rule) {
  if (from < 0 || from >= num_states() || to < 0 || to >= num_states()) {
    throw InputError("rights arc endpoint out of range");
  }
  if (from == to) throw InputError("rights arcs join distinct states");
  if (k.empty()) throw InputError("coalitions must be nonempty");
  std::vector<RightsArc>& arcs = arcs_[from];
  auto it = std::lower_bound(
      arcs.begin(), arcs.end(), to,
      [](const RightsArc& a, int t) { return a.to < t; });
  if (it == arcs.end() || it->to != to) {
    it = arcs.insert(it, RightsArc{to, {}, rule});
  }
  if (std::find(it->coalitions.begin(), it->coalitions.end(), k) ==
      it->coalitions.end()) {
    it->coalitions.push_back(k);
  }
}

int RightsStructure::state_index(const std::string& id) const {
  for (int s = 0; s < num_states(); ++s) {
    if (states_[s].id == id) return s;
  }
  throw InputError("unknown state '" + id + "'");
}

namespace {

const RightsArc* find_arc(const std::vector<RightsArc>& arcs, int to) {
  auto it = std::lower_bound(
      arcs.begin(), arcs.end(), to,
      [](const RightsArc& a, int t) { return a.to < t; });
  if (it == arcs.end() || it->to != to) return nullptr;
  return &*it;
}

}  // namespace

const std::vector<Coalition>& RightsStructure::entitled(int from,
                                                        int to) const {
  static const std::vector<Coalition> kNone;
  const RightsArc* arc = find_arc(arcs_.at(from), to);
  return arc ? arc->coalitions : kNone;
}

int RightsStructure::rule(int from, int to) const {
  const RightsArc* arc = find_arc(arcs_.at(from), to);
  return arc ? arc->rule : 0;
}

bool RightsStructure::is_individual_based() const {
  for (const auto& arcs : arcs_) {
    for (const RightsArc& arc : arcs) {
      for (Coalition k : arc.coalitions) {
        if (k.size() != 1) return false;
      }
    }
  }
  return true;
}

void RightsStructure::validate(int num_alternatives, int num_agents) const {
  std::set<std::string> ids;
  for (const State& s : states_) {
    if (!ids.insert(s.id).second) {
      throw InputError("duplicate state id '" + s.id + "'");
    }
    if (s.outcome < 0 || s.outcome >= num_alternatives) {
      throw InputError("state '" + s.id + "' has an outcome out of range");
    }
  }
  const std::uint32_t allowed =
      num_agents >= 32 ? ~0u : ((1u << num_agents) - 1u);
  for (const auto& arcs : arcs_) {
    for (const RightsArc& arc : arcs) {
      for (Coalition k : arc.coalitions) {
        if ((k.mask() & ~allowed) != 0) {
          throw InputError("coalition " + k.to_string() +
                           " names an agent outside 0.." +
                           std::to_string(num_agents - 1));
        }
      }
    }
  }
}

SocialEnvironment::SocialEnvironment(const RightsStructure& rights,
                                     const Profile& profile)
    : rights_(&rights), profile_(&profile) {
  for (const Preference& p : profile.prefs) {
    for (const State& s : rights.states()) {
      if (s.outcome < 0 || s.outcome >= p.size()) {
        throw InputError("state '" + s.id +
                         "' has an outcome the profile does not rank");
      }
    }
  }
}

bool ImprovementDigraph::has_edge(int from, int to) const {
  const auto& succ = successors.at(from);
  return std::binary_search(succ.begin(), succ.end(), to);
}

std::vector<Coalition> ImprovementDigraph::labels(int from, int to) const {
  std::vector<Coalition> out;
  for (const ImprovementEdge& e : edges) {
    if (e.from == from && e.to == to) out.push_back(e.coalition);
  }
  return out;
}

ImprovementDigraph build_improvement_digraph(const SocialEnvironment& env) {
  const RightsStructure& rights = env.rights();
  ImprovementDigraph g;
  g.num_nodes = rights.num_states();
  g.successors.resize(g.num_nodes);
  for (int s = 0; s < g.num_nodes; ++s) {
    const AltIndex from_outcome = rights.outcome(s);
    for (const RightsArc& arc : rights.arcs_from(s)) {
      const AltIndex to_outcome = rights.outcome(arc.to);
      bool any = false;
      for (Coalition k : arc.coalitions) {
        if (coalition_prefers(env.profile(), k, to_outcome, from_outcome)) {
          g.edges.push_back(ImprovementEdge{s, arc.to, k});
          any = true;
        }
      }
      if (any) g.successors[s].push_back(arc.to);
    }
  }
  return g;
}

std::optional<MyopicPath> find_myopic_improvement_path(
    const SocialEnvironment& env, int from, const std::vector<int>& target) {
  return find_myopic_improvement_path(build_improvement_digraph(env), from,
                                      target);
}

std::optional<MyopicPath> find_myopic_improvement_path(
    const ImprovementDigraph& g, int from, const std::vector<int>& target) {
  if (from < 0 || from >= g.num_nodes) {
    throw InputError("path start state out of range");
  }
  std::vector<bool> in_target(g.num_nodes, false);
  for (int t : target) {
    if (t < 0 || t >= g.num_nodes) {
      throw InputError("path target state out of range");
    }
    in_target[t] = true;
  }
  std::vector<int> parent(g.num_nodes, -2);
  parent[from] = -1;
  std::deque<int> queue{from};
  int found = -1;
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop_front();
    if (in_target[s]) {
      found = s;
      break;
    }
    for (int t : g.successors[s]) {
      if (parent[t] == -2) {
        parent[t] = s;
        queue.push_back(t);
      }
    }
  }
  if (found < 0) return std::nullopt;
  MyopicPath path;
  for (int s = found; s != -1; s = parent[s]) path.states.push_back(s);
  std::reverse(path.states.begin(), path.states.end());
  for (std::size_t j = 0; j + 1 < path.states.size(); ++j) {
    path.coalitions.push_back(
        g.labels(path.states[j], path.states[j + 1]).front());
  }
  return path;
}

std::vector<std::vector<bool>> strict_reachability(
    const ImprovementDigraph& g) {
  std::vector<std::vector<bool>> reach(g.num_nodes,
                                       std::vector<bool>(g.num_nodes, false));
  for (int s = 0; s < g.num_nodes; ++s) {
    std::vector<int> stack(g.successors[s].begin(), g.successors[s].end());
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      if (reach[s][t]) continue;
      reach[s][t] = true;
      for (int u : g.successors[t]) {
        if (!reach[s][u]) stack.push_back(u);
      }
    }
  }
  return reach;
}

}  // namespace rotakit
