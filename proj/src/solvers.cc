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

#include "rotakit/solvers.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace rotakit {

std::string concept_name(Concept c) {
  switch (c) {
    case Concept::kCore:
      return "core";
    case Concept::kAbsorbing:
      return "absorbing";
    case Concept::kMss:
      return "mss";
    case Concept::kGeneralizedStable:
      return "gss";
    case Concept::kRotationPrograms:
      return "rotation";
  }
  return "unknown";
}

Concept parse_concept(const std::string& name) {
  for (Concept c : {Concept::kCore, Concept::kAbsorbing, Concept::kMss,
                    Concept::kGeneralizedStable, Concept::kRotationPrograms}) {
    if (concept_name(c) == name) return c;
  }
  throw InputError("unknown solution concept '" + name + "'");
}

AltSet outcomes_of(const RightsStructure& rights, const StateSet& states) {
  AltSet out;
  for (int s : states) out.push_back(rights.outcome(s));
  return make_alt_set(std::move(out));
}

SolutionReport compute_core(const SocialEnvironment& env) {
  const ImprovementDigraph g = build_improvement_digraph(env);
  StateSet core;
  for (int s = 0; s < g.num_nodes; ++s) {
    if (g.successors[s].empty()) core.push_back(s);
  }
  SolutionReport report;
  report.concept_tag = Concept::kCore;
  report.outcome_sets.push_back(outcomes_of(env.rights(), core));
  report.state_sets.push_back(std::move(core));
  return report;
}

std::vector<StateSet> strongly_connected_components(
    const ImprovementDigraph& g) {
  // Iterative Tarjan: each frame holds a node and its next successor slot.
  const int n = g.num_nodes;
  std::vector<int> dfs_index(n, -1);
  std::vector<int> lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> frames;
  std::vector<StateSet> components;
  int counter = 0;

  for (int root = 0; root < n; ++root) {
    if (dfs_index[root] != -1) continue;
    frames.emplace_back(root, 0);
    dfs_index[root] = lowlink[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, slot] = frames.back();
      const auto& succ = g.successors[v];
      if (slot < succ.size()) {
        const int w = succ[slot++];
        if (dfs_index[w] == -1) {
          dfs_index[w] = lowlink[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], dfs_index[w]);
        }
        continue;
      }
      const int done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const int parent = frames.back().first;
        lowlink[parent] = std::min(lowlink[parent], lowlink[done]);
      }
      if (lowlink[done] == dfs_index[done]) {
        StateSet component;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != done);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

std::vector<StateSet> compute_absorbing_sets(const SocialEnvironment& env) {
  return compute_absorbing_sets(build_improvement_digraph(env));
}

std::vector<StateSet> compute_absorbing_sets(const ImprovementDigraph& g) {
  std::vector<StateSet> components = strongly_connected_components(g);
  std::vector<int> component_of(g.num_nodes, -1);
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (int s : components[c]) component_of[s] = static_cast<int>(c);
  }
  std::vector<StateSet> terminal;
  for (std::size_t c = 0; c < components.size(); ++c) {
    bool closed = true;
    for (int s : components[c]) {
      for (int t : g.successors[s]) {
        if (component_of[t] != static_cast<int>(c)) closed = false;
      }
    }
    if (closed) terminal.push_back(components[c]);
  }
  std::sort(terminal.begin(), terminal.end(),
            [](const StateSet& a, const StateSet& b) {
              return a.front() < b.front();
            });
  return terminal;
}

bool deters_and_stabilizes(const ImprovementDigraph& g,
                           const std::vector<bool>& candidate) {
  for (int s = 0; s < g.num_nodes; ++s) {
    if (!candidate[s]) continue;
    for (int t : g.successors[s]) {
      if (!candidate[t]) return false;
    }
  }
  // Backward search from the candidate marks every state with a path in.
  std::vector<std::vector<int>> predecessors(g.num_nodes);
  for (int s = 0; s < g.num_nodes; ++s) {
    for (int t : g.successors[s]) predecessors[t].push_back(s);
  }
  std::vector<bool> reaches = candidate;
  std::vector<int> stack;
  for (int s = 0; s < g.num_nodes; ++s) {
    if (candidate[s]) stack.push_back(s);
  }
  while (!stack.empty()) {
    const int t = stack.back();
    stack.pop_back();
    for (int s : predecessors[t]) {
      if (!reaches[s]) {
        reaches[s] = true;
        stack.push_back(s);
      }
    }
  }
  return std::all_of(reaches.begin(), reaches.end(), [](bool b) { return b; });
}

SolutionReport compute_mss(const SocialEnvironment& env) {
  return compute_mss(build_improvement_digraph(env), env.rights());
}

SolutionReport compute_mss(const ImprovementDigraph& g,
                           const RightsStructure& rights) {
  StateSet mss;
  for (const StateSet& a : compute_absorbing_sets(g)) {
    mss.insert(mss.end(), a.begin(), a.end());
  }
  std::sort(mss.begin(), mss.end());

  SolutionReport report;
  report.concept_tag = Concept::kMss;
  std::vector<bool> member(g.num_nodes, false);
  for (int s : mss) member[s] = true;
  report.deterrence = true;
  for (int s : mss) {
    for (int t : g.successors[s]) {
      if (!member[t]) report.deterrence = false;
    }
  }
  report.external_stability = true;
  for (int s = 0; s < g.num_nodes; ++s) {
    if (member[s]) continue;
    auto path = find_myopic_improvement_path(g, s, mss);
    if (!path) {
      report.external_stability = false;
      continue;
    }
    report.witnesses.push_back(EntryWitness{s, std::move(*path)});
  }
  report.outcome_sets.push_back(outcomes_of(rights, mss));
  report.state_sets.push_back(std::move(mss));
  return report;
}

std::vector<StateSet> compute_generalized_stable_sets(
    const SocialEnvironment& env, std::uint64_t cap) {
  const ImprovementDigraph g = build_improvement_digraph(env);
  const std::vector<StateSet> absorbing = compute_absorbing_sets(g);
  std::uint64_t selections = 1;
  for (const StateSet& a : absorbing) {
    selections *= a.size();
    if (selections > cap) {
      throw CapExceeded("generalized stable set enumeration exceeds cap of " +
                        std::to_string(cap) + " selections");
    }
  }
  const auto reach = strict_reachability(g);
  std::vector<StateSet> out;
  std::vector<std::size_t> pick(absorbing.size(), 0);
  while (true) {
    StateSet v;
    for (std::size_t a = 0; a < absorbing.size(); ++a) {
      v.push_back(absorbing[a][pick[a]]);
    }
    std::sort(v.begin(), v.end());
    bool internal = true;
    for (int s : v) {
      for (int t : v) {
        if (s != t && reach[s][t]) internal = false;
      }
    }
    bool external = true;
    for (int s = 0; s < g.num_nodes && external; ++s) {
      if (std::binary_search(v.begin(), v.end(), s)) continue;
      external = std::any_of(v.begin(), v.end(),
                             [&](int t) { return reach[s][t]; });
    }
    if (internal && external) out.push_back(std::move(v));
    std::size_t a = 0;
    while (a < absorbing.size() && ++pick[a] == absorbing[a].size()) {
      pick[a++] = 0;
    }
    if (a == absorbing.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

RotationProgramVerdict is_rotation_program(const SocialEnvironment& env,
                                           const std::vector<int>& ordered,
                                           RotationDirection direction) {
  return is_rotation_program(build_improvement_digraph(env), env, ordered,
                             direction);
}

RotationProgramVerdict is_rotation_program(const ImprovementDigraph& g,
                                           const SocialEnvironment& env,
                                           const std::vector<int>& ordered,
                                           RotationDirection direction) {
  if (ordered.empty()) throw InputError("rotation program must be nonempty");
  const RightsStructure& rights = env.rights();
  std::set<int> seen;
  for (int s : ordered) {
    if (s < 0 || s >= rights.num_states()) {
      throw InputError("state index out of range");
    }
    if (!seen.insert(s).second) {
      throw InputError("rotation program lists a state twice");
    }
  }
  const int m = static_cast<int>(ordered.size());
  std::set<AltIndex> outcomes;
  for (int pos = 0; pos < m; ++pos) {
    if (!outcomes.insert(rights.outcome(ordered[pos])).second) {
      return RotationProgramVerdict{false, 1, pos, ordered[pos]};
    }
  }
  for (int pos = 0; pos < m; ++pos) {
    const int s = ordered[pos];
    const int next = ordered[(pos + 1) % m];
    for (int t : g.successors[s]) {
      if (t != next) return RotationProgramVerdict{false, 2, pos, t};
    }
    if (m == 1) continue;
    bool entitled = false;
    for (Coalition k : rights.entitled(s, next)) {
      const bool fwd = coalition_prefers(env.profile(), k,
                                         rights.outcome(next),
                                         rights.outcome(s));
      const bool lit = coalition_prefers(env.profile(), k, rights.outcome(s),
                                         rights.outcome(next));
      if (direction == RotationDirection::kForward ? fwd : lit) {
        entitled = true;
        break;
      }
    }
    if (!entitled) return RotationProgramVerdict{false, 3, pos, next};
  }
  return RotationProgramVerdict{};
}

PartitionResult partition_into_rotation_programs(
    const SocialEnvironment& env, const StateSet& states,
    RotationDirection direction) {
  return partition_into_rotation_programs(build_improvement_digraph(env), env,
                                          states, direction);
}

PartitionResult partition_into_rotation_programs(
    const ImprovementDigraph& g, const SocialEnvironment& env,
    const StateSet& states, RotationDirection direction) {
  PartitionResult result;
  auto fail = [&](int s, std::string reason) {
    result.ok = false;
    result.witness_state = s;
    result.reason = std::move(reason);
    return result;
  };
  if (states.empty()) return fail(-1, "empty state set");
  std::vector<bool> member(g.num_nodes, false);
  for (int s : states) member.at(s) = true;
  for (int s : states) {
    if (g.successors[s].size() > 1) {
      return fail(s, "more than one improving successor");
    }
    if (g.successors[s].size() == 1 && !member[g.successors[s].front()]) {
      return fail(s, "improving move leaves the set");
    }
  }
  std::vector<bool> placed(g.num_nodes, false);
  for (int s : states) {
    if (placed[s]) continue;
    std::vector<int> block{s};
    placed[s] = true;
    if (!g.successors[s].empty()) {
      int t = g.successors[s].front();
      while (t != s) {
        if (placed[t]) return fail(s, "state is not on an improving cycle");
        placed[t] = true;
        block.push_back(t);
        if (g.successors[t].empty()) {
          return fail(s, "state is not on an improving cycle");
        }
        t = g.successors[t].front();
      }
    }
    result.blocks.push_back(std::move(block));
  }
  const RightsStructure& rights = env.rights();
  const AltSet image = outcomes_of(rights, result.blocks.front());
  for (const auto& block : result.blocks) {
    const RotationProgramVerdict v =
        is_rotation_program(g, env, block, direction);
    if (!v.ok) {
      return fail(block[v.position],
                  "block fails rotation clause " + std::to_string(v.clause));
    }
    if (outcomes_of(rights, block) != image) {
      return fail(block.front(), "blocks have different outcome sets");
    }
  }
  return result;
}

}  // namespace rotakit
