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

#include "rotakit/constructors.h"

#include <algorithm>
#include <string>
#include <vector>

namespace rotakit {
namespace {

std::string graph_state_id(const SocialChoiceRule& f, int r, AltIndex z) {
  return "(" + f.alternatives[z].id + "," + f.domain[r].id + ")";
}

void grant_all(RightsStructure& rights, int from, int to, int num_agents,
               int rule) {
  for (int i = 0; i < num_agents; ++i) {
    rights.grant(from, to, Coalition::Singleton(i), rule);
  }
}

// Everything except the moves among graph-pair states of one profile.
RightsStructure build_common(const SocialChoiceRule& f,
                             std::vector<std::vector<int>>& graph_states) {
  f.validate();
  RightsStructure rights;
  const int nz = f.num_alternatives();
  for (AltIndex x = 0; x < nz; ++x) {
    rights.add_state(State{f.alternatives[x].id, StateKind::kBase, x, -1});
  }
  graph_states.assign(f.num_profiles(), {});
  for (int r = 0; r < f.num_profiles(); ++r) {
    for (AltIndex z : f.at(r)) {
      graph_states[r].push_back(rights.add_state(
          State{graph_state_id(f, r, z), StateKind::kGraphPair, z, r}));
    }
  }
  for (int r = 0; r < f.num_profiles(); ++r) {
    const Profile& profile = f.domain[r];
    for (int s : graph_states[r]) {
      const AltIndex z = rights.outcome(s);
      for (AltIndex x = 0; x < nz; ++x) {
        for (int i = 0; i < f.num_agents; ++i) {
          if (profile.prefs[i].weakly_prefers(z, x)) {
            rights.grant(s, x, Coalition::Singleton(i), kRuleGraphToBase);
          }
        }
      }
    }
  }
  for (AltIndex x = 0; x < nz; ++x) {
    for (int s = nz; s < rights.num_states(); ++s) {
      grant_all(rights, x, s, f.num_agents, kRuleBaseToGraph);
    }
    for (AltIndex y = 0; y < nz; ++y) {
      if (x != y) grant_all(rights, x, y, f.num_agents, kRuleBaseToBase);
    }
  }
  return rights;
}

}  // namespace

RightsStructure build_full_rights_structure(const SocialChoiceRule& f) {
  std::vector<std::vector<int>> graph_states;
  RightsStructure rights = build_common(f, graph_states);
  for (const auto& states : graph_states) {
    for (int s : states) {
      for (int t : states) {
        if (s != t) grant_all(rights, s, t, f.num_agents, kRuleWithinGraph);
      }
    }
  }
  return rights;
}

RightsStructure build_consecutive_rights_structure(
    const SocialChoiceRule& f, const OrderingWitness& orderings) {
  if (static_cast<int>(orderings.size()) != f.num_profiles()) {
    throw InputError("need one ordering per profile");
  }
  std::vector<std::vector<int>> graph_states;
  RightsStructure rights = build_common(f, graph_states);
  for (int r = 0; r < f.num_profiles(); ++r) {
    const std::vector<AltIndex>& x = orderings[r];
    validate_ordering(f, r, x);
    const int m = static_cast<int>(x.size());
    if (m < 2) continue;
    for (int k = 0; k < m; ++k) {
      grant_all(rights, graph_state(rights, r, x[k]),
                graph_state(rights, r, x[(k + 1) % m]), f.num_agents,
                kRuleWithinGraph);
    }
  }
  return rights;
}

int base_state(const RightsStructure& rights, AltIndex x) {
  for (int s = 0; s < rights.num_states(); ++s) {
    const State& st = rights.state(s);
    if (st.kind == StateKind::kBase && st.outcome == x) return s;
  }
  throw InputError("no base state for alternative " + std::to_string(x));
}

int graph_state(const RightsStructure& rights, int profile, AltIndex z) {
  for (int s = 0; s < rights.num_states(); ++s) {
    const State& st = rights.state(s);
    if (st.kind == StateKind::kGraphPair && st.profile == profile &&
        st.outcome == z) {
      return s;
    }
  }
  throw InputError("no graph-pair state for alternative " +
                   std::to_string(z) + " at profile " +
                   std::to_string(profile));
}

StateSet DiagnosticSets::union_all() const {
  StateSet out = m;
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), q.begin(), q.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DiagnosticSets compute_diagnostic_sets(const RightsStructure& rights,
                                       const SocialChoiceRule& f,
                                       int profile) {
  const Profile& r = f.domain.at(profile);
  const ImprovementDigraph g =
      build_improvement_digraph(SocialEnvironment(rights, r));
  DiagnosticSets d;
  for (int s = 0; s < rights.num_states(); ++s) {
    const State& st = rights.state(s);
    if (st.kind == StateKind::kGraphPair && st.profile == profile) {
      d.m.push_back(s);
    }
    if (st.kind == StateKind::kBase) {
      const bool unanimous_top = std::all_of(
          r.prefs.begin(), r.prefs.end(),
          [&](const Preference& p) { return p.rank(st.outcome) == 0; });
      if (unanimous_top) d.u.push_back(s);
    }
  }
  // Backward search from M(R) and U(R).
  std::vector<std::vector<int>> predecessors(g.num_nodes);
  for (int s = 0; s < g.num_nodes; ++s) {
    for (int t : g.successors[s]) predecessors[t].push_back(s);
  }
  std::vector<bool> reaches(g.num_nodes, false);
  std::vector<int> stack = d.m;
  stack.insert(stack.end(), d.u.begin(), d.u.end());
  for (int s : stack) reaches[s] = true;
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
  for (int rp = 0; rp < f.num_profiles(); ++rp) {
    StateSet q;
    for (int s = 0; s < rights.num_states(); ++s) {
      const State& st = rights.state(s);
      if (st.kind == StateKind::kGraphPair && st.profile == rp &&
          !reaches[s]) {
        q.push_back(s);
      }
    }
    if (q.empty()) continue;
    d.q.insert(d.q.end(), q.begin(), q.end());
    d.q_by_profile.emplace_back(rp, std::move(q));
  }
  std::sort(d.q.begin(), d.q.end());
  return d;
}

namespace {

ImplementationVerdict verify(const RightsStructure& rights,
                             const SocialChoiceRule& f, bool rotation,
                             RotationDirection direction) {
  f.validate();
  rights.validate(f.num_alternatives(), f.num_agents);
  ImplementationVerdict verdict;
  for (int r = 0; r < f.num_profiles(); ++r) {
    const SocialEnvironment env(rights, f.domain[r]);
    const ImprovementDigraph g = build_improvement_digraph(env);
    const SolutionReport mss = compute_mss(g, rights);
    ProfileImplementation p;
    p.profile = r;
    p.expected = f.at(r);
    p.produced = mss.outcome_sets.front();
    if (p.produced != p.expected) {
      p.ok = false;
      p.reason = "MSS outcomes differ from the chosen set";
    } else if (rotation) {
      PartitionResult part = partition_into_rotation_programs(
          g, env, mss.state_sets.front(), direction);
      if (!part.ok) {
        p.ok = false;
        p.reason = part.reason + " at state '" +
                   (part.witness_state >= 0
                        ? rights.state(part.witness_state).id
                        : std::string()) +
                   "'";
      }
      p.blocks = std::move(part.blocks);
    }
    verdict.ok = verdict.ok && p.ok;
    verdict.profiles.push_back(std::move(p));
  }
  return verdict;
}

}  // namespace

ImplementationVerdict verify_implementation_in_mss(
    const RightsStructure& rights, const SocialChoiceRule& f) {
  return verify(rights, f, false, RotationDirection::kForward);
}

ImplementationVerdict verify_implementation_in_rotation_programs(
    const RightsStructure& rights, const SocialChoiceRule& f,
    RotationDirection direction) {
  return verify(rights, f, true, direction);
}

}  // namespace rotakit
