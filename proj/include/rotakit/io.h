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

// JSON reading and writing. Agents are numbered from 0 everywhere.
//
// Document layout:
//   {"alternatives": ["x", {"id": "y", "label": "..."}],
//    "agents": 3,
//    "profiles": [{"id": "R", "ranks": [[0, 1, 2], ...]},
//                 {"id": "S", "orders": [["x", ["y", "z"]], ...]}],
//    "scr": {"R": ["x", "y"], "S": ["x"]},
//    "rights": {"states": [{"id": "x", "kind": "base", "outcome": "x"},
//                          {"id": "(x,R)", "kind": "graph",
//                           "outcome": "x", "profile": "R"}],
//               "gamma": [{"from": "x", "to": "(x,R)",
//                          "coalitions": [[0], [1, 2]], "rule": 3}]},
//    "orderings": {"R": ["y", "x"], "S": ["x"]}}
// "ranks" gives each agent's rank per alternative (0 is best); "orders"
// lists alternatives best first, with inner arrays for ties.

#ifndef ROTAKIT_IO_H_
#define ROTAKIT_IO_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rotakit/conditions.h"
#include "rotakit/constructors.h"
#include "rotakit/domains.h"
#include "rotakit/model.h"
#include "rotakit/rights.h"
#include "rotakit/solvers.h"

namespace rotakit {

using Json = nlohmann::ordered_json;

struct Document {
  std::vector<Alternative> alternatives;
  int num_agents = 0;
  std::vector<Profile> profiles;
  std::optional<std::vector<AltSet>> choices;  // Parallel to profiles.
  std::optional<RightsStructure> rights;
  // Circular orderings of the choice sets, one per profile.
  std::optional<OrderingWitness> orderings;

  int profile_index(const std::string& id) const;
  // Requires choices.
  SocialChoiceRule scr() const;
  static Document FromScr(const SocialChoiceRule& f);

  bool operator==(const Document&) const = default;
};

Document parse_document(const Json& j);
Document load_document(const std::string& path);
Json load_json(const std::string& path);
Json to_json(const Document& doc);

Json rights_to_json(const RightsStructure& rights,
                    const std::vector<Alternative>& alternatives,
                    const std::vector<Profile>& profiles);
RightsStructure rights_from_json(const Json& j,
                                 const std::vector<Alternative>& alternatives,
                                 const std::vector<Profile>& profiles,
                                 int num_agents);

Json report_to_json(const SolutionReport& report,
                    const RightsStructure& rights,
                    const std::vector<Alternative>& alternatives);
Json to_json(const EfficiencyVerdict& v, const SocialChoiceRule& f);
Json to_json(const MaskinVerdict& v, const SocialChoiceRule& f);
Json to_json(const IndirectVerdict& v, const SocialChoiceRule& f);
Json to_json(const RotationMonotonicityVerdict& v, const SocialChoiceRule& f);
Json to_json(const PropertyMVerdict& v, const SocialChoiceRule& f);
Json to_json(const SharedOrderingResult& r, const SocialChoiceRule& f);
Json to_json(const ImplementationVerdict& v, const SocialChoiceRule& f,
             const RightsStructure& rights);
Json to_json(const DiagnosticSets& d, const SocialChoiceRule& f,
             const RightsStructure& rights);

std::string status_name(SearchStatus s);

// Domain problem files: {"domain": "jobs" | "marriage" | "economy", ...}.
std::vector<JobRotationProblem> parse_job_domain(const Json& j);
std::vector<MarriageProblem> parse_marriage_domain(const Json& j);
std::vector<Economy> parse_economy_domain(const Json& j);
Json job_domain_to_json(const std::vector<JobRotationProblem>& domain);
Json marriage_domain_to_json(const std::vector<MarriageProblem>& domain);
Json economy_domain_to_json(const std::vector<Economy>& domain);

}  // namespace rotakit

#endif  // ROTAKIT_IO_H_
