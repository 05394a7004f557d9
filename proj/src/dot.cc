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

#include "rotakit/dot.h"

#include <algorithm>
#include <sstream>
#include <string>

namespace rotakit {
namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const RightsStructure& rights, const ImprovementDigraph& g,
                   const std::vector<Alternative>& alternatives,
                   const DotOptions& options) {
  std::ostringstream out;
  out << "digraph " << quote(options.name) << " {\n";
  out << "  node [shape=ellipse];\n";
  for (std::size_t c = 0; c < options.clusters.size(); ++c) {
    out << "  subgraph cluster_" << c << " {\n    style=rounded;\n";
    for (int s : options.clusters[c]) out << "    n" << s << ";\n";
    out << "  }\n";
  }
  for (int s = 0; s < rights.num_states(); ++s) {
    const State& st = rights.state(s);
    std::string label = st.id;
    const std::string& outcome = alternatives.at(st.outcome).id;
    if (outcome != st.id) label += "\\n" + outcome;
    out << "  n" << s << " [label=" << quote(label);
    if (std::find(options.highlight.begin(), options.highlight.end(), s) !=
        options.highlight.end()) {
      out << ", style=filled, fillcolor=lightgrey";
    }
    out << "];\n";
  }
  for (int s = 0; s < g.num_nodes; ++s) {
    for (int t : g.successors[s]) {
      std::string label;
      for (const ImprovementEdge& e : g.edges) {
        if (e.from != s || e.to != t) continue;
        if (!label.empty()) label += " ";
        label += e.coalition.to_string();
      }
      out << "  n" << s << " -> n" << t << " [label=" << quote(label)
          << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace rotakit
