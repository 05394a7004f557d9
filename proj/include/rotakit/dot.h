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

#ifndef ROTAKIT_DOT_H_
#define ROTAKIT_DOT_H_

#include <string>
#include <vector>

#include "rotakit/model.h"
#include "rotakit/rights.h"

namespace rotakit {

struct DotOptions {
  std::string name = "improvement";
  std::vector<int> highlight;              // Drawn filled.
  std::vector<std::vector<int>> clusters;  // Drawn as boxed subgraphs.
};

// Graphviz rendering of an improvement digraph. Parallel edges are merged
// into one edge labelled with all of its coalitions.
std::string to_dot(const RightsStructure& rights, const ImprovementDigraph& g,
                   const std::vector<Alternative>& alternatives,
                   const DotOptions& options = {});

}  // namespace rotakit

#endif  // ROTAKIT_DOT_H_
