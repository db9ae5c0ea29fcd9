// Copyright 2026 The graphcumulants Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHCUMULANTS_LOCAL_HPP_
#define GRAPHCUMULANTS_LOCAL_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphcumulants/graph.hpp"

namespace gc {

// One distinguished-class statistic of a node or edge anchor.
struct LocalEntry {
  std::string name;
  int order = 1;
  Integer count;
  Integer normalization;
  Rational moment;
  std::optional<Rational> cumulant;
  std::optional<Rational> scaled;
  std::string reason;  // why cumulant or scaled is absent
};

struct LocalReport {
  bool edge_anchor = false;
  int64_t u = 0;  // the node, or the first endpoint
  int64_t v = -1;
  std::vector<LocalEntry> entries;

  const LocalEntry& at(std::string_view name) const;
  std::string anchor() const;
};

// Entries: edge-self, edge-other, wedge-center, wedge-end, triangle.
LocalReport NodeLocalCumulants(const Graph& g, int64_t node, int order = 3);

// Entries: edge-star, edge-detached, wedge-attached, wedge-detached,
// triangle. The anchor must be an edge of g.
LocalReport EdgeLocalCumulants(const Graph& g, int64_t u, int64_t v,
                               int order = 3);

std::vector<LocalReport> AllNodeLocal(const Graph& g, int order = 3,
                                      int threads = 0);
std::vector<LocalReport> AllEdgeLocal(const Graph& g, int order = 3,
                                      int threads = 0);

}  // namespace gc

#endif  // GRAPHCUMULANTS_LOCAL_HPP_
