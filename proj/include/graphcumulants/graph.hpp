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

#ifndef GRAPHCUMULANTS_GRAPH_HPP_
#define GRAPHCUMULANTS_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphcumulants/base.hpp"

namespace gc {

struct Edge {
  int32_t u = 0;
  int32_t v = 0;
  Rational w = 1;
};

struct GraphFeatures {
  bool directed = false;
  bool weighted = false;
  bool bipartite = false;
};

// Immutable network. Undirected edges are stored with u < v; edges are kept
// sorted by (u, v). Node labels index into a sorted palette.
class Graph {
 public:
  struct Incident {
    int32_t node;
    int32_t edge;
    bool outgoing;  // always true for undirected graphs
  };

  Graph() = default;
  Graph(int64_t n, std::vector<Edge> edges, GraphFeatures features,
        std::vector<int> labels = {}, std::vector<std::string> palette = {});

  int64_t node_count() const { return n_; }
  int64_t edge_count() const { return static_cast<int64_t>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const GraphFeatures& features() const { return features_; }
  bool directed() const { return features_.directed; }
  bool weighted() const { return features_.weighted; }
  bool bipartite() const { return features_.bipartite; }
  bool attributed() const { return !palette_.empty(); }

  // Node label indices (empty when unattributed) and their names.
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<std::string>& palette() const { return palette_; }
  int label(int64_t v) const { return labels_.empty() ? 0 : labels_[v]; }
  std::vector<int64_t> label_counts() const;

  // All edges touching v, sorted by neighbor id.
  std::span<const Incident> incident(int64_t v) const {
    return {inc_.data() + off_[v], inc_.data() + off_[v + 1]};
  }
  int64_t degree(int64_t v) const { return off_[v + 1] - off_[v]; }

  // Index of edge u-v (u->v when directed), if present.
  std::optional<int32_t> find_edge(int64_t u, int64_t v) const;

  // Subgraph induced by `nodes`, relabelled 0..k-1 in the given order.
  Graph induced(std::span<const int> nodes) const;

  // Same graph with different node labels or weights.
  Graph with_labels(std::vector<int> labels,
                    std::vector<std::string> palette) const;

 private:
  int64_t n_ = 0;
  std::vector<Edge> edges_;
  GraphFeatures features_;
  std::vector<int> labels_;
  std::vector<std::string> palette_;
  std::vector<int64_t> off_;
  std::vector<Incident> inc_;
};

struct ParseOptions {
  GraphFeatures features;
  std::optional<int64_t> nodes;
  // Contents of an attribute file: lines "node<TAB>label".
  std::optional<std::string> attributes;
};

Graph ParseGraph(std::string_view text, const ParseOptions& options);

// Edge-list text ("u v [w]") with exact decimal weights.
std::string WriteEdgeList(const Graph& g);

// Attribute-file text ("node<TAB>label"); empty when unattributed.
std::string WriteAttributes(const Graph& g);

}  // namespace gc

#endif  // GRAPHCUMULANTS_GRAPH_HPP_
