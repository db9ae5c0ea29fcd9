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

#include <gtest/gtest.h>

#include <random>

#include "graphcumulants/local.hpp"
#include "graphcumulants/motif_count.hpp"
#include "oracle.hpp"

namespace gc {
namespace {

Graph Make(int n, std::vector<std::pair<int, int>> e) {
  std::vector<Edge> edges;
  for (auto [u, v] : e) edges.push_back({u, v, 1});
  return Graph(n, edges, {});
}

// Triangle 0-1-2 with pendant 2-3 on five nodes.
Graph Paw() { return Make(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

TEST(NodeLocal, Example) {
  const LocalReport r = NodeLocalCumulants(Paw(), 2);
  EXPECT_FALSE(r.edge_anchor);
  EXPECT_EQ(r.at("edge-self").count, 3);
  EXPECT_EQ(r.at("edge-self").moment, Rational(3, 4));
  EXPECT_EQ(r.at("edge-other").count, 1);
  EXPECT_EQ(r.at("edge-other").moment, Rational(1, 6));
  EXPECT_EQ(r.at("wedge-center").count, 3);
  EXPECT_EQ(r.at("wedge-center").moment, Rational(1, 2));
  EXPECT_EQ(*r.at("wedge-center").cumulant, Rational(1, 2) - Rational(9, 16));
  EXPECT_EQ(r.at("wedge-end").count, 2);
  EXPECT_EQ(r.at("triangle").count, 1);
  EXPECT_EQ(r.at("triangle").normalization, 6);
}

TEST(NodeLocal, IsolatedNodeHasNoScaledValues) {
  const LocalReport r = NodeLocalCumulants(Paw(), 4);
  EXPECT_EQ(r.at("edge-self").moment, 0);
  EXPECT_FALSE(r.at("triangle").scaled.has_value());
  EXPECT_FALSE(r.at("triangle").reason.empty());
}

TEST(EdgeLocal, Example) {
  const LocalReport r = EdgeLocalCumulants(Paw(), 0, 1);
  EXPECT_TRUE(r.edge_anchor);
  EXPECT_EQ(r.at("edge-star").moment, 1);
  EXPECT_EQ(r.at("edge-detached").moment, Rational(1, 3));
  EXPECT_EQ(r.at("wedge-attached").count, 2);
  EXPECT_EQ(r.at("wedge-attached").moment, Rational(1, 3));
  EXPECT_EQ(r.at("triangle").count, 1);
  EXPECT_EQ(r.at("triangle").moment, Rational(1, 3));
  EXPECT_THROW(EdgeLocalCumulants(Paw(), 0, 3), DataError);
}

TEST(Local, CompleteGraphHasZeroHigherCumulants) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) e.push_back({u, v});
  const Graph g = Make(6, e);
  for (const LocalReport& r : {NodeLocalCumulants(g, 0), EdgeLocalCumulants(g, 1, 4)})
    for (const LocalEntry& x : r.entries)
      if (x.order >= 2) EXPECT_EQ(*x.cumulant, 0) << x.name;
}

TEST(Local, RejectsUnsupportedInputs) {
  EXPECT_THROW(NodeLocalCumulants(Paw(), 9), DataError);
  const Graph d(3, {{0, 1, 1}}, {.directed = true});
  EXPECT_THROW(NodeLocalCumulants(d, 0), Error);
}

TEST(Local, AggregatesToGlobalCounts) {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 20; ++rep) {
    const Graph g = oracle::RandomGraph(rng, 12, 0.35);
    const SubgraphCounts c = CountSubgraphs(g, 3);
    Integer center = 0, ends = 0, tri_nodes = 0, tri_edges = 0;
    for (const LocalReport& r : AllNodeLocal(g, 3, 2)) {
      center += r.at("wedge-center").count;
      ends += r.at("wedge-end").count;
      tri_nodes += r.at("triangle").count;
    }
    for (const LocalReport& r : AllEdgeLocal(g, 3, 2)) tri_edges += r.at("triangle").count;
    EXPECT_EQ(Rational(center), c.at("wedge"));
    EXPECT_EQ(Rational(ends), 2 * c.at("wedge"));
    EXPECT_EQ(Rational(tri_nodes), 3 * c.at("triangle"));
    EXPECT_EQ(Rational(tri_edges), 3 * c.at("triangle"));
    EXPECT_EQ(AllEdgeLocal(g)[0].anchor(), AllEdgeLocal(g, 3, 1)[0].anchor());
  }
}

}  // namespace
}  // namespace gc
