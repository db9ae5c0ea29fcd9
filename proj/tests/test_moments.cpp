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

#include "graphcumulants/moments.hpp"
#include "oracle.hpp"

namespace gc {
namespace {

Graph Make(int n, std::vector<std::pair<int, int>> e) {
  std::vector<Edge> edges;
  for (auto [u, v] : e) edges.push_back({u, v, 1});
  return Graph(n, edges, {});
}

TEST(Moments, PathExample) {
  const MomentVector m = ComputeMoments(Make(4, {{0, 1}, {1, 2}, {2, 3}}), 2);
  EXPECT_EQ(m.at("edge"), Rational(1, 2));
  EXPECT_EQ(m.at("wedge"), Rational(1, 6));
  EXPECT_EQ(m.at("two-parallel"), Rational(1, 3));
}

TEST(Moments, CompleteGraphIsAllOnes) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 8; ++u)
    for (int v = u + 1; v < 8; ++v) e.push_back({u, v});
  const MomentVector m = ComputeMoments(Make(8, e), 3);
  for (int i = 0; i < m.size(); ++i) EXPECT_EQ(m[i], 1);
}

TEST(Moments, EmptyGraphIsAllZeros) {
  const MomentVector m = ComputeMoments(Graph(8, {}, {}), 3);
  for (int i = 0; i < m.size(); ++i) EXPECT_EQ(m[i], 0);
}

TEST(Moments, ClassesThatDoNotFitAreAbsent) {
  const MomentVector m = ComputeMoments(Make(3, {{0, 1}}), 2);
  const int i = m.universe->resolve("two-parallel");
  EXPECT_FALSE(m.has(i));
  EXPECT_FALSE(m.reasons[i].empty());
  EXPECT_THROW(m[i], DataError);
}

TEST(Moments, DirectedNormalization) {
  const Graph g(3, {{0, 1, 1}, {1, 0, 1}}, {.directed = true});
  const MomentVector m = ComputeMoments(g, 2);
  EXPECT_EQ(m.at("edge"), Rational(1, 3));
  EXPECT_EQ(m.at("reciprocal"), Rational(1, 3));
}

TEST(Moments, ErMomentsArePowers) {
  UniverseSpec s;
  s.order = 4;
  const MomentVector m = ErMoments(s, 10, Rational(2, 7));
  for (int i = 0; i < m.size(); ++i)
    EXPECT_EQ(m[i], Pow(Rational(2, 7), (*m.universe)[i].id.order()));
}

// The mean over all induced (n-1)-node subgraphs equals the parent moment.
TEST(Moments, InheritedOnAverage) {
  std::mt19937_64 rng(12);
  const Graph g = oracle::RandomGraph(rng, 30, 0.3);
  const MomentVector parent = ComputeMoments(g, 3);
  std::vector<Rational> sum(parent.size(), 0);
  for (int drop = 0; drop < 30; ++drop) {
    std::vector<int> keep;
    for (int v = 0; v < 30; ++v)
      if (v != drop) keep.push_back(v);
    const MomentVector m = ComputeMoments(g.induced(keep), 3);
    for (int i = 0; i < m.size(); ++i) sum[i] += m[i];
  }
  for (int i = 0; i < parent.size(); ++i)
    EXPECT_EQ(sum[i] / 30, parent[i]) << (*parent.universe)[i].id.str();
}

TEST(Moments, AttributedNormalization) {
  ParseOptions o;
  o.attributes = "0 g\n1 p\n2 p\n3 g\n";
  const Graph g = ParseGraph("0 1\n1 2\n2 3\n", o);
  const MomentVector m = ComputeMoments(g, 2);
  EXPECT_EQ(m.at("edge[g,p]"), Rational(1, 2));
  EXPECT_EQ(m.at("edge[p,p]"), Rational(1, 1));
  EXPECT_EQ(m.at("edge[g,g]"), Rational(0));
}

}  // namespace
}  // namespace gc
