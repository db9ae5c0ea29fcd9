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

#include <numeric>
#include <random>

#include "graphcumulants/unbiased.hpp"
#include "oracle.hpp"

namespace gc {
namespace {

Graph Make(int n, std::vector<std::pair<int, int>> e) {
  std::vector<Edge> edges;
  for (auto [u, v] : e) edges.push_back({u, v, 1});
  return Graph(n, edges, {});
}

TEST(Unbiased, PathExample) {
  const CumulantVector k = UnbiasedCumulants(ComputeMoments(Make(4, {{0, 1}, {1, 2}, {2, 3}}), 2));
  EXPECT_EQ(k.at("edge"), Rational(1, 2));
  EXPECT_EQ(k.at("wedge"), Rational(-1, 6));
  EXPECT_EQ(k.at("two-parallel"), 0);
}

TEST(Unbiased, DisconnectedClassesAreZero) {
  std::mt19937_64 rng(5);
  const CumulantVector k = UnbiasedCumulants(ComputeMoments(oracle::RandomGraph(rng, 12, 0.4), 4));
  for (int i = 0; i < k.size(); ++i)
    if (!k.universe->classes()[i].connected) EXPECT_EQ(k[i], 0);
}

TEST(Unbiased, CompleteGraphHasZeroHigherCumulants) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v) e.push_back({u, v});
  const CumulantVector k = UnbiasedCumulants(ComputeMoments(Make(7, e), 3));
  EXPECT_EQ(k.at("edge"), 1);
  EXPECT_EQ(k.at("triangle"), 0);
  EXPECT_EQ(k.at("wedge"), 0);
}

// Averaging over every induced subgraph of m nodes reproduces the parent's
// unbiased cumulants exactly.
TEST(Unbiased, ExactlyInvariantUnderSubsampling) {
  std::mt19937_64 rng(17);
  const Graph g = oracle::RandomGraph(rng, 9, 0.45);
  const CumulantVector parent = UnbiasedCumulants(ComputeMoments(g, 3));
  std::vector<Rational> sum(parent.size(), 0);
  int subsets = 0;
  std::vector<int> pick(9, 0);
  std::fill(pick.begin(), pick.begin() + 7, 1);
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<int> nodes;
    for (int v = 0; v < 9; ++v)
      if (pick[v]) nodes.push_back(v);
    const CumulantVector k = UnbiasedCumulants(ComputeMoments(g.induced(nodes), 3));
    for (int i = 0; i < k.size(); ++i) sum[i] += k[i];
    ++subsets;
  } while (std::next_permutation(pick.begin(), pick.end()));
  EXPECT_EQ(subsets, 36);
  for (int i = 0; i < parent.size(); ++i)
    EXPECT_EQ(sum[i] / subsets, parent[i]) << parent.universe->classes()[i].id.str();
}

TEST(Unbiased, PopulationSize) {
  EXPECT_EQ(*PopulationSize({.eta = Rational(1, 11)}, 10), 11);
  EXPECT_EQ(*PopulationSize({.eta = Rational(0)}, 10), 10);
  EXPECT_FALSE(PopulationSize({}, 10).has_value());
  EXPECT_FALSE(PopulationSize({.eta = Rational(1)}, 10).has_value());
  EXPECT_EQ(*PopulationSize({.population = Rational(25)}, 10), 25);
  EXPECT_THROW(PopulationSize({.population = Rational(5)}, 10), Error);
}

TEST(Unbiased, EtaZeroGivesObservedMoments) {
  std::mt19937_64 rng(8);
  const MomentVector m = ComputeMoments(oracle::RandomGraph(rng, 10, 0.5), 2);
  const MomentVector t = PartialUnbiasedMoments(UnbiasedCumulants(m), {.eta = Rational(0)});
  for (int i = 0; i < m.size(); ++i) EXPECT_EQ(t[i], m[i]);
}

TEST(Unbiased, FullyUnbiasedTargets) {
  const MomentVector m = ComputeMoments(Make(4, {{0, 1}, {1, 2}, {2, 3}}), 2);
  const MomentVector t = UnbiasedTargets(m);
  // Cumulants of the targets equal the unbiased cumulants.
  const CumulantVector a = MomentsToCumulants(t), b = UnbiasedCumulants(m);
  for (int i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(Unbiased, PartialTargetsInterpolate) {
  std::mt19937_64 rng(21);
  const MomentVector m = ComputeMoments(oracle::RandomGraph(rng, 10, 0.4), 2);
  const CumulantVector k = UnbiasedCumulants(m);
  const MomentVector full = PartialUnbiasedMoments(k, {});
  const MomentVector half = PartialUnbiasedMoments(k, {.population = Rational(20)});
  const int w = m.universe->resolve("wedge");
  EXPECT_EQ(half.at("edge"), m.at("edge"));
  const Rational lo = std::min(m[w], full[w]), hi = std::max(m[w], full[w]);
  EXPECT_GE(half[w], lo);
  EXPECT_LE(half[w], hi);
}

TEST(Variance, ErClosedForm) {
  for (int n : {5, 20, 33})
    for (Rational p : {Rational(1, 2), Rational(3, 10), Rational(1, 7)}) {
      const Rational v = VarianceKappa1(ErMoments({.order = 2}, n, p));
      EXPECT_EQ(v, 2 * p * (1 - p) / (n * (n - 1)));
    }
  EXPECT_EQ(VarianceKappa1(ErMoments({.order = 2}, 20, Rational(1, 2))), Rational(1, 760));
}

TEST(Variance, JackknifeIsDeterministic) {
  std::mt19937_64 rng(2);
  const Graph g = oracle::RandomGraph(rng, 30, 0.2);
  const int t = GetUniverse({.order = 3})->resolve("triangle");
  JackknifeSpec spec{.replicates = 40, .delete_fraction = 0.3, .seed = 9};
  const VarianceEstimate a = JackknifeVariance(g, 3, t, spec);
  spec.threads = 3;
  const VarianceEstimate b = JackknifeVariance(g, 3, t, spec);
  EXPECT_GT(a.variance, 0);
  EXPECT_EQ(a.variance, b.variance);
  EXPECT_EQ(a.replicate_values.size(), 40u);
  EXPECT_NE(a.method.find("jackknife"), std::string::npos);
}

TEST(ZTest, Values) {
  const SubgraphId id = GetUniverse({.order = 3})->classes()[0].id;
  const TestResult r = ZTest(id, Rational(2), 1.0, "closed-form");
  EXPECT_DOUBLE_EQ(r.z, 2);
  EXPECT_DOUBLE_EQ(r.z2, 4);
  EXPECT_NEAR(r.p_value, 0.0455003, 1e-6);
  EXPECT_EQ(r.sign, 1);
  const TestResult neg = ZTest(id, Rational(-1, 2), 0.25, "closed-form");
  EXPECT_DOUBLE_EQ(neg.z, -1);
  EXPECT_EQ(neg.sign, -1);
  EXPECT_NEAR(neg.p_value, 0.3173105, 1e-6);
}

TEST(ZTest, Welch) {
  const WelchResult w = WelchCompare(1.0, 0.5, 0.0, 0.5);
  EXPECT_DOUBLE_EQ(w.t, 1.0);
  EXPECT_NEAR(w.p_value, 0.3173105, 1e-6);
  EXPECT_TRUE(w.heuristic);
}

}  // namespace
}  // namespace gc
