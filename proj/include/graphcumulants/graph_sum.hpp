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

#ifndef GRAPHCUMULANTS_GRAPH_SUM_HPP_
#define GRAPHCUMULANTS_GRAPH_SUM_HPP_

#include <utility>
#include <vector>

#include "graphcumulants/graph.hpp"
#include "graphcumulants/moments.hpp"

namespace gc {

inline constexpr int64_t kMaxSumNodes = 5;

// Probability distribution over undirected weighted graphs on n nodes. Each
// support graph stands for all of its relabelings with equal weight.
struct GraphDistribution {
  int64_t n = 0;
  std::vector<std::pair<Graph, Rational>> support;

  static GraphDistribution PointMass(const Graph& g);
  // Throws DataError unless probabilities are positive, sum to 1 and every
  // graph has n nodes.
  void Validate() const;
};

// Support graphs are merged when isomorphic as weighted graphs.
GraphDistribution Canonicalized(const GraphDistribution& d);

// Distribution of G + pi(G') for independent G ~ a, G' ~ b and a uniformly
// random relabeling pi. Supports n <= kMaxSumNodes.
GraphDistribution SumDistributions(const GraphDistribution& a,
                                   const GraphDistribution& b, int threads = 0);

// Explicit ER(n, p) over all labeled graphs.
GraphDistribution ErDistribution(int64_t n, const Rational& p);

// Expected weighted moments, then cumulants of those moments.
MomentVector DistributionMoments(const GraphDistribution& d, int order);
CumulantVector DistributionCumulants(const GraphDistribution& d, int order);

// Whether two distributions agree after canonicalization.
bool SameDistribution(const GraphDistribution& a, const GraphDistribution& b);

struct SumDemo {
  GraphDistribution a, b, sum;
  CumulantVector kappa_a, kappa_b, kappa_sum;
};
// Edge with probability 1/4 or triangle with probability 3/4 on three
// nodes, plus a wedge.
SumDemo RunSumDemo(int order = 3);

}  // namespace gc

#endif  // GRAPHCUMULANTS_GRAPH_SUM_HPP_
