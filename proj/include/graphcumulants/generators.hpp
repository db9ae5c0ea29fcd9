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

#ifndef GRAPHCUMULANTS_GENERATORS_HPP_
#define GRAPHCUMULANTS_GENERATORS_HPP_

#include <cstdint>
#include <string_view>

#include "graphcumulants/graph.hpp"

namespace gc {

// Each pair is an edge independently with probability p.
Graph GenerateEr(int64_t n, double p, uint64_t seed, int threads = 0);

// Two communities: nodes [0, ceil(n/2)) and the rest. Pairs within a
// community connect with probability a, pairs across with probability b.
Graph GenerateSsbm(int64_t n, double a, double b, uint64_t seed, int threads = 0);

struct SsbmParameters {
  double a = 0;
  double b = 0;
};

// Chart coordinates: assortativity (a - b) / (a + b) in [-1, 1] and the
// expected mean degree. 0 gives ER, +1 two disjoint ER blocks, -1 a random
// bipartite graph. Throws UsageError when a or b would exceed 1.
SsbmParameters SsbmFromChart(int64_t n, double assortativity, double mean_degree);

// Two equal groups labelled A and B placed uniformly on the unit sphere;
// cross-group pairs within a cap covering a fraction 1 - f of the sphere
// are candidates, and a uniform subset of them matching the mean degree is
// kept. Throws UsageError when too few candidates exist.
Graph GenerateBipartiteGeometric(int64_t n, double f, double mean_degree,
                                 uint64_t seed);

enum class ShuffleMode { kAttributes, kOrientations, kWeights };
ShuffleMode ParseShuffleMode(std::string_view name);

// attributes: permutes node labels; orientations: redraws the direction of
// each single-direction edge; weights: permutes weights over edges.
Graph Shuffle(const Graph& g, ShuffleMode mode, uint64_t seed);

}  // namespace gc

#endif  // GRAPHCUMULANTS_GENERATORS_HPP_
