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
#ifndef GRAPHCUMULANTS_MOTIF_COUNT_HPP_
#define GRAPHCUMULANTS_MOTIF_COUNT_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "graphcumulants/graph.hpp"
#include "graphcumulants/universe.hpp"

namespace gc {

// Copies of every class in a host graph. Counts are per embedded copy (not
// per automorphism); weighted copies contribute the product of their edge
// weights raised to the copy's edge multiplicities.
struct SubgraphCounts {
  std::shared_ptr<const ClassUniverse> universe;
  int64_t n = 0;
  std::vector<int64_t> color_sizes;
  std::vector<Rational> counts;  // indexed like the universe
  bool disconnected_derived = false;

  int order() const { return universe->spec().order; }
  const Rational& operator[](int i) const { return counts[i]; }
  // Count of the class with the given alias or serialized id.
  const Rational& at(std::string_view name) const {
    return counts[universe->resolve(name)];
  }
};

struct CountOptions {
  int threads = 0;  // 0: ResolveThreads default
};

// Connected classes only; disconnected entries are left at zero.
SubgraphCounts CountConnected(const Graph& g, int order,
                              const CountOptions& options = {});

// Fills the disconnected entries from the connected ones by inclusion and
// exclusion over node overlaps. Throws DataError when an unweighted count
// comes out negative or fractional.
void DeriveDisconnected(SubgraphCounts& counts);

// CountConnected followed by DeriveDisconnected.
SubgraphCounts CountSubgraphs(const Graph& g, int order,
                              const CountOptions& options = {});

}  // namespace gc

#endif  // GRAPHCUMULANTS_MOTIF_COUNT_HPP_
