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

#ifndef GRAPHCUMULANTS_UNIVERSE_HPP_
#define GRAPHCUMULANTS_UNIVERSE_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graphcumulants/graph.hpp"
#include "graphcumulants/pattern.hpp"

namespace gc {

// Which subgraph classes exist: the feature set of the host graphs plus the
// maximum order.
struct UniverseSpec {
  Mode mode = Mode::kSimple;
  bool directed = false;
  bool multi = false;  // weighted: edges may repeat on a pair
  bool bipartite = false;
  std::vector<std::string> palette;  // node colors; empty means one color
  int order = 1;

  int palette_size() const {
    return palette.empty() ? 1 : static_cast<int>(palette.size());
  }
  std::string key() const;
};

UniverseSpec SpecFor(const Graph& g, int order);

// Largest supported order for the feature set.
int MaxOrder(const UniverseSpec& spec);

// One term of a partition expansion: a multiset of class indices.
struct PartitionTerm {
  std::vector<int> parts;   // sorted class indices
  Integer multiplicity;     // number of edge partitions giving these parts
  Integer mobius;           // aggregated (-1)^(b-1) (b-1)! coefficient
  int disjoint_union = -1;  // class of the disjoint union of the parts
};

struct MonomialTerm {
  Integer coefficient;
  std::vector<int> factors;  // connected class indices, with repetition
};

struct ClassInfo {
  SubgraphId id;
  Pattern form;
  uint64_t automorphisms = 1;
  bool connected = true;
  std::vector<int> color_need;        // nodes needed per color
  std::vector<PartitionTerm> terms;   // edge partitions of this class
  // For disconnected classes: embeddings as a polynomial in the embedding
  // counts of connected classes.
  std::vector<MonomialTerm> embedding_polynomial;
};

class ClassUniverse {
 public:
  explicit ClassUniverse(UniverseSpec spec);

  const UniverseSpec& spec() const { return spec_; }
  int size() const { return static_cast<int>(classes_.size()); }
  const ClassInfo& operator[](int i) const { return classes_[i]; }
  const std::vector<ClassInfo>& classes() const { return classes_; }

  std::optional<int> find(const SubgraphId& id) const;
  std::optional<int> find_code(const std::string& code) const;
  // Accepts a serialized id or an alias.
  int resolve(std::string_view name) const;
  int classify(const Pattern& p) const;

  // Whether the class fits into a host with the given color-class sizes.
  bool realizable(int index, std::span<const int64_t> color_sizes) const;

 private:
  void Grow();
  void AddDisconnected();
  void BuildPartitions();
  void BuildPolynomials();
  int Add(const Pattern& p);

  UniverseSpec spec_;
  std::vector<ClassInfo> classes_;
  std::unordered_map<std::string, int> by_code_;
};

// Shared, lazily built universe for a spec.
std::shared_ptr<const ClassUniverse> GetUniverse(const UniverseSpec& spec);

}  // namespace gc

#endif  // GRAPHCUMULANTS_UNIVERSE_HPP_
