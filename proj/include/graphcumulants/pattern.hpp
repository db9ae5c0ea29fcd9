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

#ifndef GRAPHCUMULANTS_PATTERN_HPP_
#define GRAPHCUMULANTS_PATTERN_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphcumulants/base.hpp"

namespace gc {

enum class Mode : uint8_t {
  kSimple,
  kDirected,
  kWeighted,
  kAttributed,
  kBipartite,
  kLocalNode,
  kLocalEdge,
};

std::string_view ModeName(Mode mode);
Mode ParseMode(std::string_view name);

// Node color reserved for the distinguished node of local-node classes.
inline constexpr uint8_t kAnchorColor = 255;
// Edge label reserved for the distinguished edge of local-edge classes.
inline constexpr uint8_t kStarLabel = 255;

// Small labelled (multi)graph used as a subgraph pattern. label(u, v) is the
// multiplicity of u-v (u->v when directed); 0 means absent.
struct Pattern {
  int n = 0;
  bool directed = false;
  std::vector<uint8_t> color;
  std::vector<uint8_t> label;

  static Pattern Empty(int n, bool directed);
  // Edges as (u, v); repeated pairs raise the multiplicity.
  static Pattern FromEdges(int n, bool directed,
                           std::span<const std::pair<int, int>> edges,
                           std::span<const uint8_t> colors = {});

  uint8_t at(int u, int v) const { return label[u * n + v]; }
  void set(int u, int v, uint8_t x) {
    label[u * n + v] = x;
    if (!directed) label[v * n + u] = x;
  }
  int add_node(uint8_t c);

  // Number of edge units (multiplicities summed; the star edge counts once).
  int edge_units() const;
  // Number of node pairs (ordered when directed) carrying an edge.
  int edge_slots() const;
  bool isolated(int v) const;
  bool connected() const;
  std::vector<std::vector<int>> components() const;
  Pattern induced(std::span<const int> nodes) const;
  // Drops isolated nodes other than anchor-colored ones.
  Pattern without_isolated() const;
  // Node v of the result is node perm[v] of this pattern.
  Pattern relabeled(std::span<const int> perm) const;
  std::vector<int> color_counts(int palette_size) const;

  bool operator==(const Pattern&) const = default;
};

struct CanonicalForm {
  Pattern form;              // canonically labelled, isolated nodes dropped
  uint64_t automorphisms = 1;
  std::string code;          // byte string identifying the class
};

// Canonical labelling by color refinement and search within refined cells;
// disconnected patterns are canonicalized component-wise.
CanonicalForm Canonicalize(const Pattern& p);

// Serialized class identity: "mode:r:hex[:alias]".
class SubgraphId {
 public:
  SubgraphId() = default;
  SubgraphId(Mode mode, int order, std::string code, std::string alias)
      : mode_(mode), order_(order), code_(std::move(code)),
        alias_(std::move(alias)) {}

  Mode mode() const { return mode_; }
  int order() const { return order_; }
  const std::string& code() const { return code_; }
  const std::string& alias() const { return alias_; }
  std::string hex() const;
  std::string str() const;
  // Canonically labelled pattern decoded from the code.
  Pattern pattern() const;

  static SubgraphId Parse(std::string_view text);

  bool operator==(const SubgraphId& o) const {
    return mode_ == o.mode_ && order_ == o.order_ && code_ == o.code_;
  }
  std::strong_ordering operator<=>(const SubgraphId& o) const {
    if (auto c = mode_ <=> o.mode_; c != 0) return c;
    if (auto c = order_ <=> o.order_; c != 0) return c;
    return code_ <=> o.code_;
  }

 private:
  Mode mode_ = Mode::kSimple;
  int order_ = 0;
  std::string code_;
  std::string alias_;
};

struct SubgraphIdHash {
  size_t operator()(const SubgraphId& id) const;
};

inline constexpr int kMaxPatternNodes = 8;

// Class of a small pattern; the alias comes from the built-in dictionary.
// `palette` names the node colors for attributed and bipartite aliases.
SubgraphId CanonicalSubgraphId(const Pattern& p, Mode mode,
                               std::span<const std::string> palette = {});

// Number of copies of the class in the complete (di)graph whose color
// classes have the given sizes; zero when the class does not fit.
Rational CompleteCount(const SubgraphId& id,
                       std::span<const int64_t> color_sizes);
Rational CompleteCount(const SubgraphId& id, int64_t n);

// The pattern behind a named alias ("wedge", "wedge-in-in", ...).
Pattern NamedPattern(Mode mode, std::string_view alias);

}  // namespace gc

#endif  // GRAPHCUMULANTS_PATTERN_HPP_
