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
#ifndef GRAPHCUMULANTS_SMALL_GRAPH_HPP_
#define GRAPHCUMULANTS_SMALL_GRAPH_HPP_

#include <array>
#include <bit>
#include <cstdint>

namespace gc {

// Simple undirected graph on at most 11 nodes as adjacency bit rows; its
// canonical code packs the upper triangle into 55 bits.
struct SmallGraph {
  static constexpr int kMaxNodes = 11;

  int n = 0;
  std::array<uint16_t, 16> adj{};

  bool has(int i, int j) const { return adj[i] >> j & 1; }
  void add(int i, int j) {
    adj[i] |= static_cast<uint16_t>(1u << j);
    adj[j] |= static_cast<uint16_t>(1u << i);
  }
  void toggle(int i, int j) {
    adj[i] ^= static_cast<uint16_t>(1u << j);
    adj[j] ^= static_cast<uint16_t>(1u << i);
  }
  int degree(int i) const { return std::popcount(adj[i]); }
  int edges() const;

  // Bit k of the code is the k-th pair (i < j) in row-major order.
  uint64_t code() const;
  static SmallGraph FromCode(int n, uint64_t code);
};

struct SmallCanonical {
  uint64_t code = 0;          // maximal code over canonical labellings
  uint64_t automorphisms = 1;
  std::array<uint8_t, 16> order{};  // order[k] = original node at position k
};

// Individualization and refinement over equitable partitions.
SmallCanonical CanonicalizeSmall(const SmallGraph& g);

}  // namespace gc

#endif  // GRAPHCUMULANTS_SMALL_GRAPH_HPP_
