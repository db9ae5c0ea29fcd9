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
#include "graphcumulants/small_graph.hpp"

#include <algorithm>
#include <vector>

#include "graphcumulants/base.hpp"

namespace gc {

int SmallGraph::edges() const {
  int e = 0;
  for (int i = 0; i < n; ++i) e += std::popcount(adj[i]);
  return e / 2;
}

uint64_t SmallGraph::code() const {
  uint64_t c = 0;
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if (has(i, j)) c |= uint64_t{1} << k;
  return c;
}

SmallGraph SmallGraph::FromCode(int n, uint64_t code) {
  SmallGraph g;
  g.n = n;
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if (code >> k & 1) g.add(i, j);
  return g;
}

namespace {

// Ordered partition: cells are contiguous ranges of `elems`.
struct Partition {
  std::array<uint8_t, 16> elems{};
  std::array<uint8_t, 16> cell_start{};  // start of the cell holding position
  int n = 0;

  int cell_end(int start) const {
    int e = start + 1;
    while (e < n && cell_start[e] == start) ++e;
    return e;
  }
  bool discrete() const {
    for (int i = 0; i < n; ++i)
      if (cell_start[i] != i) return false;
    return true;
  }
};

// Splits every cell by neighbor counts into each splitter cell until stable.
void Refine(const SmallGraph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < p.n && !changed; s = p.cell_end(s)) {
      uint16_t mask = 0;
      const int se = p.cell_end(s);
      for (int i = s; i < se; ++i) mask |= static_cast<uint16_t>(1u << p.elems[i]);
      for (int c = 0; c < p.n; ) {
        const int ce = p.cell_end(c);
        if (ce - c > 1) {
          std::array<uint8_t, 16> cnt{};
          bool differ = false;
          for (int i = c; i < ce; ++i) {
            cnt[p.elems[i]] = static_cast<uint8_t>(std::popcount(
                static_cast<uint16_t>(g.adj[p.elems[i]] & mask)));
            differ |= cnt[p.elems[i]] != cnt[p.elems[c]];
          }
          if (differ) {
            std::stable_sort(p.elems.begin() + c, p.elems.begin() + ce,
                             [&](uint8_t a, uint8_t b) { return cnt[a] < cnt[b]; });
            int start = c;
            for (int i = c; i < ce; ++i) {
              if (i > c && cnt[p.elems[i]] != cnt[p.elems[i - 1]]) start = i;
              p.cell_start[i] = static_cast<uint8_t>(start);
            }
            changed = true;
          }
        }
        c = ce;
      }
    }
  }
}

struct Searcher {
  const SmallGraph& g;
  bool have = false;
  uint64_t best = 0;
  uint64_t count = 0;
  std::array<uint8_t, 16> best_order{};

  uint64_t Code(const Partition& p) const {
    std::array<uint8_t, 16> pos{};
    for (int i = 0; i < p.n; ++i) pos[p.elems[i]] = static_cast<uint8_t>(i);
    SmallGraph h;
    h.n = g.n;
    for (int i = 0; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j)
        if (g.has(i, j)) h.add(pos[i], pos[j]);
    return h.code();
  }

  void Run(Partition p) {
    Refine(g, p);
    if (p.discrete()) {
      const uint64_t c = Code(p);
      if (!have || c > best) {
        have = true;
        best = c;
        count = 1;
        best_order = p.elems;
      } else if (c == best) {
        ++count;
      }
      return;
    }
    int target = 0;
    while (p.cell_end(target) - target == 1) target = p.cell_end(target);
    const int end = p.cell_end(target);
    for (int k = target; k < end; ++k) {
      Partition q = p;
      std::swap(q.elems[target], q.elems[k]);
      std::sort(q.elems.begin() + target + 1, q.elems.begin() + end);
      for (int i = target + 1; i < end; ++i) q.cell_start[i] = static_cast<uint8_t>(target + 1);
      Run(q);
    }
  }
};

}  // namespace

SmallCanonical CanonicalizeSmall(const SmallGraph& g) {
  if (g.n > SmallGraph::kMaxNodes)
    throw SizeCapError("small-graph canonical forms support at most 11 nodes");
  Partition p;
  p.n = g.n;
  for (int i = 0; i < g.n; ++i) {
    p.elems[i] = static_cast<uint8_t>(i);
    p.cell_start[i] = 0;
  }
  // Degree classes first keep the search shallow.
  std::stable_sort(p.elems.begin(), p.elems.begin() + g.n,
                   [&](uint8_t a, uint8_t b) { return g.degree(a) < g.degree(b); });
  for (int i = 0; i < g.n; ++i)
    p.cell_start[i] = static_cast<uint8_t>(
        i > 0 && g.degree(p.elems[i]) == g.degree(p.elems[i - 1]) ? p.cell_start[i - 1] : i);
  Searcher s{g};
  s.Run(p);
  SmallCanonical out;
  out.code = s.best;
  out.automorphisms = s.count;
  out.order = s.best_order;
  return out;
}

}  // namespace gc
