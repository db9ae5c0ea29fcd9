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
#include "graphcumulants/graph_sum.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "graphcumulants/cumulants.hpp"
#include "graphcumulants/parallel.hpp"

namespace gc {

namespace {

using Key = std::vector<Rational>;  // upper-triangle weights

Key Weights(const Graph& g) {
  const int64_t n = g.node_count();
  Key k(n * (n - 1) / 2, 0);
  auto slot = [n](int64_t u, int64_t v) {
    if (u > v) std::swap(u, v);
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
  };
  for (const Edge& e : g.edges()) k[slot(e.u, e.v)] = e.w;
  return k;
}

Graph FromWeights(int64_t n, const Key& k) {
  std::vector<Edge> edges;
  size_t i = 0;
  for (int32_t u = 0; u < n; ++u)
    for (int32_t v = u + 1; v < n; ++v, ++i)
      if (k[i] != 0) edges.push_back({u, v, k[i]});
  return Graph(n, std::move(edges), {.weighted = true});
}

std::vector<std::vector<int>> Permutations(int64_t n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do all.push_back(p); while (std::next_permutation(p.begin(), p.end()));
  return all;
}

Key Permuted(const Key& k, int64_t n, const std::vector<int>& perm) {
  Key out(k.size());
  size_t i = 0;
  for (int64_t u = 0; u < n; ++u)
    for (int64_t v = u + 1; v < n; ++v, ++i) {
      int64_t a = perm[u], b = perm[v];
      if (a > b) std::swap(a, b);
      out[a * (2 * n - a - 1) / 2 + (b - a - 1)] = k[i];
    }
  return out;
}

Key CanonicalKey(const Key& k, int64_t n,
                 const std::vector<std::vector<int>>& perms) {
  Key best = k;
  for (const auto& p : perms) {
    Key c = Permuted(k, n, p);
    if (c < best) best = std::move(c);
  }
  return best;
}

void CheckSize(int64_t n) {
  if (n > kMaxSumNodes)
    throw SizeCapError("graph sums support at most " +
                       std::to_string(kMaxSumNodes) + " nodes");
}

}  // namespace

GraphDistribution GraphDistribution::PointMass(const Graph& g) {
  return {g.node_count(), {{g, Rational(1)}}};
}

void GraphDistribution::Validate() const {
  if (support.empty()) throw DataError("empty distribution");
  Rational total = 0;
  for (const auto& [g, p] : support) {
    if (g.node_count() != n)
      throw DataError("support graph has " + std::to_string(g.node_count()) +
                      " nodes, expected " + std::to_string(n));
    if (g.directed()) throw DataError("graph sums need undirected graphs");
    if (p <= 0) throw DataError("support probabilities must be positive");
    total += p;
  }
  if (total != 1) throw DataError("probabilities sum to " + FormatRational(total));
}

GraphDistribution Canonicalized(const GraphDistribution& d) {
  d.Validate();
  CheckSize(d.n);
  const auto perms = Permutations(d.n);
  std::map<Key, Rational> merged;
  for (const auto& [g, p] : d.support)
    merged[CanonicalKey(Weights(g), d.n, perms)] += p;
  GraphDistribution out{d.n, {}};
  for (const auto& [k, p] : merged) out.support.emplace_back(FromWeights(d.n, k), p);
  return out;
}

GraphDistribution SumDistributions(const GraphDistribution& a,
                                   const GraphDistribution& b, int threads) {
  a.Validate();
  b.Validate();
  if (a.n != b.n)
    throw DataError("graph sums need equal node counts (" + std::to_string(a.n) +
                    " vs " + std::to_string(b.n) + ")");
  CheckSize(a.n);
  const int64_t n = a.n;
  const auto perms = Permutations(n);
  const Rational share(1, static_cast<long>(perms.size()));
  const int64_t pairs = static_cast<int64_t>(a.support.size() * b.support.size());
  const int workers = static_cast<int>(
      std::max<int64_t>(1, std::min<int64_t>(ResolveThreads(threads), pairs)));
  std::vector<std::map<Key, Rational>> partial(workers);
  ParallelChunks(pairs, workers, [&](int t, int64_t begin, int64_t end) {
    for (int64_t i = begin; i < end; ++i) {
      const auto& [ga, pa] = a.support[i / b.support.size()];
      const auto& [gb, pb] = b.support[i % b.support.size()];
      const Key ka = Weights(ga), kb = Weights(gb);
      const Rational p = pa * pb * share;
      for (const auto& perm : perms) {
        Key s = Permuted(kb, n, perm);
        for (size_t j = 0; j < s.size(); ++j) s[j] += ka[j];
        partial[t][CanonicalKey(s, n, perms)] += p;
      }
    }
  });
  for (int t = 1; t < workers; ++t)
    for (auto& [k, p] : partial[t]) partial[0][k] += p;
  GraphDistribution out{n, {}};
  for (const auto& [k, p] : partial[0]) out.support.emplace_back(FromWeights(n, k), p);
  return out;
}

GraphDistribution ErDistribution(int64_t n, const Rational& p) {
  CheckSize(n);
  if (p < 0 || p > 1) throw UsageError("edge probability must lie in [0, 1]");
  const int64_t slots = n * (n - 1) / 2;
  GraphDistribution d{n, {}};
  for (int64_t mask = 0; mask < (int64_t{1} << slots); ++mask) {
    Key k(slots, 0);
    Rational prob = 1;
    for (int64_t i = 0; i < slots; ++i) {
      k[i] = (mask >> i) & 1;
      prob *= (mask >> i) & 1 ? p : 1 - p;
    }
    if (prob != 0) d.support.emplace_back(FromWeights(n, k), prob);
  }
  return d;
}

MomentVector DistributionMoments(const GraphDistribution& d, int order) {
  d.Validate();
  MomentVector total;
  for (const auto& [g, p] : d.support) {
    const Graph w(g.node_count(), g.edges(), {.weighted = true});
    MomentVector m = ComputeMoments(w, order);
    if (total.universe == nullptr) {
      total = m;
      for (int i = 0; i < total.size(); ++i)
        if (total.has(i)) total.set(i, 0);
    }
    for (int i = 0; i < m.size(); ++i)
      if (m.has(i)) total.set(i, total[i] + p * m[i]);
  }
  return total;
}

CumulantVector DistributionCumulants(const GraphDistribution& d, int order) {
  return MomentsToCumulants(DistributionMoments(d, order));
}

bool SameDistribution(const GraphDistribution& a, const GraphDistribution& b) {
  if (a.n != b.n) return false;
  const auto ca = Canonicalized(a), cb = Canonicalized(b);
  if (ca.support.size() != cb.support.size()) return false;
  for (size_t i = 0; i < ca.support.size(); ++i)
    if (Weights(ca.support[i].first) != Weights(cb.support[i].first) ||
        ca.support[i].second != cb.support[i].second)
      return false;
  return true;
}

SumDemo RunSumDemo(int order) {
  const GraphFeatures w{.weighted = true};
  const Graph edge(3, {{0, 1, 1}}, w);
  const Graph triangle(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}, w);
  const Graph wedge(3, {{0, 1, 1}, {1, 2, 1}}, w);
  SumDemo demo;
  demo.a = {3, {{edge, Rational(1, 4)}, {triangle, Rational(3, 4)}}};
  demo.b = GraphDistribution::PointMass(wedge);
  demo.sum = SumDistributions(demo.a, demo.b);
  demo.kappa_a = DistributionCumulants(demo.a, order);
  demo.kappa_b = DistributionCumulants(demo.b, order);
  demo.kappa_sum = DistributionCumulants(demo.sum, order);
  return demo;
}

}  // namespace gc
