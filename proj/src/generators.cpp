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
#include "graphcumulants/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "graphcumulants/parallel.hpp"
#include "graphcumulants/rng.hpp"

namespace gc {

namespace {

// Stream ids keep the generators' random sequences apart.
enum Stream : uint64_t {
  kErStream = 1,
  kSsbmStream,
  kSpherePoints,
  kSphereSubset,
  kShuffleStream,
};

template <typename Prob>
std::vector<Edge> SamplePairs(int64_t n, uint64_t seed, uint64_t stream,
                              int threads, Prob prob) {
  const CounterRng rng(seed, stream);
  const int workers = static_cast<int>(
      std::max<int64_t>(1, std::min<int64_t>(ResolveThreads(threads), n)));
  std::vector<std::vector<Edge>> part(workers);
  ParallelChunks(n, workers, [&](int t, int64_t begin, int64_t end) {
    for (int64_t u = begin; u < end; ++u)
      for (int64_t v = u + 1; v < n; ++v) {
        const double p = prob(u, v);
        if (p > 0 && rng.uniform_at(static_cast<uint64_t>(u * n + v)) < p)
          part[t].push_back({static_cast<int32_t>(u), static_cast<int32_t>(v), 1});
      }
  });
  std::vector<Edge> edges;
  for (auto& p : part) edges.insert(edges.end(), p.begin(), p.end());
  return edges;
}

void CheckProbability(double p, const char* name) {
  if (!(p >= 0 && p <= 1))
    throw UsageError(std::string(name) + " must lie in [0, 1]");
}

void CheckNodes(int64_t n) {
  if (n < 1) throw UsageError("the node count must be positive");
  if (n > INT32_MAX) throw SizeCapError("too many nodes");
}

}  // namespace

Graph GenerateEr(int64_t n, double p, uint64_t seed, int threads) {
  CheckNodes(n);
  CheckProbability(p, "p");
  return Graph(n, SamplePairs(n, seed, kErStream, threads,
                              [p](int64_t, int64_t) { return p; }),
               {});
}

Graph GenerateSsbm(int64_t n, double a, double b, uint64_t seed, int threads) {
  CheckNodes(n);
  CheckProbability(a, "a");
  CheckProbability(b, "b");
  const int64_t half = (n + 1) / 2;
  return Graph(n, SamplePairs(n, seed, kSsbmStream, threads,
                              [=](int64_t u, int64_t v) {
                                return (u < half) == (v < half) ? a : b;
                              }),
               {});
}

SsbmParameters SsbmFromChart(int64_t n, double assortativity, double mean_degree) {
  CheckNodes(n);
  if (!(assortativity >= -1 && assortativity <= 1))
    throw UsageError("assortativity must lie in [-1, 1]");
  if (!(mean_degree >= 0)) throw UsageError("mean degree must be nonnegative");
  const double n0 = static_cast<double>((n + 1) / 2), n1 = static_cast<double>(n / 2);
  const double within = n0 * (n0 - 1) / 2 + n1 * (n1 - 1) / 2, across = n0 * n1;
  const double weight = (1 + assortativity) * within + (1 - assortativity) * across;
  if (weight <= 0) {
    if (mean_degree == 0) return {0, 0};
    throw UsageError("no admissible pairs for this assortativity");
  }
  const double s = mean_degree * static_cast<double>(n) / 2 / weight;
  SsbmParameters out{s * (1 + assortativity), s * (1 - assortativity)};
  if (out.a > 1 || out.b > 1)
    throw UsageError("mean degree too large for this assortativity");
  return out;
}

Graph GenerateBipartiteGeometric(int64_t n, double f, double mean_degree,
                                 uint64_t seed) {
  CheckNodes(n);
  if (!(f >= 0 && f < 1)) throw UsageError("f must lie in [0, 1)");
  if (!(mean_degree >= 0)) throw UsageError("mean degree must be nonnegative");
  const int64_t half = (n + 1) / 2;
  const CounterRng rng(seed, kSpherePoints);
  std::vector<std::array<double, 3>> x(n);
  for (int64_t v = 0; v < n; ++v) {
    // Normalized Gaussian vectors are uniform on the sphere.
    std::array<double, 3> z;
    double norm = 0;
    for (int k = 0; k < 3; ++k) {
      const uint64_t base = static_cast<uint64_t>(v) * 8 + 2 * k;
      const double u1 = 1 - rng.uniform_at(base), u2 = rng.uniform_at(base + 1);
      z[k] = std::sqrt(-2 * std::log(u1)) * std::cos(2 * M_PI * u2);
      norm += z[k] * z[k];
    }
    for (int k = 0; k < 3; ++k) x[v][k] = z[k] / std::sqrt(norm);
  }
  // A cap holding a fraction 1 - f of the sphere has angular radius t with
  // (1 - cos t) / 2 = 1 - f.
  const double min_dot = 2 * f - 1;
  const CounterRng pick(seed, kSphereSubset);
  std::vector<std::pair<uint64_t, Edge>> candidates;
  for (int64_t u = 0; u < half; ++u)
    for (int64_t v = half; v < n; ++v) {
      const double dot = x[u][0] * x[v][0] + x[u][1] * x[v][1] + x[u][2] * x[v][2];
      if (dot >= min_dot)
        candidates.push_back({pick.at(static_cast<uint64_t>(u * n + v)),
                              {static_cast<int32_t>(u), static_cast<int32_t>(v), 1}});
    }
  const auto m = static_cast<size_t>(std::llround(mean_degree * static_cast<double>(n) / 2));
  if (m > candidates.size())
    throw UsageError("mean degree " + std::to_string(mean_degree) + " needs " +
                     std::to_string(m) + " edges but only " +
                     std::to_string(candidates.size()) + " pairs are in range");
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first
                              : std::pair(a.second.u, a.second.v) <
                                    std::pair(b.second.u, b.second.v);
  });
  std::vector<Edge> edges;
  for (size_t i = 0; i < m; ++i) edges.push_back(candidates[i].second);
  std::vector<int> labels(n);
  for (int64_t v = 0; v < n; ++v) labels[v] = v < half ? 0 : 1;
  return Graph(n, std::move(edges), {.bipartite = true}, std::move(labels), {"A", "B"});
}

ShuffleMode ParseShuffleMode(std::string_view name) {
  if (name == "attributes") return ShuffleMode::kAttributes;
  if (name == "orientations") return ShuffleMode::kOrientations;
  if (name == "weights") return ShuffleMode::kWeights;
  throw UsageError("unknown shuffle mode '" + std::string(name) +
                   "' (attributes, orientations, weights)");
}

Graph Shuffle(const Graph& g, ShuffleMode mode, uint64_t seed) {
  CounterRng rng(seed, kShuffleStream);
  switch (mode) {
    case ShuffleMode::kAttributes: {
      if (!g.attributed()) throw UsageError("attribute shuffle needs node attributes");
      if (g.bipartite())
        throw UsageError("attribute shuffle would break the bipartite constraint; "
                         "load the labels as plain attributes instead");
      std::vector<int> labels = g.labels();
      for (size_t i = labels.size(); i > 1; --i) std::swap(labels[i - 1], labels[rng.below(i)]);
      return g.with_labels(std::move(labels), g.palette());
    }
    case ShuffleMode::kOrientations: {
      if (!g.directed()) throw UsageError("orientation shuffle needs a directed graph");
      std::vector<Edge> edges = g.edges();
      for (size_t i = 0; i < edges.size(); ++i) {
        Edge& e = edges[i];
        if (g.find_edge(e.v, e.u)) continue;  // reciprocal pairs stay as they are
        if (rng.uniform_at(i) < 0.5) std::swap(e.u, e.v);
      }
      return Graph(g.node_count(), std::move(edges), g.features(), g.labels(),
                   g.palette());
    }
    case ShuffleMode::kWeights: {
      if (!g.weighted()) throw UsageError("weight shuffle needs a weighted graph");
      std::vector<Edge> edges = g.edges();
      for (size_t i = edges.size(); i > 1; --i)
        std::swap(edges[i - 1].w, edges[rng.below(i)].w);
      return Graph(g.node_count(), std::move(edges), g.features(), g.labels(),
                   g.palette());
    }
  }
  throw UsageError("unknown shuffle mode");
}

}  // namespace gc
