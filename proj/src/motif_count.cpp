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
#include "graphcumulants/motif_count.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>

#include "graphcumulants/parallel.hpp"

namespace gc {

namespace {

using i128 = __int128;

Integer ToInteger(i128 x) {
  const bool neg = x < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x)
                            : static_cast<unsigned __int128>(x);
  Integer hi = static_cast<unsigned long>(static_cast<uint64_t>(u >> 64));
  Integer lo = static_cast<unsigned long>(static_cast<uint64_t>(u));
  Integer r = (hi << 64) + lo;
  return neg ? Integer(-r) : r;
}

// Edge weights scaled to integers by the common denominator.
struct ScaledWeights {
  Integer denom = 1;
  std::vector<Integer> w;
};

ScaledWeights ScaleWeights(const Graph& g) {
  ScaledWeights s;
  for (const Edge& e : g.edges())
    mpz_lcm(s.denom.get_mpz_t(), s.denom.get_mpz_t(), e.w.get_den_mpz_t());
  s.w.reserve(g.edges().size());
  for (const Edge& e : g.edges())
    s.w.push_back(Integer(e.w.get_num() * (s.denom / e.w.get_den())));
  return s;
}

// Simple undirected graphs through third order, from per-node weight sums.
template <typename T, typename WeightFn>
struct FastSums {
  T edge = 0, recip = 0, three_recip = 0, wedge = 0, recip_wedge = 0,
    claw = 0, triangle = 0, path = 0;

  void Add(const FastSums& o) {
    edge += o.edge; recip += o.recip; three_recip += o.three_recip;
    wedge += o.wedge; recip_wedge += o.recip_wedge; claw += o.claw;
    triangle += o.triangle; path += o.path;
  }

  void Run(const Graph& g, const WeightFn& weight, const std::vector<T>& s,
           int64_t begin, int64_t end) {
    for (int64_t u = begin; u < end; ++u) {
      T s1 = 0, s2 = 0, s3 = 0;
      auto inc = g.incident(u);
      for (const auto& it : inc) {
        const T w = weight(it.edge);
        const T w2 = w * w;
        s1 += w;
        s2 += w2;
        s3 += w2 * w;
      }
      wedge += (s1 * s1 - s2) / 2;
      recip_wedge += s2 * s1 - s3;
      claw += (s1 * s1 * s1 - 3 * s1 * s2 + 2 * s3) / 6;
      for (size_t i = 0; i < inc.size(); ++i) {
        const int32_t v = inc[i].node;
        if (v < u) continue;
        const T wuv = weight(inc[i].edge);
        edge += wuv;
        recip += wuv * wuv;
        three_recip += wuv * wuv * wuv;
        path += wuv * (s[u] - wuv) * (s[v] - wuv);
        // Triangles u < v < x by merging the two neighbor lists.
        auto vin = g.incident(v);
        size_t a = i + 1, b = 0;
        while (a < inc.size() && b < vin.size()) {
          if (vin[b].node <= v) { ++b; continue; }
          if (inc[a].node < vin[b].node) {
            ++a;
          } else if (inc[a].node > vin[b].node) {
            ++b;
          } else {
            triangle += wuv * weight(inc[a].edge) * weight(vin[b].edge);
            ++a;
            ++b;
          }
        }
      }
    }
  }
};

bool FastPathApplies(const UniverseSpec& s) {
  return !s.directed && !s.bipartite && s.palette_size() == 1 &&
         s.order <= 3 &&
         (s.mode == Mode::kSimple || s.mode == Mode::kWeighted);
}

int NamedIndex(const ClassUniverse& u, std::string_view alias) {
  Pattern p;
  try {
    p = NamedPattern(u.spec().mode, alias);
  } catch (const UsageError&) {
    return -1;  // multi-edge names outside weighted mode
  }
  auto idx = u.find_code(Canonicalize(p).code);
  return idx ? *idx : -1;
}

template <typename T, typename WeightFn>
FastSums<T, WeightFn> RunFast(const Graph& g, const WeightFn& weight,
                              int threads) {
  const int64_t n = g.node_count();
  std::vector<T> s(n, 0);
  for (int64_t u = 0; u < n; ++u)
    for (const auto& it : g.incident(u)) s[u] += weight(it.edge);
  const int workers = static_cast<int>(std::min<int64_t>(threads, n));
  std::vector<FastSums<T, WeightFn>> part(std::max(workers, 1));
  ParallelChunks(n, workers, [&](int t, int64_t b, int64_t e) {
    part[t].Run(g, weight, s, b, e);
  });
  FastSums<T, WeightFn> total;
  for (const auto& p : part) total.Add(p);
  total.path -= 3 * total.triangle;
  return total;
}

template <typename T>
void StoreFast(const ClassUniverse& u, const T (&values)[8],
               const std::function<Rational(const T&, int)>& convert,
               std::vector<Rational>& counts) {
  static constexpr std::string_view kNames[8] = {
      "edge", "reciprocal", "three-reciprocal", "wedge",
      "reciprocal-wedge", "claw", "triangle", "three-path"};
  for (int k = 0; k < 8; ++k) {
    const int idx = NamedIndex(u, kNames[k]);
    if (idx >= 0) counts[idx] = convert(values[k], u[idx].id.order());
  }
}

// Connected edge sets by ESU over the line graph.
class EsuWorker {
 public:
  EsuWorker(const Graph& g, const ClassUniverse& u, int max_pairs,
            const ScaledWeights* weights)
      : g_(g), u_(u), max_pairs_(max_pairs), weights_(weights),
        plain_(u.size(), 0) {
    if (weights_) weighted_.assign(u.size(), 0);
  }

  void Root(int32_t root) {
    sub_.assign(1, root);
    const Edge& e = g_.edges()[root];
    nodes_.assign({e.u, e.v});
    std::vector<int32_t> ext;
    for (const auto& it : g_.incident(e.u))
      if (it.edge > root) ext.push_back(it.edge);
    for (const auto& it : g_.incident(e.v))
      if (it.edge > root && it.node != e.u) ext.push_back(it.edge);
    Extend(ext, root);
  }

  std::vector<uint64_t>& plain() { return plain_; }
  std::vector<Integer>& weighted() { return weighted_; }

 private:
  bool InSub(int32_t v) const {
    return std::find(nodes_.begin(), nodes_.end(), v) != nodes_.end();
  }

  void Extend(std::vector<int32_t> ext, int32_t root) {
    Record();
    if (static_cast<int>(sub_.size()) == max_pairs_) return;
    while (!ext.empty()) {
      const int32_t w = ext.back();
      ext.pop_back();
      const Edge& e = g_.edges()[w];
      std::vector<int32_t> next = ext;
      int32_t x = -1;
      if (!InSub(e.u)) x = e.u;
      if (!InSub(e.v)) x = e.v;
      if (x >= 0) {
        for (const auto& it : g_.incident(x))
          if (it.edge > root && it.edge != w && !InSub(it.node))
            next.push_back(it.edge);
        nodes_.push_back(x);
      }
      sub_.push_back(w);
      Extend(std::move(next), root);
      sub_.pop_back();
      if (x >= 0) nodes_.pop_back();
    }
  }

  int Classify(const Pattern& p) {
    std::string key(p.color.begin(), p.color.end());
    key.append(p.label.begin(), p.label.end());
    key.push_back(static_cast<char>(p.n));
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const int idx = u_.classify(p);
    cache_.emplace(std::move(key), idx);
    return idx;
  }

  void Record() {
    std::vector<int32_t> nodes = nodes_;
    std::sort(nodes.begin(), nodes.end());
    const int k = static_cast<int>(nodes.size());
    auto local = [&](int32_t v) {
      return static_cast<int>(std::lower_bound(nodes.begin(), nodes.end(), v) -
                              nodes.begin());
    };
    Pattern p = Pattern::Empty(k, g_.directed());
    for (int i = 0; i < k; ++i) p.color[i] = static_cast<uint8_t>(g_.label(nodes[i]));
    pairs_.clear();
    for (int32_t e : sub_) {
      const Edge& ed = g_.edges()[e];
      pairs_.push_back({local(ed.u), local(ed.v)});
      p.set(pairs_.back().first, pairs_.back().second, 1);
    }
    if (!weights_) {
      ++plain_[Classify(p)];
      return;
    }
    const int budget = u_.spec().order - static_cast<int>(sub_.size());
    Multiplicities(p, 0, budget, Integer(1));
  }

  // Raises each edge's multiplicity in turn while units remain.
  void Multiplicities(Pattern& p, size_t i, int budget, const Integer& prod) {
    if (i == sub_.size()) {
      weighted_[Classify(p)] += prod;
      return;
    }
    const Integer& w = weights_->w[sub_[i]];
    Integer pw = w;
    for (int m = 1; m <= budget + 1; ++m) {
      p.set(pairs_[i].first, pairs_[i].second, static_cast<uint8_t>(m));
      Multiplicities(p, i + 1, budget - (m - 1), prod * pw);
      pw *= w;
    }
    p.set(pairs_[i].first, pairs_[i].second, 1);
  }

  const Graph& g_;
  const ClassUniverse& u_;
  int max_pairs_;
  const ScaledWeights* weights_;
  std::vector<int32_t> sub_, nodes_;
  std::vector<std::pair<int, int>> pairs_;
  std::unordered_map<std::string, int> cache_;
  std::vector<uint64_t> plain_;
  std::vector<Integer> weighted_;
};

// Complete triads are triangles of the mutual-edge graph.
void CountCompleteTriads(const Graph& g, const ClassUniverse& u,
                         std::vector<Rational>& counts) {
  const int64_t n = g.node_count();
  std::vector<std::vector<int32_t>> mutual(n);
  for (const Edge& e : g.edges())
    if (e.u < e.v && g.find_edge(e.v, e.u)) {
      mutual[e.u].push_back(e.v);
      mutual[e.v].push_back(e.u);
    }
  for (auto& m : mutual) std::sort(m.begin(), m.end());
  std::unordered_map<std::string, int> cache;
  for (int32_t a = 0; a < n; ++a)
    for (int32_t b : mutual[a]) {
      if (b <= a) continue;
      for (int32_t c : mutual[b]) {
        if (c <= b || !std::binary_search(mutual[a].begin(), mutual[a].end(), c))
          continue;
        const std::pair<int, int> arcs[6] = {{0, 1}, {1, 0}, {1, 2},
                                             {2, 1}, {0, 2}, {2, 0}};
        const uint8_t cols[3] = {static_cast<uint8_t>(g.label(a)),
                                 static_cast<uint8_t>(g.label(b)),
                                 static_cast<uint8_t>(g.label(c))};
        counts[u.classify(Pattern::FromEdges(3, true, arcs, cols))] += 1;
      }
    }
}

}  // namespace

SubgraphCounts CountConnected(const Graph& g, int order,
                              const CountOptions& options) {
  SubgraphCounts out;
  out.universe = GetUniverse(SpecFor(g, order));
  const ClassUniverse& u = *out.universe;
  out.n = g.node_count();
  out.color_sizes = g.label_counts();
  out.counts.assign(u.size(), 0);
  const int threads = ResolveThreads(options.threads);
  const UniverseSpec& spec = u.spec();

  if (FastPathApplies(spec)) {
    if (!g.weighted()) {
      auto one = [](int32_t) { return i128{1}; };
      auto f = RunFast<i128>(g, one, threads);
      const i128 v[8] = {f.edge, 0, 0, f.wedge, 0, f.claw, f.triangle, f.path};
      std::function<Rational(const i128&, int)> conv = [](const i128& x, int) {
        return Rational(ToInteger(x));
      };
      StoreFast(u, v, conv, out.counts);
    } else {
      const ScaledWeights sw = ScaleWeights(g);
      auto weight = [&sw](int32_t e) -> Integer { return sw.w[e]; };
      auto f = RunFast<Integer>(g, weight, threads);
      const Integer v[8] = {f.edge, f.recip, f.three_recip, f.wedge,
                            f.recip_wedge, f.claw, f.triangle, f.path};
      Integer d = sw.denom;
      std::function<Rational(const Integer&, int)> conv =
          [d](const Integer& x, int r) {
            Integer dr;
            mpz_pow_ui(dr.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(r));
            Rational q(x, dr);
            q.canonicalize();
            return q;
          };
      StoreFast(u, v, conv, out.counts);
    }
    return out;
  }

  const bool triad_top = spec.directed && !spec.multi && spec.order == 6;
  const int max_pairs = triad_top ? 5 : spec.order;
  std::optional<ScaledWeights> sw;
  if (g.weighted()) sw = ScaleWeights(g);
  const int64_t m = g.edge_count();
  const int workers = static_cast<int>(std::max<int64_t>(1, std::min<int64_t>(threads, m)));
  std::vector<std::unique_ptr<EsuWorker>> pool;
  for (int t = 0; t < workers; ++t)
    pool.push_back(std::make_unique<EsuWorker>(g, u, max_pairs,
                                               sw ? &*sw : nullptr));
  ParallelChunks(m, workers, [&](int t, int64_t b, int64_t e) {
    for (int64_t r = b; r < e; ++r) pool[t]->Root(static_cast<int32_t>(r));
  });
  for (int i = 0; i < u.size(); ++i) {
    if (!u[i].connected) continue;
    if (sw) {
      Integer acc = 0;
      for (auto& w : pool) acc += w->weighted()[i];
      Integer dr;
      mpz_pow_ui(dr.get_mpz_t(), sw->denom.get_mpz_t(),
                 static_cast<unsigned long>(u[i].id.order()));
      out.counts[i] = Rational(acc, dr);
      out.counts[i].canonicalize();
    } else {
      uint64_t acc = 0;
      for (auto& w : pool) acc += w->plain()[i];
      out.counts[i] = Rational(ToInteger(static_cast<i128>(acc)));
    }
  }
  if (triad_top) CountCompleteTriads(g, u, out.counts);
  return out;
}

void DeriveDisconnected(SubgraphCounts& counts) {
  const ClassUniverse& u = *counts.universe;
  const bool weighted = u.spec().multi;
  for (int i = 0; i < u.size(); ++i) {
    if (u[i].connected) continue;
    Rational embeddings = 0;
    for (const MonomialTerm& t : u[i].embedding_polynomial) {
      Rational prod = Rational(t.coefficient);
      for (int f : t.factors)
        prod *= counts.counts[f] *
                Rational(Integer(static_cast<unsigned long>(u[f].automorphisms)));
      embeddings += prod;
    }
    Rational c = embeddings /
                 Rational(Integer(static_cast<unsigned long>(u[i].automorphisms)));
    c.canonicalize();
    if (!weighted && (c < 0 || c.get_den() != 1))
      throw DataError("derived count for " + u[i].id.str() +
                      " is not a nonnegative integer; the connected counts are "
                      "inconsistent");
    counts.counts[i] = c;
  }
  counts.disconnected_derived = true;
}

SubgraphCounts CountSubgraphs(const Graph& g, int order,
                              const CountOptions& options) {
  SubgraphCounts c = CountConnected(g, order, options);
  DeriveDisconnected(c);
  return c;
}

}  // namespace gc
