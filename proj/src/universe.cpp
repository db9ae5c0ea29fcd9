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

#include "graphcumulants/universe.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace gc {

std::string UniverseSpec::key() const {
  std::string k = std::string(ModeName(mode)) + "|" + std::to_string(order) +
                  "|" + (directed ? "d" : "u") + (multi ? "m" : "s") +
                  (bipartite ? "b" : "-");
  for (const auto& p : palette) k += "|" + p;
  return k;
}

UniverseSpec SpecFor(const Graph& g, int order) {
  UniverseSpec s;
  s.directed = g.directed();
  s.multi = g.weighted();
  s.bipartite = g.bipartite();
  s.palette = g.palette();
  s.order = order;
  if (g.bipartite()) {
    s.mode = Mode::kBipartite;
  } else if (g.attributed()) {
    s.mode = Mode::kAttributed;
  } else if (g.directed()) {
    s.mode = Mode::kDirected;
  } else if (g.weighted()) {
    s.mode = Mode::kWeighted;
  } else {
    s.mode = Mode::kSimple;
  }
  return s;
}

int MaxOrder(const UniverseSpec& spec) {
  int cap = 6;
  if (spec.directed) cap = std::min(cap, spec.multi ? 5 : 6);
  if (spec.multi) cap = std::min(cap, 5);
  if (spec.bipartite) {
    cap = std::min(cap, 4);
  } else if (spec.palette_size() > 1 || spec.mode == Mode::kAttributed) {
    cap = std::min(cap, 3);
  }
  return cap;
}

namespace {

// Directed order 6 holds only the complete triad on top of the order-5 table.
bool TriadOnlyTop(const UniverseSpec& s) {
  return s.directed && !s.multi && s.order == 6;
}

using Poly = std::map<std::vector<int>, Integer>;

Poly Multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [fa, ca] : a)
    for (const auto& [fb, cb] : b) {
      std::vector<int> f = fa;
      f.insert(f.end(), fb.begin(), fb.end());
      std::sort(f.begin(), f.end());
      out[f] += ca * cb;
    }
  return out;
}

}  // namespace

ClassUniverse::ClassUniverse(UniverseSpec spec) : spec_(std::move(spec)) {
  if (spec_.order < 1) throw UsageError("order must be at least 1");
  const int cap = MaxOrder(spec_);
  if (spec_.order > cap)
    throw SizeCapError("order " + std::to_string(spec_.order) +
                       " exceeds the cap of " + std::to_string(cap) +
                       " for mode " + std::string(ModeName(spec_.mode)));
  if (spec_.palette_size() > 250) throw SizeCapError("too many node labels");
  Grow();
  AddDisconnected();
  if (TriadOnlyTop(spec_)) {
    for (uint8_t c0 = 0; c0 < spec_.palette_size(); ++c0)
      for (uint8_t c1 = c0; c1 < spec_.palette_size(); ++c1)
        for (uint8_t c2 = c1; c2 < spec_.palette_size(); ++c2) {
          const std::pair<int, int> e[6] = {{0, 1}, {1, 0}, {1, 2},
                                            {2, 1}, {0, 2}, {2, 0}};
          const uint8_t cols[3] = {c0, c1, c2};
          Add(Pattern::FromEdges(3, true, e, cols));
        }
  }
  // Stable presentation order: by order, connected first, then code.
  std::vector<ClassInfo> sorted = std::move(classes_);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const ClassInfo& a, const ClassInfo& b) {
                     if (a.id.order() != b.id.order())
                       return a.id.order() < b.id.order();
                     if (a.connected != b.connected) return a.connected;
                     return a.id.code() < b.id.code();
                   });
  classes_ = std::move(sorted);
  by_code_.clear();
  for (int i = 0; i < size(); ++i) by_code_[classes_[i].id.code()] = i;
  BuildPartitions();
  BuildPolynomials();
}

int ClassUniverse::Add(const Pattern& p) {
  CanonicalForm f = Canonicalize(p);
  if (auto it = by_code_.find(f.code); it != by_code_.end()) return it->second;
  ClassInfo info;
  info.id = CanonicalSubgraphId(f.form, spec_.mode, spec_.palette);
  info.form = f.form;
  info.automorphisms = f.automorphisms;
  info.connected = f.form.connected();
  info.color_need.assign(spec_.palette_size(), 0);
  for (uint8_t c : f.form.color) ++info.color_need[c];
  classes_.push_back(std::move(info));
  by_code_[f.code] = static_cast<int>(classes_.size()) - 1;
  return static_cast<int>(classes_.size()) - 1;
}

void ClassUniverse::Grow() {
  const int k = spec_.palette_size();
  const int grow_to = TriadOnlyTop(spec_) ? 5 : spec_.order;
  std::vector<int> frontier;
  for (int c0 = 0; c0 < k; ++c0)
    for (int c1 = spec_.directed ? 0 : c0; c1 < k; ++c1) {
      if (spec_.bipartite && c0 == c1) continue;
      const std::pair<int, int> e[1] = {{0, 1}};
      const uint8_t cols[2] = {static_cast<uint8_t>(c0),
                               static_cast<uint8_t>(c1)};
      const size_t before = classes_.size();
      const int idx = Add(Pattern::FromEdges(2, spec_.directed, e, cols));
      if (classes_.size() > before) frontier.push_back(idx);
    }
  for (int level = 1; level < grow_to; ++level) {
    std::vector<int> next;
    auto consider = [&](const Pattern& q) {
      const size_t before = classes_.size();
      const int idx = Add(q);
      if (classes_.size() > before) next.push_back(idx);
    };
    for (int idx : frontier) {
      const Pattern p = classes_[idx].form;
      for (int u = 0; u < p.n; ++u) {
        for (int v = spec_.directed ? 0 : u + 1; v < p.n; ++v) {
          if (u == v) continue;
          if (spec_.bipartite && p.color[u] == p.color[v]) continue;
          if (p.at(u, v) && !spec_.multi) continue;
          Pattern q = p;
          q.set(u, v, static_cast<uint8_t>(p.at(u, v) + 1));
          consider(q);
        }
        for (int c = 0; c < k; ++c) {
          if (spec_.bipartite && c == p.color[u]) continue;
          Pattern q = p;
          const int w = q.n;
          q.add_node(static_cast<uint8_t>(c));
          q.set(u, w, 1);
          consider(q);
          if (spec_.directed) {
            Pattern r = p;
            r.add_node(static_cast<uint8_t>(c));
            r.set(w, u, 1);
            consider(r);
          }
        }
      }
    }
    frontier = std::move(next);
  }
}

void ClassUniverse::AddDisconnected() {
  const int grow_to = TriadOnlyTop(spec_) ? 5 : spec_.order;
  std::vector<int> connected;
  for (int i = 0; i < size(); ++i) connected.push_back(i);
  std::vector<int> chosen;
  std::function<void(size_t, int)> rec = [&](size_t start, int budget) {
    if (chosen.size() >= 2) {
      Pattern u = Pattern::Empty(0, spec_.directed);
      for (int c : chosen) {
        const Pattern& f = classes_[c].form;
        const int base = u.n;
        for (int v = 0; v < f.n; ++v) u.add_node(f.color[v]);
        for (int a = 0; a < f.n; ++a)
          for (int b = 0; b < f.n; ++b)
            if (f.at(a, b)) u.label[(base + a) * u.n + base + b] = f.at(a, b);
      }
      Add(u);
    }
    for (size_t i = start; i < connected.size(); ++i) {
      const int units = classes_[connected[i]].form.edge_units();
      if (units > budget) continue;
      chosen.push_back(connected[i]);
      rec(i, budget - units);
      chosen.pop_back();
    }
  };
  rec(0, grow_to);
}

std::optional<int> ClassUniverse::find(const SubgraphId& id) const {
  auto it = by_code_.find(id.code());
  if (it == by_code_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> ClassUniverse::find_code(const std::string& code) const {
  auto it = by_code_.find(code);
  if (it == by_code_.end()) return std::nullopt;
  return it->second;
}

int ClassUniverse::classify(const Pattern& p) const {
  auto idx = find_code(Canonicalize(p).code);
  if (!idx) throw DataError("pattern outside the class table");
  return *idx;
}

int ClassUniverse::resolve(std::string_view name) const {
  if (name.find(':') != std::string_view::npos) {
    auto idx = find(SubgraphId::Parse(name));
    if (!idx)
      throw UsageError("subgraph '" + std::string(name) +
                       "' is not in the class table");
    return *idx;
  }
  for (int i = 0; i < size(); ++i)
    if (classes_[i].id.alias() == name) return i;
  throw UsageError("unknown subgraph '" + std::string(name) + "' for mode " +
                   std::string(ModeName(spec_.mode)) + " at order " +
                   std::to_string(spec_.order));
}

bool ClassUniverse::realizable(int index,
                               std::span<const int64_t> color_sizes) const {
  const auto& need = classes_[index].color_need;
  for (size_t c = 0; c < need.size(); ++c) {
    const int64_t have = c < color_sizes.size() ? color_sizes[c] : 0;
    if (need[c] > have) return false;
  }
  return true;
}

void ClassUniverse::BuildPartitions() {
  for (ClassInfo& info : classes_) {
    const Pattern& f = info.form;
    std::vector<std::pair<int, int>> units;
    for (int u = 0; u < f.n; ++u)
      for (int v = f.directed ? 0 : u + 1; v < f.n; ++v)
        for (int m = 0; m < f.at(u, v); ++m) units.push_back({u, v});
    const int r = static_cast<int>(units.size());
    std::vector<int> block_class(size_t{1} << r, -1);
    for (uint32_t mask = 1; mask < (1u << r); ++mask) {
      Pattern b = Pattern::Empty(f.n, f.directed);
      b.color = f.color;
      for (int i = 0; i < r; ++i)
        if (mask >> i & 1)
          b.set(units[i].first, units[i].second,
                static_cast<uint8_t>(b.at(units[i].first, units[i].second) + 1));
      block_class[mask] = classify(b);
    }
    std::map<std::vector<int>, std::pair<Integer, Integer>> agg;
    std::vector<int> rgs(r, 0);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
      if (i == r) {
        std::vector<uint32_t> masks(blocks, 0);
        for (int j = 0; j < r; ++j) masks[rgs[j]] |= 1u << j;
        std::vector<int> parts;
        for (uint32_t m : masks) parts.push_back(block_class[m]);
        std::sort(parts.begin(), parts.end());
        auto& slot = agg[parts];
        slot.first += 1;
        Integer coef = Factorial(blocks - 1);
        if ((blocks - 1) % 2) coef = -coef;
        slot.second += coef;
        return;
      }
      for (int b = 0; b <= blocks; ++b) {
        rgs[i] = b;
        rec(i + 1, std::max(blocks, b + 1));
      }
    };
    rec(0, 0);
    for (auto& [parts, mm] : agg) {
      PartitionTerm t;
      t.parts = parts;
      t.multiplicity = mm.first;
      t.mobius = mm.second;
      Pattern u = Pattern::Empty(0, f.directed);
      for (int c : parts) {
        const Pattern& pf = classes_[c].form;
        const int base = u.n;
        for (int v = 0; v < pf.n; ++v) u.add_node(pf.color[v]);
        for (int a = 0; a < pf.n; ++a)
          for (int b2 = 0; b2 < pf.n; ++b2)
            if (pf.at(a, b2)) u.label[(base + a) * u.n + base + b2] = pf.at(a, b2);
      }
      if (auto idx = find_code(Canonicalize(u).code)) t.disjoint_union = *idx;
      info.terms.push_back(std::move(t));
    }
  }
}

void ClassUniverse::BuildPolynomials() {
  std::vector<std::optional<Poly>> memo(size());
  std::function<const Poly&(int)> poly = [&](int idx) -> const Poly& {
    if (memo[idx]) return *memo[idx];
    const ClassInfo& info = classes_[idx];
    Poly out;
    if (info.connected) {
      out[{idx}] = 1;
      memo[idx] = std::move(out);
      return *memo[idx];
    }
    const Pattern& f = info.form;
    auto comps = f.components();
    size_t pick = 0;
    for (size_t i = 1; i < comps.size(); ++i)
      if (comps[i].size() < comps[pick].size()) pick = i;
    std::vector<int> rest_nodes;
    for (size_t i = 0; i < comps.size(); ++i)
      if (i != pick) rest_nodes.insert(rest_nodes.end(), comps[i].begin(), comps[i].end());
    const Pattern g1 = f.induced(comps[pick]);
    const Pattern rest = f.induced(rest_nodes);
    const int c1 = classify(g1), c2 = classify(rest);
    Poly p1 = poly(c1);
    Poly p2 = poly(c2);
    out = Multiply(p1, p2);
    // Subtract every gluing that identifies at least one node pair.
    std::vector<int> sigma(g1.n, -1);
    std::vector<bool> taken(rest.n, false);
    std::vector<int> merged_classes;
    std::function<void(int, bool)> rec = [&](int x, bool any) {
      if (x == g1.n) {
        if (!any) return;
        Pattern m = rest;
        std::vector<int> where(g1.n);
        for (int a = 0; a < g1.n; ++a)
          where[a] = sigma[a] >= 0 ? sigma[a] : m.add_node(g1.color[a]);
        for (int a = 0; a < g1.n; ++a)
          for (int b = 0; b < g1.n; ++b) {
            if (!g1.directed && b <= a) continue;
            const uint8_t l = g1.at(a, b);
            if (!l) continue;
            const uint8_t have = m.at(where[a], where[b]);
            m.set(where[a], where[b],
                  spec_.multi ? static_cast<uint8_t>(have + l)
                              : static_cast<uint8_t>(1));
          }
        merged_classes.push_back(classify(m));
        return;
      }
      rec(x + 1, any);
      for (int y = 0; y < rest.n; ++y) {
        if (taken[y] || rest.color[y] != g1.color[x]) continue;
        taken[y] = true;
        sigma[x] = y;
        rec(x + 1, true);
        sigma[x] = -1;
        taken[y] = false;
      }
    };
    rec(0, false);
    for (int mc : merged_classes) {
      Poly pm = poly(mc);
      for (const auto& [fac, c] : pm) out[fac] -= c;
    }
    for (auto it = out.begin(); it != out.end();)
      it = it->second == 0 ? out.erase(it) : std::next(it);
    memo[idx] = std::move(out);
    return *memo[idx];
  };
  for (int i = 0; i < size(); ++i) {
    if (classes_[i].connected) continue;
    for (const auto& [fac, c] : poly(i))
      classes_[i].embedding_polynomial.push_back({c, fac});
  }
}

std::shared_ptr<const ClassUniverse> GetUniverse(const UniverseSpec& spec) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const ClassUniverse>> cache;
  const std::string key = spec.key();
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto u = std::make_shared<const ClassUniverse>(spec);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(u)).first->second;
}

}  // namespace gc
