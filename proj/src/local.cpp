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
#include "graphcumulants/local.hpp"

#include "graphcumulants/parallel.hpp"

namespace gc {

const LocalEntry& LocalReport::at(std::string_view name) const {
  for (const LocalEntry& e : entries)
    if (e.name == name) return e;
  throw UsageError("no local statistic '" + std::string(name) + "'");
}

std::string LocalReport::anchor() const {
  return edge_anchor ? std::to_string(u) + "," + std::to_string(v)
                     : std::to_string(u);
}

namespace {

void CheckSimple(const Graph& g, int order) {
  if (g.directed() || g.weighted())
    throw UsageError("local cumulants are defined for undirected unweighted graphs");
  if (order < 1 || order > 3)
    throw SizeCapError("local cumulants are available through third order");
  if (g.node_count() < 3)
    throw DataError("local cumulants need at least 3 nodes");
}

int64_t CommonNeighbors(const Graph& g, int64_t a, int64_t b) {
  auto x = g.incident(a), y = g.incident(b);
  int64_t c = 0;
  size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].node < y[j].node) {
      ++i;
    } else if (x[i].node > y[j].node) {
      ++j;
    } else {
      ++c;
      ++i;
      ++j;
    }
  }
  return c;
}

LocalEntry Entry(std::string name, int order, Integer count, Integer norm) {
  LocalEntry e;
  e.name = std::move(name);
  e.order = order;
  e.moment = Rational(count, norm);
  e.moment.canonicalize();
  e.count = std::move(count);
  e.normalization = std::move(norm);
  return e;
}

void SetScaled(LocalEntry& e, const Rational& denom, const char* what) {
  if (denom == 0) {
    e.reason = std::string(what) + " is zero";
    return;
  }
  e.scaled = *e.cumulant / denom;
}

}  // namespace

LocalReport NodeLocalCumulants(const Graph& g, int64_t node, int order) {
  CheckSimple(g, order);
  const int64_t n = g.node_count();
  if (node < 0 || node >= n)
    throw DataError("node " + std::to_string(node) + " is out of range");
  LocalReport r;
  r.u = node;
  const int64_t d = g.degree(node);
  const Integer pairs = Binomial(n - 1, 2);
  r.entries.push_back(Entry("edge-self", 1, d, n - 1));
  r.entries.push_back(Entry("edge-other", 1, g.edge_count() - d, pairs));
  const Rational self = r.entries[0].moment, other = r.entries[1].moment;
  for (LocalEntry& e : r.entries) {
    e.cumulant = e.moment;
    SetScaled(e, e.moment, e.name.c_str());
  }
  if (order >= 2) {
    int64_t ends = 0;
    for (const auto& in : g.incident(node)) ends += g.degree(in.node) - 1;
    LocalEntry center = Entry("wedge-center", 2, Binomial(d, 2), pairs);
    center.cumulant = center.moment - self * self;
    SetScaled(center, self * self, "edge-self");
    LocalEntry end = Entry("wedge-end", 2, ends, 2 * pairs);
    end.cumulant = end.moment - self * other;
    SetScaled(end, self * other, "edge-self times edge-other");
    const Rational mc = center.moment, me = end.moment;
    r.entries.push_back(std::move(center));
    r.entries.push_back(std::move(end));
    if (order >= 3) {
      int64_t tri = 0;
      for (const auto& in : g.incident(node))
        tri += CommonNeighbors(g, node, in.node);
      // Each triangle is seen from both of its other corners.
      LocalEntry t = Entry("triangle", 3, tri / 2, pairs);
      t.cumulant = t.moment - mc * other - 2 * me * self + 2 * self * self * other;
      SetScaled(t, self * self * other, "edge-self squared times edge-other");
      r.entries.push_back(std::move(t));
    }
  }
  return r;
}

LocalReport EdgeLocalCumulants(const Graph& g, int64_t u, int64_t v, int order) {
  CheckSimple(g, order);
  const int64_t n = g.node_count();
  if (u < 0 || v < 0 || u >= n || v >= n || !g.find_edge(u, v))
    throw DataError("anchor " + std::to_string(u) + "," + std::to_string(v) +
                    " is not an edge of the graph");
  LocalReport r;
  r.edge_anchor = true;
  r.u = std::min(u, v);
  r.v = std::max(u, v);
  LocalEntry star = Entry("edge-star", 1, 1, 1);
  star.cumulant = 1;
  star.scaled = 1;
  LocalEntry det = Entry("edge-detached", 1, g.edge_count() - 1, Binomial(n, 2) - 1);
  det.cumulant = det.moment;
  SetScaled(det, det.moment, "edge-detached");
  const Rational md = det.moment;
  r.entries.push_back(std::move(star));
  r.entries.push_back(std::move(det));
  if (order >= 2) {
    const int64_t attached = g.degree(u) + g.degree(v) - 2;
    Integer wedges = 0;
    for (int64_t x = 0; x < n; ++x) wedges += Binomial(g.degree(x), 2);
    LocalEntry att = Entry("wedge-attached", 2, attached, 2 * (n - 2));
    att.cumulant = att.moment - md;
    SetScaled(att, md, "edge-detached");
    LocalEntry wd = Entry("wedge-detached", 2, wedges - attached,
                          3 * Binomial(n, 3) - 2 * (n - 2));
    wd.cumulant = wd.moment - md * md;
    SetScaled(wd, md * md, "edge-detached squared");
    const Rational ma = att.moment, mw = wd.moment;
    r.entries.push_back(std::move(att));
    r.entries.push_back(std::move(wd));
    if (order >= 3) {
      LocalEntry t = Entry("triangle", 3, CommonNeighbors(g, u, v), n - 2);
      t.cumulant = t.moment - 2 * ma * md - mw + 2 * md * md;
      SetScaled(t, md * md, "edge-detached squared");
      r.entries.push_back(std::move(t));
    }
  }
  return r;
}

std::vector<LocalReport> AllNodeLocal(const Graph& g, int order, int threads) {
  CheckSimple(g, order);
  std::vector<LocalReport> out(g.node_count());
  ParallelChunks(g.node_count(), ResolveThreads(threads),
                 [&](int, int64_t b, int64_t e) {
                   for (int64_t i = b; i < e; ++i)
                     out[i] = NodeLocalCumulants(g, i, order);
                 });
  return out;
}

std::vector<LocalReport> AllEdgeLocal(const Graph& g, int order, int threads) {
  CheckSimple(g, order);
  std::vector<LocalReport> out(g.edge_count());
  ParallelChunks(g.edge_count(), ResolveThreads(threads),
                 [&](int, int64_t b, int64_t e) {
                   for (int64_t i = b; i < e; ++i)
                     out[i] = EdgeLocalCumulants(g, g.edges()[i].u,
                                                 g.edges()[i].v, order);
                 });
  return out;
}

}  // namespace gc
