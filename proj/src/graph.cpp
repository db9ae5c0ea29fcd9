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

#include "graphcumulants/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

namespace gc {

Graph::Graph(int64_t n, std::vector<Edge> edges, GraphFeatures features,
             std::vector<int> labels, std::vector<std::string> palette)
    : n_(n),
      edges_(std::move(edges)),
      features_(features),
      labels_(std::move(labels)),
      palette_(std::move(palette)) {
  if (n_ <= 0) throw DataError("graph must have at least one node");
  if (n_ > INT32_MAX) throw SizeCapError("too many nodes");
  for (Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
      throw DataError("edge " + std::to_string(e.u) + " " +
                      std::to_string(e.v) + " references a node outside [0, " +
                      std::to_string(n_) + ")");
    if (e.u == e.v)
      throw DataError("self-loop at node " + std::to_string(e.u));
    if (e.w < 0) throw DataError("negative edge weight");
    e.w.canonicalize();
    if (!features_.weighted) e.w = 1;
    if (!features_.directed && e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
      throw DataError("duplicate edge " + std::to_string(edges_[i].u) + " " +
                      std::to_string(edges_[i].v));
  }
  if (!labels_.empty() || !palette_.empty()) {
    if (static_cast<int64_t>(labels_.size()) != n_)
      throw DataError("every node needs an attribute label");
    for (int c : labels_)
      if (c < 0 || c >= static_cast<int>(palette_.size()))
        throw DataError("attribute label index out of range");
  }
  if (features_.bipartite) {
    if (palette_.size() != 2)
      throw DataError("bipartite graphs need exactly two node labels");
    for (const Edge& e : edges_)
      if (labels_[e.u] == labels_[e.v])
        throw DataError("bipartite edge " + std::to_string(e.u) + " " +
                        std::to_string(e.v) + " joins nodes with equal labels");
  }
  off_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++off_[e.u + 1];
    ++off_[e.v + 1];
  }
  std::partial_sum(off_.begin(), off_.end(), off_.begin());
  inc_.resize(off_[n_]);
  std::vector<int64_t> fill(off_.begin(), off_.end() - 1);
  for (int32_t i = 0; i < static_cast<int32_t>(edges_.size()); ++i) {
    const Edge& e = edges_[i];
    inc_[fill[e.u]++] = {e.v, i, true};
    inc_[fill[e.v]++] = {e.u, i, !features_.directed};
  }
  for (int64_t v = 0; v < n_; ++v) {
    std::sort(inc_.begin() + off_[v], inc_.begin() + off_[v + 1],
              [](const Incident& a, const Incident& b) {
                return a.node != b.node ? a.node < b.node
                                        : a.outgoing > b.outgoing;
              });
  }
}

std::vector<int64_t> Graph::label_counts() const {
  std::vector<int64_t> counts(std::max<size_t>(palette_.size(), 1), 0);
  if (labels_.empty()) {
    counts[0] = n_;
  } else {
    for (int c : labels_) ++counts[c];
  }
  return counts;
}

std::optional<int32_t> Graph::find_edge(int64_t u, int64_t v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
  auto inc = incident(u);
  auto it = std::lower_bound(
      inc.begin(), inc.end(), v,
      [](const Incident& a, int64_t x) { return a.node < x; });
  for (; it != inc.end() && it->node == v; ++it) {
    if (it->outgoing) return it->edge;
  }
  return std::nullopt;
}

Graph Graph::induced(std::span<const int> nodes) const {
  std::vector<int> index(n_, -1);
  for (size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = static_cast<int>(i);
  std::vector<Edge> sub;
  for (const Edge& e : edges_) {
    if (index[e.u] >= 0 && index[e.v] >= 0)
      sub.push_back({index[e.u], index[e.v], e.w});
  }
  std::vector<int> labels;
  if (!labels_.empty())
    for (int v : nodes) labels.push_back(labels_[v]);
  GraphFeatures f = features_;
  if (f.bipartite) {
    // A subsample may miss one side entirely; the palette is kept.
    f.bipartite = true;
  }
  return Graph(static_cast<int64_t>(nodes.size()), std::move(sub), f,
               std::move(labels), palette_);
}

Graph Graph::with_labels(std::vector<int> labels,
                         std::vector<std::string> palette) const {
  return Graph(n_, edges_, features_, std::move(labels), std::move(palette));
}

namespace {

int64_t ParseNode(std::string_view tok, size_t line) {
  int64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size() || v < 0 ||
      v >= INT32_MAX)
    throw DataError("line " + std::to_string(line) + ": bad node id '" +
                    std::string(tok) + "'");
  return v;
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename F>
void ForEachLine(std::string_view text, F&& f) {
  size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    const size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = Tokens(line);
    if (!toks.empty()) f(line_no, toks);
    pos = end + 1;
  }
}

}  // namespace

Graph ParseGraph(std::string_view text, const ParseOptions& options) {
  const GraphFeatures& f = options.features;
  std::vector<Edge> edges;
  std::vector<size_t> line_of;
  int64_t max_id = -1;
  ForEachLine(text, [&](size_t line, const std::vector<std::string_view>& t) {
    if (t.size() < 2 || t.size() > 3)
      throw DataError("line " + std::to_string(line) +
                      ": expected 'u v [w]'");
    if (t.size() == 3 && !f.weighted)
      throw DataError("line " + std::to_string(line) +
                      ": weight given but the graph is not weighted");
    Edge e;
    const int64_t u = ParseNode(t[0], line), v = ParseNode(t[1], line);
    if (u == v)
      throw DataError("line " + std::to_string(line) + ": self-loop at node " +
                      std::to_string(u));
    e.u = static_cast<int32_t>(u);
    e.v = static_cast<int32_t>(v);
    if (t.size() == 3) {
      try {
        e.w = ParseRational(t[2]);
      } catch (const DataError& err) {
        throw DataError("line " + std::to_string(line) + ": " + err.what());
      }
      if (e.w < 0)
        throw DataError("line " + std::to_string(line) + ": negative weight");
    }
    max_id = std::max({max_id, u, v});
    edges.push_back(std::move(e));
    line_of.push_back(line);
  });
  int64_t n = max_id + 1;
  if (options.nodes) {
    if (*options.nodes <= max_id)
      throw DataError("node id " + std::to_string(max_id) +
                      " exceeds --nodes " + std::to_string(*options.nodes));
    n = *options.nodes;
  }
  if (n <= 0) throw DataError("empty edge list; pass the node count explicitly");

  // Report duplicates with their line numbers before the constructor does.
  {
    std::vector<size_t> order(edges.size());
    std::iota(order.begin(), order.end(), 0);
    auto key = [&](size_t i) {
      int32_t a = edges[i].u, b = edges[i].v;
      if (!f.directed && a > b) std::swap(a, b);
      return std::pair(a, b);
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return key(a) < key(b); });
    for (size_t i = 1; i < order.size(); ++i) {
      if (key(order[i]) == key(order[i - 1]))
        throw DataError("line " + std::to_string(line_of[order[i]]) +
                        ": duplicate edge " + std::to_string(key(order[i]).first) +
                        " " + std::to_string(key(order[i]).second));
    }
  }

  std::vector<int> labels;
  std::vector<std::string> palette;
  if (options.attributes) {
    std::vector<std::string> names(n);
    std::vector<bool> seen(n, false);
    ForEachLine(*options.attributes,
                [&](size_t line, const std::vector<std::string_view>& t) {
                  if (t.size() != 2)
                    throw DataError("attribute line " + std::to_string(line) +
                                    ": expected 'node label'");
                  const int64_t v = ParseNode(t[0], line);
                  if (v >= n)
                    throw DataError("attribute line " + std::to_string(line) +
                                    ": unknown node " + std::to_string(v));
                  if (seen[v])
                    throw DataError("attribute line " + std::to_string(line) +
                                    ": node " + std::to_string(v) +
                                    " labelled twice");
                  seen[v] = true;
                  names[v] = std::string(t[1]);
                });
    for (int64_t v = 0; v < n; ++v)
      if (!seen[v])
        throw DataError("node " + std::to_string(v) + " has no attribute label");
    palette = names;
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    labels.resize(n);
    for (int64_t v = 0; v < n; ++v)
      labels[v] = static_cast<int>(
          std::lower_bound(palette.begin(), palette.end(), names[v]) -
          palette.begin());
  } else if (f.bipartite) {
    throw DataError("bipartite graphs need an attribute file");
  }
  return Graph(n, std::move(edges), f, std::move(labels), std::move(palette));
}

std::string WriteEdgeList(const Graph& g) {
  std::ostringstream out;
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (g.weighted()) out << ' ' << FormatRational(e.w);
    out << '\n';
  }
  return out.str();
}

std::string WriteAttributes(const Graph& g) {
  std::ostringstream out;
  if (!g.attributed()) return {};
  for (int64_t v = 0; v < g.node_count(); ++v)
    out << v << '\t' << g.palette()[g.label(v)] << '\n';
  return out.str();
}

}  // namespace gc
