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

#include "graphcumulants/pattern.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace gc {

namespace {

constexpr std::array<std::string_view, 7> kModeNames = {
    "simple",     "directed",  "weighted-shape", "attributed",
    "bipartite",  "local-node", "local-edge"};

}  // namespace

std::string_view ModeName(Mode mode) {
  return kModeNames[static_cast<size_t>(mode)];
}

Mode ParseMode(std::string_view name) {
  for (size_t i = 0; i < kModeNames.size(); ++i)
    if (kModeNames[i] == name) return static_cast<Mode>(i);
  throw UsageError("unknown mode '" + std::string(name) + "'");
}

Pattern Pattern::Empty(int n, bool directed) {
  Pattern p;
  p.n = n;
  p.directed = directed;
  p.color.assign(n, 0);
  p.label.assign(static_cast<size_t>(n) * n, 0);
  return p;
}

Pattern Pattern::FromEdges(int n, bool directed,
                           std::span<const std::pair<int, int>> edges,
                           std::span<const uint8_t> colors) {
  Pattern p = Empty(n, directed);
  for (int v = 0; v < n && v < static_cast<int>(colors.size()); ++v)
    p.color[v] = colors[v];
  for (auto [u, v] : edges) p.set(u, v, static_cast<uint8_t>(p.at(u, v) + 1));
  return p;
}

int Pattern::add_node(uint8_t c) {
  Pattern q = Empty(n + 1, directed);
  for (int u = 0; u < n; ++u) {
    q.color[u] = color[u];
    for (int v = 0; v < n; ++v) q.label[u * (n + 1) + v] = at(u, v);
  }
  q.color[n] = c;
  *this = std::move(q);
  return n - 1;
}

int Pattern::edge_units() const {
  int r = 0;
  for (int u = 0; u < n; ++u)
    for (int v = directed ? 0 : u + 1; v < n; ++v) {
      const uint8_t x = at(u, v);
      r += x == kStarLabel ? 1 : x;
    }
  return r;
}

int Pattern::edge_slots() const {
  int r = 0;
  for (int u = 0; u < n; ++u)
    for (int v = directed ? 0 : u + 1; v < n; ++v) r += at(u, v) != 0;
  return r;
}

bool Pattern::isolated(int v) const {
  for (int u = 0; u < n; ++u)
    if (at(u, v) || at(v, u)) return false;
  return true;
}

std::vector<std::vector<int>> Pattern::components() const {
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (size_t i = 0; i < members.size(); ++i) {
      const int u = members[i];
      for (int v = 0; v < n; ++v) {
        if (comp[v] < 0 && (at(u, v) || at(v, u))) {
          comp[v] = comp[s];
          members.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool Pattern::connected() const { return n <= 1 || components().size() == 1; }

Pattern Pattern::induced(std::span<const int> nodes) const {
  const int k = static_cast<int>(nodes.size());
  Pattern q = Empty(k, directed);
  for (int i = 0; i < k; ++i) {
    q.color[i] = color[nodes[i]];
    for (int j = 0; j < k; ++j) q.label[i * k + j] = at(nodes[i], nodes[j]);
  }
  return q;
}

Pattern Pattern::without_isolated() const {
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (!isolated(v) || color[v] == kAnchorColor) keep.push_back(v);
  return induced(keep);
}

Pattern Pattern::relabeled(std::span<const int> perm) const {
  return induced(perm);
}

std::vector<int> Pattern::color_counts(int palette_size) const {
  std::vector<int> c(std::max(palette_size, 1), 0);
  for (uint8_t x : color)
    if (x < c.size()) ++c[x];
  return c;
}

namespace {

// Refines node cells until stable; returns cell ids ordered canonically.
std::vector<int> RefineCells(const Pattern& p) {
  const int n = p.n;
  std::vector<int> cell(n);
  for (int v = 0; v < n; ++v) cell[v] = p.color[v];
  int num_cells = -1;
  while (true) {
    std::vector<std::pair<std::vector<uint32_t>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<uint32_t> s{static_cast<uint32_t>(cell[v])};
      std::vector<uint32_t> nb;
      for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        const uint8_t out = p.at(v, u), in = p.at(u, v);
        if (out || in)
          nb.push_back((static_cast<uint32_t>(cell[u]) << 16) |
                       (static_cast<uint32_t>(out) << 8) | in);
      }
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<std::vector<uint32_t>> distinct;
    for (auto& [s, v] : sig) distinct.push_back(s);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    for (auto& [s, v] : sig)
      cell[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), s) -
          distinct.begin());
    const int k = static_cast<int>(distinct.size());
    if (k == num_cells) break;
    num_cells = k;
  }
  return cell;
}

struct Search {
  const Pattern& p;
  int n;
  std::vector<int> pos_cell;          // cell required at each position
  std::vector<std::vector<int>> members;
  std::vector<int> lab;
  std::vector<bool> used;
  std::vector<uint8_t> cur, best;
  std::vector<int> best_lab;
  bool have_best = false;
  uint64_t aut = 0;

  size_t block_start(int pos) const {
    return p.directed ? static_cast<size_t>(pos) * (pos - 1)
                      : static_cast<size_t>(pos) * (pos - 1) / 2;
  }

  void fill_block(int pos) {
    size_t k = block_start(pos);
    const int v = lab[pos];
    for (int q = 0; q < pos; ++q) {
      const int u = lab[q];
      cur[k++] = p.at(u, v);
      if (p.directed) cur[k++] = p.at(v, u);
    }
  }

  // Returns true when `best` was replaced somewhere below.
  bool Run(int pos, bool equal_so_far) {
    if (pos == n) {
      if (!have_best || !equal_so_far) {
        best = cur;
        best_lab = lab;
        have_best = true;
        aut = 1;
        return true;
      }
      ++aut;
      return false;
    }
    bool updated = false;
    for (int v : members[pos_cell[pos]]) {
      if (used[v]) continue;
      lab[pos] = v;
      fill_block(pos);
      bool child_equal = false;
      if (have_best && equal_so_far) {
        const size_t a = block_start(pos), b = block_start(pos + 1);
        int c = 0;
        for (size_t i = a; i < b; ++i) {
          if (cur[i] != best[i]) {
            c = cur[i] < best[i] ? -1 : 1;
            break;
          }
        }
        if (c < 0) continue;
        child_equal = c == 0;
      }
      used[v] = true;
      if (Run(pos + 1, child_equal)) {
        updated = true;
        equal_so_far = true;
      }
      used[v] = false;
    }
    return updated;
  }
};

CanonicalForm CanonicalConnected(const Pattern& p) {
  const int n = p.n;
  if (n > kMaxPatternNodes)
    throw SizeCapError("subgraph patterns are limited to " +
                       std::to_string(kMaxPatternNodes) +
                       " nodes per connected component");
  std::vector<int> cell = RefineCells(p);
  Search s{p, n, {}, {}, {}, {}, {}, {}, {}};
  const int k = n == 0 ? 0 : *std::max_element(cell.begin(), cell.end()) + 1;
  s.members.assign(k, {});
  for (int v = 0; v < n; ++v) s.members[cell[v]].push_back(v);
  for (int c = 0; c < k; ++c)
    for (size_t i = 0; i < s.members[c].size(); ++i) s.pos_cell.push_back(c);
  s.lab.assign(n, 0);
  s.used.assign(n, false);
  s.cur.assign(s.block_start(n), 0);
  s.Run(0, false);
  CanonicalForm out;
  out.form = p.relabeled(s.best_lab);
  out.automorphisms = n == 0 ? 1 : s.aut;
  return out;
}

std::string EncodePattern(const Pattern& p) {
  std::string code;
  code.push_back(static_cast<char>(p.directed ? 1 : 0));
  code.push_back(static_cast<char>(p.n));
  for (uint8_t c : p.color) code.push_back(static_cast<char>(c));
  std::string edges;
  int m = 0;
  for (int u = 0; u < p.n; ++u)
    for (int v = p.directed ? 0 : u + 1; v < p.n; ++v)
      if (p.at(u, v)) {
        edges.push_back(static_cast<char>(u));
        edges.push_back(static_cast<char>(v));
        edges.push_back(static_cast<char>(p.at(u, v)));
        ++m;
      }
  code.push_back(static_cast<char>(m));
  return code + edges;
}

Pattern DecodePattern(std::string_view code) {
  auto byte = [&](size_t i) -> int {
    if (i >= code.size()) throw UsageError("truncated subgraph code");
    return static_cast<uint8_t>(code[i]);
  };
  const bool directed = byte(0) != 0;
  const int n = byte(1);
  Pattern p = Pattern::Empty(n, directed);
  for (int v = 0; v < n; ++v) p.color[v] = static_cast<uint8_t>(byte(2 + v));
  const int m = byte(2 + n);
  for (int e = 0; e < m; ++e) {
    const size_t at = 3 + n + 3 * e;
    const int u = byte(at), v = byte(at + 1);
    if (u >= n || v >= n || u == v) throw UsageError("corrupt subgraph code");
    p.set(u, v, static_cast<uint8_t>(byte(at + 2)));
  }
  if (code.size() != static_cast<size_t>(3 + n + 3 * m))
    throw UsageError("corrupt subgraph code");
  return p;
}

}  // namespace

CanonicalForm Canonicalize(const Pattern& input) {
  const Pattern p = input.without_isolated();
  auto comps = p.components();
  if (comps.size() <= 1) {
    CanonicalForm f = CanonicalConnected(p);
    f.code = EncodePattern(f.form);
    return f;
  }
  std::vector<CanonicalForm> parts;
  for (const auto& c : comps) {
    CanonicalForm f = CanonicalConnected(p.induced(c));
    f.code = EncodePattern(f.form);
    parts.push_back(std::move(f));
  }
  std::sort(parts.begin(), parts.end(),
            [](const CanonicalForm& a, const CanonicalForm& b) {
              return a.code > b.code;
            });
  CanonicalForm out;
  out.form = Pattern::Empty(0, p.directed);
  uint64_t aut = 1;
  size_t run = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    const Pattern& f = parts[i].form;
    const int base = out.form.n;
    for (int v = 0; v < f.n; ++v) out.form.add_node(f.color[v]);
    for (int u = 0; u < f.n; ++u)
      for (int v = 0; v < f.n; ++v)
        if (f.at(u, v)) out.form.label[(base + u) * out.form.n + base + v] = f.at(u, v);
    aut *= parts[i].automorphisms;
    run = (i > 0 && parts[i].code == parts[i - 1].code) ? run + 1 : 1;
    aut *= run;
  }
  out.automorphisms = aut;
  out.code = EncodePattern(out.form);
  return out;
}

std::string SubgraphId::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string h;
  for (char c : code_) {
    const auto b = static_cast<uint8_t>(c);
    h.push_back(digits[b >> 4]);
    h.push_back(digits[b & 15]);
  }
  return h;
}

std::string SubgraphId::str() const {
  std::string s = std::string(ModeName(mode_)) + ":" + std::to_string(order_) +
                  ":" + hex();
  if (!alias_.empty()) s += ":" + alias_;
  return s;
}

Pattern SubgraphId::pattern() const { return DecodePattern(code_); }

SubgraphId SubgraphId::Parse(std::string_view text) {
  std::vector<std::string_view> parts;
  size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const size_t c = text.find(':', pos);
    if (c == std::string_view::npos) {
      parts.push_back(text.substr(pos));
      pos = text.size() + 1;
      break;
    }
    parts.push_back(text.substr(pos, c - pos));
    pos = c + 1;
  }
  if (parts.size() < 3) throw UsageError("malformed subgraph id '" + std::string(text) + "'");
  const std::string alias = pos <= text.size() ? std::string(text.substr(pos)) : "";
  const Mode mode = ParseMode(parts[0]);
  int order = 0;
  for (char c : parts[1]) {
    if (c < '0' || c > '9') throw UsageError("malformed subgraph order");
    order = order * 10 + (c - '0');
  }
  std::string_view hex = parts[2];
  if (hex.size() % 2) throw UsageError("malformed subgraph hex");
  std::string code;
  auto nib = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw UsageError("malformed subgraph hex");
  };
  for (size_t i = 0; i < hex.size(); i += 2)
    code.push_back(static_cast<char>(nib(hex[i]) * 16 + nib(hex[i + 1])));
  DecodePattern(code);
  return SubgraphId(mode, order, std::move(code), alias);
}

size_t SubgraphIdHash::operator()(const SubgraphId& id) const {
  return std::hash<std::string>()(id.code()) * 31 +
         static_cast<size_t>(id.mode()) * 7 + static_cast<size_t>(id.order());
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

struct NamedEntry {
  Mode family;
  std::string_view alias;
  int n;
  EdgeList edges;
  std::vector<uint8_t> colors;
  int star = -1;  // index into edges of the distinguished edge
};

const std::vector<NamedEntry>& NamedTable() {
  static const std::vector<NamedEntry> table = [] {
    std::vector<NamedEntry> t;
    auto simple = [&](std::string_view a, int n, EdgeList e) {
      t.push_back({Mode::kSimple, a, n, std::move(e), {}});
    };
    simple("edge", 2, {{0, 1}});
    simple("wedge", 3, {{0, 1}, {1, 2}});
    simple("two-parallel", 4, {{0, 1}, {2, 3}});
    simple("triangle", 3, {{0, 1}, {1, 2}, {0, 2}});
    simple("claw", 4, {{0, 1}, {0, 2}, {0, 3}});
    simple("three-path", 4, {{0, 1}, {1, 2}, {2, 3}});
    simple("wedge-edge", 5, {{0, 1}, {1, 2}, {3, 4}});
    simple("three-parallel", 6, {{0, 1}, {2, 3}, {4, 5}});
    simple("tailed-triangle", 4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    simple("square", 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    simple("diamond", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    simple("K4", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto weighted = [&](std::string_view a, int n, EdgeList e) {
      t.push_back({Mode::kWeighted, a, n, std::move(e), {}});
    };
    weighted("reciprocal", 2, {{0, 1}, {0, 1}});
    weighted("three-reciprocal", 2, {{0, 1}, {0, 1}, {0, 1}});
    weighted("reciprocal-wedge", 3, {{0, 1}, {0, 1}, {1, 2}});
    auto directed = [&](std::string_view a, int n, EdgeList e) {
      t.push_back({Mode::kDirected, a, n, std::move(e), {}});
    };
    directed("edge", 2, {{0, 1}});
    directed("wedge-in-in", 3, {{0, 1}, {2, 1}});
    directed("wedge-out-out", 3, {{1, 0}, {1, 2}});
    directed("wedge-in-out", 3, {{0, 1}, {1, 2}});
    directed("two-parallel", 4, {{0, 1}, {2, 3}});
    directed("reciprocal", 2, {{0, 1}, {1, 0}});
    directed("reciprocal-wedge-in", 3, {{0, 1}, {1, 0}, {2, 1}});
    directed("reciprocal-wedge-out", 3, {{0, 1}, {1, 0}, {1, 2}});
    directed("triangle-transitive", 3, {{0, 1}, {1, 2}, {0, 2}});
    directed("triangle-cyclic", 3, {{0, 1}, {1, 2}, {2, 0}});
    directed("reciprocal-triangle-in-in", 3, {{0, 1}, {1, 0}, {0, 2}, {1, 2}});
    directed("reciprocal-triangle-out-out", 3,
             {{0, 1}, {1, 0}, {2, 0}, {2, 1}});
    directed("reciprocal-triangle-in-out", 3,
             {{0, 1}, {1, 0}, {0, 2}, {2, 1}});
    directed("reciprocal-reciprocal", 3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
    directed("double-reciprocal-triangle", 3,
             {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}});
    directed("complete-triad", 3,
             {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
    const uint8_t A = kAnchorColor;
    t.push_back({Mode::kLocalNode, "self-edge", 2, {{0, 1}}, {A, 0}});
    t.push_back({Mode::kLocalNode, "other-edge", 3, {{1, 2}}, {A, 0, 0}});
    t.push_back({Mode::kLocalNode, "wedge-center", 3, {{0, 1}, {0, 2}}, {A, 0, 0}});
    t.push_back({Mode::kLocalNode, "wedge-end", 3, {{0, 1}, {1, 2}}, {A, 0, 0}});
    t.push_back({Mode::kLocalNode, "triangle-local", 3,
                 {{0, 1}, {1, 2}, {0, 2}}, {A, 0, 0}});
    t.push_back({Mode::kLocalEdge, "star-edge", 2, {{0, 1}}, {}, 0});
    t.push_back({Mode::kLocalEdge, "detached-edge", 2, {{0, 1}}, {}, -1});
    t.push_back({Mode::kLocalEdge, "wedge-attached", 3, {{0, 1}, {1, 2}}, {}, 0});
    t.push_back({Mode::kLocalEdge, "wedge-detached", 3, {{0, 1}, {1, 2}}, {}, -1});
    t.push_back({Mode::kLocalEdge, "triangle-local", 3,
                 {{0, 1}, {1, 2}, {0, 2}}, {}, 0});
    return t;
  }();
  return table;
}

Pattern BuildNamed(const NamedEntry& e) {
  Pattern p = Pattern::FromEdges(e.n, e.family == Mode::kDirected, e.edges,
                                 e.colors);
  if (e.star >= 0) p.set(e.edges[e.star].first, e.edges[e.star].second, kStarLabel);
  return p;
}

// Dictionary keyed by (family, code of the color-free shape).
const std::map<std::pair<Mode, std::string>, const NamedEntry*>& AliasMap() {
  static const auto map = [] {
    std::map<std::pair<Mode, std::string>, const NamedEntry*> m;
    for (const NamedEntry& e : NamedTable())
      m[{e.family, Canonicalize(BuildNamed(e)).code}] = &e;
    return m;
  }();
  return map;
}

// Colors of c listed in the node order of the named shape; the smallest
// such list over the shape's automorphisms.
std::vector<uint8_t> ColorsInShapeOrder(const Pattern& c, const NamedEntry& e) {
  const Pattern shape = BuildNamed(e);
  std::vector<int> perm(c.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<uint8_t> best;
  do {
    bool ok = true;
    for (int i = 0; i < c.n && ok; ++i)
      for (int j = 0; j < c.n && ok; ++j) ok = shape.at(i, j) == c.at(perm[i], perm[j]);
    if (!ok) continue;
    std::vector<uint8_t> colors(c.n);
    for (int i = 0; i < c.n; ++i) colors[i] = c.color[perm[i]];
    if (best.empty() || colors < best) best = std::move(colors);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Mode AliasFamily(Mode mode) {
  switch (mode) {
    case Mode::kAttributed:
    case Mode::kBipartite:
      return Mode::kSimple;
    default:
      return mode;
  }
}

bool HasMultiEdges(const Pattern& p) {
  for (uint8_t x : p.label)
    if (x > 1 && x != kStarLabel) return true;
  return false;
}

}  // namespace

SubgraphId CanonicalSubgraphId(const Pattern& p, Mode mode,
                               std::span<const std::string> palette) {
  CanonicalForm f = Canonicalize(p);
  const Pattern& c = f.form;
  const int order = mode == Mode::kLocalEdge ? c.edge_slots() : c.edge_units();
  std::string alias;
  const Mode family = AliasFamily(mode);
  if (family == Mode::kSimple && mode != Mode::kSimple) {
    Pattern shape = c;
    std::fill(shape.color.begin(), shape.color.end(), 0);
    std::string base;
    Mode lookup = HasMultiEdges(shape) ? Mode::kWeighted : Mode::kSimple;
    auto it = AliasMap().find({lookup, Canonicalize(shape).code});
    if (it == AliasMap().end() && lookup == Mode::kWeighted)
      it = AliasMap().find({Mode::kSimple, Canonicalize(shape).code});
    if (it != AliasMap().end()) {
      alias = std::string(it->second->alias) + "[";
      const std::vector<uint8_t> colors = ColorsInShapeOrder(c, *it->second);
      for (size_t v = 0; v < colors.size(); ++v) {
        if (v) alias += ",";
        alias += colors[v] < palette.size() ? palette[colors[v]]
                                            : std::to_string(colors[v]);
      }
      alias += "]";
    }
  } else {
    auto it = AliasMap().find({family, f.code});
    if (it == AliasMap().end() && family == Mode::kWeighted)
      it = AliasMap().find({Mode::kSimple, f.code});
    if (it != AliasMap().end()) alias = std::string(it->second->alias);
  }
  return SubgraphId(mode, order, f.code, alias);
}

Pattern NamedPattern(Mode mode, std::string_view alias) {
  const Mode family = AliasFamily(mode);
  for (const NamedEntry& e : NamedTable())
    if (e.alias == alias &&
        (e.family == family ||
         (family == Mode::kWeighted && e.family == Mode::kSimple)))
      return BuildNamed(e);
  throw UsageError("unknown subgraph alias '" + std::string(alias) + "' for mode " +
                   std::string(ModeName(mode)));
}

Rational CompleteCount(const SubgraphId& id,
                       std::span<const int64_t> color_sizes) {
  const CanonicalForm f = Canonicalize(id.pattern());
  const Pattern& p = f.form;
  if (id.mode() == Mode::kLocalEdge) {
    // A distinguished edge is fixed; remaining nodes come from n - 2.
    const int64_t n = std::accumulate(color_sizes.begin(), color_sizes.end(),
                                      int64_t{0});
    bool has_star = false;
    for (uint8_t x : p.label) has_star |= x == kStarLabel;
    const std::string_view a = id.alias();
    if (a == "star-edge") return 1;
    if (a == "detached-edge") return Rational(Binomial(n, 2) - 1);
    if (a == "wedge-attached") return Rational(Integer(2 * (n - 2)));
    if (a == "wedge-detached")
      return Rational(3 * Binomial(n, 3) - 2 * (n - 2));
    if (a == "triangle-local") return Rational(Integer(n - 2));
    if (!has_star) return 0;
    Rational q(2 * Falling(n - 2, p.n - 2),
               Integer(static_cast<unsigned long>(f.automorphisms)));
    q.canonicalize();
    return q;
  }
  std::map<int, int> need;
  for (uint8_t c : p.color) ++need[c];
  Integer ways = 1;
  for (auto [c, k] : need) {
    int64_t avail = 0;
    if (c == kAnchorColor) {
      avail = 1;
    } else if (c < static_cast<int>(color_sizes.size())) {
      avail = color_sizes[c];
    }
    ways *= Falling(avail, k);
  }
  Rational q(ways, Integer(static_cast<unsigned long>(f.automorphisms)));
  q.canonicalize();
  return q;
}

Rational CompleteCount(const SubgraphId& id, int64_t n) {
  if (id.mode() == Mode::kLocalNode) {
    const int64_t sizes[1] = {n - 1};
    return CompleteCount(id, sizes);
  }
  const int64_t sizes[1] = {n};
  return CompleteCount(id, sizes);
}

}  // namespace gc
