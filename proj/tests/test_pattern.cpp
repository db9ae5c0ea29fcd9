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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "graphcumulants/universe.hpp"
#include "oracle.hpp"

namespace gc {
namespace {

using Edges = std::vector<std::pair<int, int>>;

SubgraphId Id(int n, const Edges& e, Mode mode = Mode::kSimple) {
  return CanonicalSubgraphId(Pattern::FromEdges(n, mode == Mode::kDirected, e), mode);
}

TEST(SubgraphId, IsomorphicPathsShareId) {
  const SubgraphId a = Id(3, {{0, 1}, {1, 2}});
  const SubgraphId b = Id(3, {{2, 0}, {0, 1}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.alias(), "wedge");
  EXPECT_EQ(a.order(), 2);
}

TEST(SubgraphId, Aliases) {
  EXPECT_EQ(Id(3, {{0, 1}, {2, 1}}, Mode::kDirected).alias(), "wedge-in-in");
  EXPECT_EQ(Id(3, {{1, 0}, {1, 2}}, Mode::kDirected).alias(), "wedge-out-out");
  EXPECT_EQ(Id(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}).alias(), "square");
  EXPECT_EQ(Id(4, {{0, 1}, {2, 3}}).alias(), "two-parallel");
  EXPECT_EQ(Id(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}}).alias(), "K4");
}

TEST(SubgraphId, SerializationRoundTrip) {
  const SubgraphId a = Id(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  EXPECT_EQ(SubgraphId::Parse(a.str()), a);
  EXPECT_EQ(a.alias(), "tailed-triangle");
}

TEST(SubgraphId, AttributedAliasesAreUnique) {
  UniverseSpec s;
  s.mode = Mode::kAttributed;
  s.palette = {"green", "purple"};
  s.order = 3;
  const auto u = GetUniverse(s);
  std::set<std::string> seen;
  for (const ClassInfo& c : u->classes()) {
    EXPECT_FALSE(c.id.alias().empty());
    EXPECT_TRUE(seen.insert(c.id.alias()).second) << c.id.alias();
  }
  // Shape order: the wedge center is the middle entry.
  Pattern p = Pattern::FromEdges(3, false, Edges{{0, 1}, {0, 2}},
                                 std::vector<uint8_t>{1, 0, 0});
  EXPECT_EQ(CanonicalSubgraphId(p, Mode::kAttributed, s.palette).alias(),
            "wedge[green,purple,green]");
}

TEST(CompleteCount, Examples) {
  EXPECT_EQ(CompleteCount(Id(3, {{0, 1}, {1, 2}}), 4), 12);
  EXPECT_EQ(CompleteCount(Id(4, {{0, 1}, {2, 3}}), 3), 0);
  EXPECT_EQ(CompleteCount(Id(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}}), 10), 210);
}

// #_g is the falling factorial of n over |Aut(g)|.
TEST(CompleteCount, FallingFactorialPolynomial) {
  UniverseSpec s;
  s.order = 4;
  for (const ClassInfo& c : GetUniverse(s)->classes()) {
    for (int64_t n = 1; n <= 20; ++n) {
      Rational want(Falling(n, c.form.n),
                    Integer(static_cast<unsigned long>(c.automorphisms)));
      want.canonicalize();
      EXPECT_EQ(CompleteCount(c.id, n), want) << c.id.str() << " n=" << n;
    }
  }
}

TEST(CompleteCount, MatchesMapEnumeration) {
  for (bool directed : {false, true}) {
    UniverseSpec s;
    s.mode = directed ? Mode::kDirected : Mode::kSimple;
    s.directed = directed;
    s.order = 3;
    for (const ClassInfo& c : GetUniverse(s)->classes())
      EXPECT_EQ(CompleteCount(c.id, 7), Rational(oracle::CompleteCountByMaps(c.form, {7})))
          << c.id.str();
  }
  UniverseSpec a;
  a.mode = Mode::kAttributed;
  a.palette = {"g", "p"};
  a.order = 3;
  const std::vector<int64_t> sizes{3, 4};
  for (const ClassInfo& c : GetUniverse(a)->classes())
    EXPECT_EQ(CompleteCount(c.id, sizes), Rational(oracle::CompleteCountByMaps(c.form, {3, 4})))
        << c.id.str();
}

// The id is a class function: relabeling never changes it.
TEST(SubgraphId, RelabelingInvariance) {
  std::mt19937_64 rng(7);
  UniverseSpec s;
  s.order = 6;
  for (const ClassInfo& c : GetUniverse(s)->classes()) {
    std::vector<int> perm(c.form.n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 1000; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      ASSERT_EQ(CanonicalSubgraphId(c.form.relabeled(perm), Mode::kSimple), c.id)
          << c.id.str();
    }
  }
}

TEST(SubgraphId, DirectedRelabelingInvariance) {
  std::mt19937_64 rng(11);
  UniverseSpec s;
  s.mode = Mode::kDirected;
  s.directed = true;
  s.order = 4;
  for (const ClassInfo& c : GetUniverse(s)->classes()) {
    std::vector<int> perm(c.form.n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 200; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      ASSERT_EQ(CanonicalSubgraphId(c.form.relabeled(perm), Mode::kDirected), c.id);
    }
  }
}

TEST(Universe, ClassCountsBySize) {
  UniverseSpec s;
  s.order = 6;
  const auto u = GetUniverse(s);
  std::map<int, int> connected;
  for (const ClassInfo& c : u->classes())
    if (c.connected) ++connected[c.id.order()];
  // Connected simple graphs with r edges: 1, 1, 3, 5, 12, 30.
  EXPECT_EQ(connected, (std::map<int, int>{{1, 1}, {2, 1}, {3, 3}, {4, 5}, {5, 12}, {6, 30}}));
}

TEST(Universe, OrderCaps) {
  UniverseSpec s;
  s.order = 7;
  EXPECT_THROW(GetUniverse(s), SizeCapError);
  s.order = 4;
  s.mode = Mode::kAttributed;
  s.palette = {"a", "b"};
  EXPECT_THROW(GetUniverse(s), SizeCapError);
}

TEST(Universe, ResolveByAliasAndId) {
  UniverseSpec s;
  s.order = 3;
  const auto u = GetUniverse(s);
  const int i = u->resolve("triangle");
  EXPECT_EQ(u->resolve((*u)[i].id.str()), i);
  EXPECT_THROW(u->resolve("pentagon"), UsageError);
}

}  // namespace
}  // namespace gc
