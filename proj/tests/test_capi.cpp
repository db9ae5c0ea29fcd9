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

#include <nlohmann/json.hpp>
#include <string>

#include "graphcumulants/gc_api.h"

namespace {

using nlohmann::json;

struct Owned {
  char* p = nullptr;
  ~Owned() { gc_string_free(p); }
  json parse() const { return json::parse(p); }
};

gc_graph* Parse(const char* text, gc_graph_options opt = {}) {
  gc_graph* g = nullptr;
  EXPECT_EQ(gc_graph_parse(text, nullptr, &opt, &g), GC_OK) << gc_last_error();
  return g;
}

TEST(CApi, ParseAndWrite) {
  gc_graph* g = Parse("0 1\n1 2\n2 3\n");
  EXPECT_EQ(gc_graph_nodes(g), 4);
  EXPECT_EQ(gc_graph_edges(g), 3);
  Owned edges, attrs;
  ASSERT_EQ(gc_graph_write(g, &edges.p, &attrs.p), GC_OK);
  EXPECT_EQ(std::string(edges.p), "0 1\n1 2\n2 3\n");
  EXPECT_EQ(attrs.p, nullptr);
  gc_graph_free(g);
}

TEST(CApi, ErrorsCarryCodes) {
  gc_graph* g = nullptr;
  gc_graph_options opt{};
  EXPECT_EQ(gc_graph_parse("0 0\n", nullptr, &opt, &g), GC_ERROR_DATA);
  EXPECT_EQ(g, nullptr);
  EXPECT_NE(std::string(gc_last_error()).find("self-loop"), std::string::npos);
  EXPECT_EQ(gc_graph_parse(nullptr, nullptr, &opt, &g), GC_ERROR_USAGE);
  Owned out;
  EXPECT_EQ(gc_editgraph(9, 0, &out.p), GC_ERROR_SIZE_CAP);
}

TEST(CApi, Moments) {
  gc_graph* g = Parse("0 1\n1 2\n2 3\n");
  Owned out;
  ASSERT_EQ(gc_moments(g, 2, 1, &out.p), GC_OK);
  const std::string text = out.p;
  EXPECT_NE(text.find("\"wedge\""), std::string::npos);
  const json j = out.parse();
  EXPECT_TRUE(j.is_object());
  gc_graph_free(g);
}

TEST(CApi, Cumulants) {
  gc_graph* g = Parse("0 1\n1 2\n0 2\n2 3\n");
  Owned out;
  ASSERT_EQ(gc_cumulants(g, 3, 1, 1, 0, &out.p), GC_OK);
  EXPECT_NE(std::string(out.p).find("triangle"), std::string::npos);
  Owned unb;
  ASSERT_EQ(gc_unbiased(g, 2, 1, "1/11", &unb.p), GC_OK);
  Owned bad;
  EXPECT_EQ(gc_unbiased(g, 2, 1, "abc", &bad.p), GC_ERROR_USAGE);
  gc_graph_free(g);
}

TEST(CApi, InfeasibleErgm) {
  gc_graph* g = Parse("0 1\n1 2\n0 2\n2 3\n");
  gc_ergm_options opt{.order = 2, .statistics = nullptr, .eta = "0", .allow_large = 0, .threads = 1};
  Owned out;
  EXPECT_EQ(gc_ergm_fit(g, &opt, &out.p), GC_ERROR_INFEASIBLE);
  gc_graph_free(g);
}

TEST(CApi, GenerateAndShuffle) {
  gc_graph* g = nullptr;
  ASSERT_EQ(gc_generate_er(50, 0.1, 4, 1, &g), GC_OK);
  gc_graph* s = nullptr;
  EXPECT_EQ(gc_shuffle(g, "weights", 1, &s), GC_ERROR_USAGE);
  EXPECT_EQ(s, nullptr);
  double a = 0, b = 0;
  ASSERT_EQ(gc_ssbm_from_chart(100, 0.0, 9.9, &a, &b), GC_OK);
  EXPECT_NEAR(a, 0.1, 1e-12);
  EXPECT_NEAR(b, 0.1, 1e-12);
  gc_graph_free(g);
}

TEST(CApi, SumDemo) {
  Owned out;
  ASSERT_EQ(gc_sum_demo(3, &out.p), GC_OK);
  EXPECT_NE(std::string(out.p).find("\"3\""), std::string::npos);
}

TEST(CApi, Version) { EXPECT_GT(std::string(gc_version()).size(), 0u); }

}  // namespace
