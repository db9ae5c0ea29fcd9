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
#include "graphcumulants/gc_api.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "graphcumulants/cumulants.hpp"
#include "graphcumulants/edit_spectrum.hpp"
#include "graphcumulants/ergm.hpp"
#include "graphcumulants/generators.hpp"
#include "graphcumulants/graph_sum.hpp"
#include "graphcumulants/json_io.hpp"
#include "graphcumulants/local.hpp"
#include "graphcumulants/unbiased.hpp"

struct gc_graph {
  gc::Graph graph;
};

namespace {

// A malformed eta is a bad argument, not bad data.
gc::Rational ParseEta(const char* text) {
  try {
    return gc::ParseRational(text);
  } catch (const gc::DataError& e) {
    throw gc::UsageError(std::string("eta: ") + e.what());
  }
}

thread_local std::string g_last_error;

template <typename F>
gc_status Guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return GC_OK;
  } catch (const gc::Error& e) {
    g_last_error = e.what();
    return static_cast<gc_status>(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return GC_ERROR_SIZE_CAP;
  } catch (const std::exception& e) {
    g_last_error = std::string("internal error: ") + e.what();
    return GC_ERROR_INTERNAL;
  }
}

char* Dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void Emit(const gc::Json& j, char** out) {
  if (!out) throw gc::UsageError("output pointer is null");
  *out = Dup(j.dump());
}

const gc::Graph& Get(const gc_graph* g) {
  if (!g) throw gc::UsageError("graph handle is null");
  return g->graph;
}

void Store(gc::Graph g, gc_graph** out) {
  if (!out) throw gc::UsageError("output pointer is null");
  *out = new gc_graph{std::move(g)};
}

void CheckOrder(const gc::Graph& g, int order) {
  if (order < 1) throw gc::UsageError("order must be at least 1");
  const int cap = gc::MaxOrder(gc::SpecFor(g, order));
  if (order > cap)
    throw gc::SizeCapError("order " + std::to_string(order) +
                           " exceeds the cap of " + std::to_string(cap) +
                           " for these graph features");
}

// Finds the class by alias or id at the smallest order that knows it.
int ResolveAnyOrder(const gc::Graph& g, const std::string& name, int& order) {
  const int cap = gc::MaxOrder(gc::SpecFor(g, 1));
  for (int r = 1; r <= cap; ++r) {
    auto u = gc::GetUniverse(gc::SpecFor(g, r));
    try {
      const int i = u->resolve(name);
      if ((*u)[i].id.order() == r) {
        order = r;
        return i;
      }
    } catch (const gc::UsageError&) {
    }
  }
  throw gc::UsageError("unknown subgraph '" + name + "'");
}

void RequireSimple(const gc::Graph& g) {
  if (g.directed() || g.weighted() || g.attributed())
    throw gc::UsageError("ERGMs are defined over simple undirected graphs");
}

std::vector<std::string> ErgmStatistics(const gc_ergm_options& o) {
  std::vector<std::string> stats;
  if (o.statistics && *o.statistics) {
    std::stringstream in(o.statistics);
    std::string s;
    while (std::getline(in, s, ','))
      if (!s.empty()) stats.push_back(s);
    if (stats.empty()) throw gc::UsageError("empty statistic list");
    return stats;
  }
  if (o.order < 1 || o.order > 3)
    throw gc::UsageError("ERGM order must be 1, 2 or 3");
  for (int c = 0; c < gc::kErgmColumns; ++c)
    if (gc::ErgmColumnOrder(c) <= o.order)
      stats.emplace_back(gc::kErgmStatistics[c]);
  return stats;
}

struct FittedErgm {
  std::shared_ptr<const gc::GraphClassTable> table;
  gc::ErgmModel model;
  gc::Json header;
};

FittedErgm Fit(const gc::Graph& g, const gc_ergm_options* options) {
  if (!options) throw gc::UsageError("ERGM options are null");
  RequireSimple(g);
  const auto stats = ErgmStatistics(*options);
  int order = 1;
  for (const auto& s : stats)
    order = std::max(order, gc::ErgmColumnOrder(gc::ErgmColumn(s)));
  FittedErgm f;
  f.table = gc::EnumerateClasses(static_cast<int>(g.node_count()),
                                 options->allow_large != 0, options->threads);
  const gc::MomentVector m = gc::ComputeMoments(g, order, {options->threads});
  gc::MomentVector targets = m;
  gc::UnbiasingConfig cfg;
  if (options->eta) cfg.eta = ParseEta(options->eta);
  std::optional<gc::Rational> population;
  if (cfg.eta && *cfg.eta != 0) {
    population = gc::PopulationSize(cfg, g.node_count());
    targets = gc::PartialUnbiasedMoments(gc::UnbiasedCumulants(m), cfg);
  }
  std::vector<gc::Rational> t;
  for (const auto& s : stats) t.push_back(targets.at(s));
  f.model = gc::FitErgm(*f.table, stats, t);
  f.header["eta"] = gc::RationalJson(cfg.eta.value_or(0));
  f.header["population"] =
      !cfg.eta || *cfg.eta == 0 ? gc::Json(gc::RationalJson(g.node_count()))
      : population ? gc::Json(gc::RationalJson(*population))
                   : gc::Json("infinite");
  f.header["classes"] = f.table->size();
  return f;
}

}  // namespace

extern "C" {

const char* gc_version(void) { return "0.1.0"; }

const char* gc_last_error(void) { return g_last_error.c_str(); }

void gc_string_free(char* s) { std::free(s); }

gc_status gc_graph_parse(const char* edge_text, const char* attribute_text,
                         const gc_graph_options* options, gc_graph** out) {
  return Guard([&] {
    if (!edge_text) throw gc::UsageError("edge text is null");
    gc::ParseOptions po;
    if (options) {
      po.features = {options->directed != 0, options->weighted != 0,
                     options->bipartite != 0};
      if (options->nodes > 0) po.nodes = options->nodes;
    }
    if (attribute_text) po.attributes = std::string(attribute_text);
    Store(gc::ParseGraph(edge_text, po), out);
  });
}

void gc_graph_free(gc_graph* g) { delete g; }

int64_t gc_graph_nodes(const gc_graph* g) { return g ? g->graph.node_count() : -1; }

int64_t gc_graph_edges(const gc_graph* g) { return g ? g->graph.edge_count() : -1; }

gc_status gc_graph_write(const gc_graph* g, char** edge_text, char** attribute_text) {
  return Guard([&] {
    const gc::Graph& graph = Get(g);
    if (!edge_text) throw gc::UsageError("output pointer is null");
    *edge_text = Dup(gc::WriteEdgeList(graph));
    if (attribute_text)
      *attribute_text = graph.attributed() ? Dup(gc::WriteAttributes(graph)) : nullptr;
  });
}

gc_status gc_count(const gc_graph* g, int order, int threads, char** json) {
  return Guard([&] {
    const gc::Graph& graph = Get(g);
    CheckOrder(graph, order);
    Emit(gc::CountsJson(gc::CountSubgraphs(graph, order, {threads})), json);
  });
}

gc_status gc_moments(const gc_graph* g, int order, int threads, char** json) {
  return Guard([&] {
    const gc::Graph& graph = Get(g);
    CheckOrder(graph, order);
    Emit(gc::MomentsJson(gc::ComputeMoments(graph, order, {threads})), json);
  });
}

gc_status gc_cumulants(const gc_graph* g, int order, int threads, int scaled,
                       double root_exponent, char** json) {
  return Guard([&] {
    const gc::Graph& graph = Get(g);
    CheckOrder(graph, order);
    const gc::MomentVector m = gc::ComputeMoments(graph, order, {threads});
    const gc::CumulantVector k = gc::MomentsToCumulants(m);
    const gc::Clustering c = gc::ClusteringCoefficients(m);
    if (scaled) {
      std::optional<double> exponent;
      if (root_exponent > 0) exponent = root_exponent;
      const gc::ScaledCumulants s = gc::ScaleCumulants(k, exponent);
      Emit(gc::CumulantsJson(m, k, &s, &c), json);
    } else {
      Emit(gc::CumulantsJson(m, k, nullptr, &c), json);
    }
  });
}

gc_status gc_unbiased(const gc_graph* g, int order, int threads, const char* eta,
                      char** json) {
  return Guard([&] {
    const gc::Graph& graph = Get(g);
    CheckOrder(graph, order);
    const gc::MomentVector m = gc::ComputeMoments(graph, order, {threads});
    const gc::CumulantVector k = gc::UnbiasedCumulants(m);
    std::optional<gc::MomentVector> targets;
    std::optional<gc::Rational> population, variance;
    if (eta) {
      gc::UnbiasingConfig cfg;
      cfg.eta = ParseEta(eta);
      population = gc::PopulationSize(cfg, graph.node_count());
      targets = gc::PartialUnbiasedMoments(k, cfg);
      if (order >= 2) {
        try {
          variance = gc::VarianceKappa1(*targets);
        } catch (const gc::Error&) {
          variance.reset();  // not defined for this feature set
        }
      }
    }
    Emit(gc::UnbiasedJson(m, k, targets, population, variance), json);
  });
}

gc_status gc_ztest(const gc_graph* g, const gc_ztest_options* options, char** json) {
  return Guard([&] {
    const gc::Graph& graph = Get(g);
    if (!options || !options->subgraph) throw gc::UsageError("no subgraph given");
    int order = 1;
    const int index = ResolveAnyOrder(graph, options->subgraph, order);
    const gc::MomentVector m = gc::ComputeMoments(graph, order, {options->threads});
    const gc::CumulantVector k = gc::UnbiasedCumulants(m);
    const gc::SubgraphId id = (*m.universe)[index].id;
    if (!k.has(index))
      throw gc::DataError(id.str() + " is undefined: " + k.reasons[index]);
    double variance = 0;
    std::string method;
    if (order == 1) {
      const gc::MomentVector m2 = gc::ComputeMoments(graph, 2, {options->threads});
      variance = gc::VarianceKappa1(gc::UnbiasedTargets(m2)).get_d();
      method = "closed-form";
    } else {
      gc::JackknifeSpec spec;
      if (options->replicates > 0) spec.replicates = options->replicates;
      if (options->delete_fraction > 0) spec.delete_fraction = options->delete_fraction;
      spec.seed = options->seed;
      spec.threads = options->threads;
      const gc::VarianceEstimate v = gc::JackknifeVariance(graph, order, index, spec);
      variance = v.variance;
      method = v.method;
    }
    if (!(variance > 0))
      throw gc::DataError("the " + method + " variance estimate of " + id.str() + " is " +
                          std::to_string(variance) +
                          "; the graph is too small or too regular for a z-test");
    Emit(gc::TestResultJson(gc::ZTest(id, k[index], variance, method)), json);
  });
}

gc_status gc_local_node(const gc_graph* g, int64_t node, int order, int threads,
                        char** json) {
  return Guard([&] {
    const gc::Graph& graph = Get(g);
    if (node < 0)
      Emit(gc::LocalJson(gc::AllNodeLocal(graph, order, threads)), json);
    else
      Emit(gc::LocalJson({gc::NodeLocalCumulants(graph, node, order)}), json);
  });
}

gc_status gc_local_edge(const gc_graph* g, int64_t u, int64_t v, int order,
                        int threads, char** json) {
  return Guard([&] {
    const gc::Graph& graph = Get(g);
    if (u < 0)
      Emit(gc::LocalJson(gc::AllEdgeLocal(graph, order, threads)), json);
    else
      Emit(gc::LocalJson({gc::EdgeLocalCumulants(graph, u, v, order)}), json);
  });
}

gc_status gc_ergm_fit(const gc_graph* g, const gc_ergm_options* options, char** json) {
  return Guard([&] {
    FittedErgm f = Fit(Get(g), options);
    gc::Json j = std::move(f.header);
    j["model"] = gc::ErgmModelJson(f.model);
    Emit(j, json);
  });
}

gc_status gc_ergm_dist(const gc_graph* g, const gc_ergm_options* options,
                       const char* statistic, char** json) {
  return Guard([&] {
    FittedErgm f = Fit(Get(g), options);
    gc::Json j = std::move(f.header);
    j["model"] = gc::ErgmModelJson(f.model);
    gc::Json dists = gc::Json::array();
    if (statistic) {
      dists.push_back(gc::HistogramJson(gc::ErgmDistribution(*f.table, f.model, statistic)));
    } else {
      for (const auto& s : f.model.statistics)
        dists.push_back(gc::HistogramJson(gc::ErgmDistribution(*f.table, f.model, s)));
    }
    j["distributions"] = std::move(dists);
    Emit(j, json);
  });
}

gc_status gc_editgraph(int nodes, int span_order, char** json) {
  return Guard([&] {
    const gc::EditGraph h = gc::BuildEditGraph(nodes);
    const gc::Spectrum s = gc::LaplacianSpectrum(h);
    const gc::NullVectorCheck z = gc::ZeroEigenvectors(h);
    std::vector<gc::SpanCheck> spans;
    if (span_order >= 0) spans = gc::SpanTest(h, span_order);
    Emit(gc::EditGraphJson(h, s, z, spans), json);
  });
}

gc_status gc_generate_er(int64_t n, double p, uint64_t seed, int threads,
                         gc_graph** out) {
  return Guard([&] { Store(gc::GenerateEr(n, p, seed, threads), out); });
}

gc_status gc_generate_ssbm(int64_t n, double a, double b, uint64_t seed, int threads,
                           gc_graph** out) {
  return Guard([&] { Store(gc::GenerateSsbm(n, a, b, seed, threads), out); });
}

gc_status gc_ssbm_from_chart(int64_t n, double assortativity, double mean_degree,
                             double* a, double* b) {
  return Guard([&] {
    if (!a || !b) throw gc::UsageError("output pointer is null");
    const gc::SsbmParameters p = gc::SsbmFromChart(n, assortativity, mean_degree);
    *a = p.a;
    *b = p.b;
  });
}

gc_status gc_generate_bipartite_geometric(int64_t n, double f, double mean_degree,
                                          uint64_t seed, gc_graph** out) {
  return Guard([&] {
    Store(gc::GenerateBipartiteGeometric(n, f, mean_degree, seed), out);
  });
}

gc_status gc_shuffle(const gc_graph* g, const char* mode, uint64_t seed,
                     gc_graph** out) {
  return Guard([&] {
    if (!mode) throw gc::UsageError("no shuffle mode given");
    Store(gc::Shuffle(Get(g), gc::ParseShuffleMode(mode), seed), out);
  });
}

gc_status gc_sum_demo(int order, char** json) {
  return Guard([&] {
    if (order < 1 || order > 3) throw gc::UsageError("sum demo order must be 1..3");
    Emit(gc::SumDemoJson(gc::RunSumDemo(order)), json);
  });
}

}  // extern "C"
