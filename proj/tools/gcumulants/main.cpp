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

// gcumulants: command-line front end over the graphcumulants C API.

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "graphcumulants/gc_api.h"

namespace {

using Json = nlohmann::ordered_json;

// Exit codes.
constexpr int kOk = 0, kUsage = 1, kData = 2;

struct Failure {
  int code;
  std::string message;
};

struct Options {
  std::string graph;
  std::string attributes;
  bool directed = false, weighted = false, bipartite = false;
  int64_t nodes = 0;
  int order = 3;
  std::string eta;
  uint64_t seed = 1;
  int threads = 0;
  std::string out;
  bool csv = false, pretty = false, allow_large = false;
  // cumulants
  bool scaled = false;
  double root_exponent = 0;
  // ztest
  std::string subgraph;
  int replicates = 200;
  double delete_fraction = 0.5;
  // local
  int64_t node = -1;
  std::string edge;
  bool all = false;
  // ergm
  std::string statistics, statistic;
  // editgraph
  int span_order = 3;
  // generate / shuffle
  std::string model = "er", mode, attributes_out;
  double p = 0.5, a = -1, b = -1, assortativity = 0, mean_degree = -1, f = 0.5;
};

std::string ReadFile(const std::string& path) {
  std::ostringstream s;
  if (path == "-") {
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kData, "cannot read " + path};
  s << in.rdbuf();
  return s.str();
}

std::string Sha256(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
    throw Failure{kData, "SHA-256 failed"};
  std::ostringstream hex;
  for (unsigned i = 0; i < len; ++i)
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return hex.str();
}

std::string Timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void Check(gc_status s) {
  if (s != GC_OK) throw Failure{s == GC_ERROR_INTERNAL ? kData : static_cast<int>(s), gc_last_error()};
}

// Owns a C string from the library.
struct CString {
  char* p = nullptr;
  ~CString() { gc_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct GraphHandle {
  gc_graph* g = nullptr;
  ~GraphHandle() { gc_graph_free(g); }
};

class Manifest {
 public:
  Manifest(std::string command, const CLI::App* sub) : command_(std::move(command)) {
    for (const CLI::Option* opt : sub->get_options()) {
      if (opt->count() == 0 || opt->get_name() == "--help") continue;
      std::string v;
      for (const std::string& r : opt->results()) v += (v.empty() ? "" : ",") + r;
      flags_[opt->get_name()] = v;
    }
  }
  void input(const std::string& role, const std::string& path, const std::string& data) {
    inputs_.push_back({{"role", role}, {"path", path}, {"sha256", Sha256(data)}});
  }
  Json json(uint64_t seed, const std::string& payload_digest) const {
    Json j;
    j["command"] = command_;
    j["flags"] = flags_;
    j["inputs"] = inputs_;
    j["seed"] = seed;
    j["library_version"] = gc_version();
    j["payload_sha256"] = payload_digest;
    j["timestamp"] = Timestamp();
    return j;
  }

 private:
  std::string command_;
  Json flags_ = Json::object();
  Json inputs_ = Json::array();
};

GraphHandle LoadGraph(const Options& o, Manifest& m) {
  const std::string edges = ReadFile(o.graph);
  m.input("edges", o.graph, edges);
  std::string attrs;
  if (!o.attributes.empty()) {
    attrs = ReadFile(o.attributes);
    m.input("attributes", o.attributes, attrs);
  }
  gc_graph_options go{o.directed, o.weighted, o.bipartite, o.nodes};
  GraphHandle h;
  Check(gc_graph_parse(edges.c_str(), o.attributes.empty() ? nullptr : attrs.c_str(), &go, &h.g));
  return h;
}

// Tidy rows: table, record, field, value.
struct Row {
  std::string table, record, field, value;
};

bool IsRational(const Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("numer") && j.contains("denom");
}

std::string Scalar(const Json& j) {
  if (IsRational(j)) {
    const std::string n = j["numer"], d = j["denom"];
    return d == "1" ? n : n + "/" + d;
  }
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "";
  return j.dump();
}

std::string RecordName(const Json& e, size_t i) {
  for (const char* k : {"id", "anchor", "statistic", "name", "eigenvalue", "count", "r"})
    if (e.is_object() && e.contains(k) && !IsRational(e[k])) return Scalar(e[k]);
  return std::to_string(i);
}

void FlattenFields(const Json& e, const std::string& prefix, const std::string& table,
                   const std::string& record, std::vector<Row>& rows) {
  if (e.is_object() && !IsRational(e)) {
    for (auto it = e.begin(); it != e.end(); ++it)
      FlattenFields(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(),
                    table, record, rows);
  } else if (e.is_array() && !e.empty() && e[0].is_object()) {
    // Nested records get their own table keyed by both record names.
    for (size_t i = 0; i < e.size(); ++i)
      FlattenFields(e[i], "", table + "." + prefix, record + "/" + RecordName(e[i], i), rows);
  } else {
    rows.push_back({table, record, prefix, e.is_array() ? e.dump() : Scalar(e)});
  }
}

void Flatten(const Json& j, const std::string& table, std::vector<Row>& rows) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    const std::string name = table.empty() ? it.key() : table + "." + it.key();
    if (v.is_array() && !v.empty() && v[0].is_object()) {
      for (size_t i = 0; i < v.size(); ++i)
        FlattenFields(v[i], "", name, RecordName(v[i], i), rows);
    } else if (v.is_object() && !IsRational(v)) {
      Flatten(v, name, rows);
    } else {
      rows.push_back({table.empty() ? "summary" : table, "", it.key(),
                      v.is_array() ? v.dump() : Scalar(v)});
    }
  }
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string Csv(const std::vector<Row>& rows) {
  std::string out = "table,record,field,value\n";
  for (const Row& r : rows)
    out += CsvField(r.table) + "," + CsvField(r.record) + "," + CsvField(r.field) +
           "," + CsvField(r.value) + "\n";
  return out;
}

// One block per table: records down, fields across.
std::string Pretty(const std::vector<Row>& rows) {
  std::ostringstream out;
  std::vector<std::string> tables;
  std::map<std::string, std::vector<const Row*>> by_table;
  for (const Row& r : rows) {
    if (!by_table.count(r.table)) tables.push_back(r.table);
    by_table[r.table].push_back(&r);
  }
  for (const std::string& t : tables) {
    const auto& rs = by_table[t];
    std::vector<std::string> fields, records;
    std::map<std::pair<std::string, std::string>, std::string> cell;
    for (const Row* r : rs) {
      if (std::find(fields.begin(), fields.end(), r->field) == fields.end())
        fields.push_back(r->field);
      if (std::find(records.begin(), records.end(), r->record) == records.end())
        records.push_back(r->record);
      cell[{r->record, r->field}] = r->value;
    }
    out << "== " << t << " ==\n";
    if (records.size() == 1 && records[0].empty()) {
      size_t w = 0;
      for (const auto& f : fields) w = std::max(w, f.size());
      for (const auto& f : fields)
        out << "  " << std::left << std::setw(static_cast<int>(w)) << f << "  "
            << cell[{"", f}] << "\n";
      continue;
    }
    std::vector<size_t> width(fields.size() + 1, 6);
    for (const auto& r : records) width[0] = std::max(width[0], r.size());
    for (size_t i = 0; i < fields.size(); ++i) {
      width[i + 1] = std::max(width[i + 1], fields[i].size());
      for (const auto& r : records) width[i + 1] = std::max(width[i + 1], cell[{r, fields[i]}].size());
    }
    out << "  " << std::left << std::setw(static_cast<int>(width[0])) << "record";
    for (size_t i = 0; i < fields.size(); ++i)
      out << "  " << std::setw(static_cast<int>(width[i + 1])) << fields[i];
    out << "\n";
    for (const auto& r : records) {
      out << "  " << std::setw(static_cast<int>(width[0])) << r;
      for (size_t i = 0; i < fields.size(); ++i)
        out << "  " << std::setw(static_cast<int>(width[i + 1])) << cell[{r, fields[i]}];
      out << "\n";
    }
  }
  return out.str();
}

void Write(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Failure{kData, "cannot write " + o.out};
  f << text;
}

void EmitDocument(const Options& o, const Manifest& m, const std::string& payload) {
  const Json result = Json::parse(payload);
  const std::string canonical = result.dump();
  const Json manifest = m.json(o.seed, Sha256(canonical));
  if (o.csv) {
    std::vector<Row> rows;
    Flatten(manifest, "manifest", rows);
    Flatten(result, "", rows);
    Write(o, Csv(rows));
  } else if (o.pretty) {
    std::vector<Row> rows;
    Flatten(result, "", rows);
    Write(o, Pretty(rows) + "(manifest: " + manifest.dump() + ")\n");
  } else {
    Json doc;
    doc["manifest"] = manifest;
    doc["result"] = result;
    Write(o, doc.dump(2) + "\n");
  }
}

void EmitGraph(const Options& o, const Manifest& m, const gc_graph* g) {
  CString edges, attrs;
  Check(gc_graph_write(g, &edges.p, &attrs.p));
  const std::string text = edges.str();
  const Json manifest = m.json(o.seed, Sha256(text));
  std::string doc = "# gcumulants " + manifest.dump() + "\n";
  doc += "# nodes " + std::to_string(gc_graph_nodes(g)) + "\n" + text;
  if (attrs.p) {
    if (o.attributes_out.empty())
      throw Failure{kUsage, "the generated graph has node labels; pass --attributes-out FILE"};
    std::ofstream f(o.attributes_out, std::ios::binary);
    if (!f) throw Failure{kData, "cannot write " + o.attributes_out};
    f << attrs.str();
  }
  Write(o, doc);
}

void AddGraphInput(CLI::App* s, Options& o) {
  s->add_option("graph", o.graph, "Edge list file ('-' for stdin)")->required();
  s->add_flag("--directed", o.directed, "Edges are ordered pairs");
  s->add_flag("--weighted", o.weighted, "Third column holds a nonnegative weight");
  s->add_option("--attributes", o.attributes, "Node attribute file: 'node<TAB>label'");
  s->add_flag("--bipartite", o.bipartite, "Two node labels; edges join different labels");
  s->add_option("--nodes", o.nodes, "Node count (default: largest id + 1)");
}

void AddCommon(CLI::App* s, Options& o) {
  s->add_option("--threads", o.threads, "Worker threads (0: all cores)")->envname("GC_THREADS");
  s->add_option("--out", o.out, "Write output to this file");
  auto* csv = s->add_flag("--csv", o.csv, "Tidy long-format CSV");
  s->add_flag("--pretty", o.pretty, "Human-readable tables")->excludes(csv);
}

int Main(int argc, char** argv) {
  Options o;
  CLI::App app{"Graph moments, cumulants and exact maximum-entropy models"};
  app.set_version_flag("--version", std::string(gc_version()));
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "Subgraph counts through --order");
  auto* moments = app.add_subcommand("moments", "Graph moments");
  auto* cumulants = app.add_subcommand("cumulants", "Graph cumulants");
  auto* unbiased = app.add_subcommand("unbiased", "Unbiased cumulants and model targets");
  for (auto* s : {count, moments, cumulants, unbiased}) {
    AddGraphInput(s, o);
    s->add_option("--order", o.order, "Largest subgraph edge count")->default_val(3);
    AddCommon(s, o);
  }
  cumulants->add_flag("--scaled", o.scaled, "Add scaled cumulants and signed roots");
  cumulants->add_option("--root-exponent", o.root_exponent,
                        "Exponent of the signed root (default: r)");
  unbiased->add_option("--eta", o.eta, "Unbiasing parameter 1 - n/N, e.g. 1/11");

  auto* ztest = app.add_subcommand("ztest", "Z-test of an unbiased cumulant against zero");
  AddGraphInput(ztest, o);
  AddCommon(ztest, o);
  ztest->add_option("--subgraph", o.subgraph, "Alias or serialized id")->required();
  ztest->add_option("--replicates", o.replicates, "Jackknife replicates for r >= 2");
  ztest->add_option("--delete-fraction", o.delete_fraction, "Share of nodes deleted per replicate");
  ztest->add_option("--seed", o.seed, "Jackknife seed");

  auto* local = app.add_subcommand("local", "Node- or edge-local cumulants");
  AddGraphInput(local, o);
  AddCommon(local, o);
  local->add_option("--order", o.order, "1, 2 or 3")->default_val(3);
  auto* node = local->add_option("--node", o.node, "Anchor node");
  local->add_option("--edge", o.edge, "Anchor edge 'u,v'")->excludes(node);
  local->add_flag("--all", o.all, "Every anchor of --all-kind");
  std::string all_kind = "node";
  local->add_option("--all-kind", all_kind, "node or edge, used with --all")
      ->check(CLI::IsMember({"node", "edge"}));

  auto* ergm = app.add_subcommand("ergm", "Exact ERGMs over all graphs on n nodes");
  ergm->require_subcommand(1);
  auto* fit = ergm->add_subcommand("fit", "Fit parameters to the observed graph");
  auto* dist = ergm->add_subcommand("dist", "Fit, then report statistic distributions");
  for (auto* s : {fit, dist}) {
    AddGraphInput(s, o);
    AddCommon(s, o);
    s->add_option("--order", o.order, "Use every simple class up to this order")->default_val(2);
    s->add_option("--statistics", o.statistics, "Comma-separated statistic aliases");
    s->add_option("--eta", o.eta, "Unbiasing parameter (default 0: observed moments)");
    s->add_flag("--allow-large", o.allow_large, "Permit the 10-node enumeration");
  }
  dist->add_option("--statistic", o.statistic, "Single statistic to report");

  auto* editgraph = app.add_subcommand("editgraph", "Edit-graph Laplacian spectrum");
  editgraph->add_option("--nodes", o.nodes, "Node count (at most 6)")->required();
  editgraph->add_option("--span-order", o.span_order, "Largest r in the span test (-1 skips)");
  AddCommon(editgraph, o);

  auto* generate = app.add_subcommand("generate", "Sample a random graph");
  generate->add_option("--model", o.model, "er, ssbm or bipartite-geometric")
      ->check(CLI::IsMember({"er", "ssbm", "bipartite-geometric"}));
  generate->add_option("--nodes", o.nodes, "Node count")->required();
  generate->add_option("--p", o.p, "ER edge probability");
  generate->add_option("--a", o.a, "SSBM within-community probability");
  generate->add_option("--b", o.b, "SSBM across-community probability");
  generate->add_option("--assortativity", o.assortativity, "SSBM chart: (a - b) / (a + b)");
  generate->add_option("--mean-degree", o.mean_degree, "Expected mean degree");
  generate->add_option("--f", o.f, "Bipartite-geometric clustering parameter in [0, 1)");
  generate->add_option("--seed", o.seed, "Random seed");
  generate->add_option("--attributes-out", o.attributes_out, "Node label output file");
  generate->add_option("--threads", o.threads, "Worker threads")->envname("GC_THREADS");
  generate->add_option("--out", o.out, "Edge list output file");

  auto* shuffle = app.add_subcommand("shuffle", "Feature-shuffling null model");
  AddGraphInput(shuffle, o);
  shuffle->add_option("--mode", o.mode, "attributes, orientations or weights")->required();
  shuffle->add_option("--seed", o.seed, "Random seed");
  shuffle->add_option("--attributes-out", o.attributes_out, "Node label output file");
  shuffle->add_option("--out", o.out, "Edge list output file");

  auto* sum_demo = app.add_subcommand("sum-demo", "Graph-sum additivity demonstration");
  sum_demo->add_option("--order", o.order, "1, 2 or 3")->default_val(3);
  AddCommon(sum_demo, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  std::string name = sub->get_name();
  if (sub == ergm) {
    sub = ergm->get_subcommands().front();
    name = "ergm " + sub->get_name();
  }
  Manifest manifest(name, sub);
  CString out;

  if (sub == count || sub == moments || sub == cumulants || sub == unbiased) {
    GraphHandle g = LoadGraph(o, manifest);
    if (sub == count) Check(gc_count(g.g, o.order, o.threads, &out.p));
    if (sub == moments) Check(gc_moments(g.g, o.order, o.threads, &out.p));
    if (sub == cumulants)
      Check(gc_cumulants(g.g, o.order, o.threads, o.scaled, o.root_exponent, &out.p));
    if (sub == unbiased)
      Check(gc_unbiased(g.g, o.order, o.threads, o.eta.empty() ? nullptr : o.eta.c_str(), &out.p));
  } else if (sub == ztest) {
    GraphHandle g = LoadGraph(o, manifest);
    gc_ztest_options zo{o.subgraph.c_str(), o.replicates, o.delete_fraction, o.seed, o.threads};
    Check(gc_ztest(g.g, &zo, &out.p));
  } else if (sub == local) {
    GraphHandle g = LoadGraph(o, manifest);
    if (!o.edge.empty()) {
      const auto comma = o.edge.find(',');
      if (comma == std::string::npos) throw Failure{kUsage, "--edge expects 'u,v'"};
      int64_t u = 0, v = 0;
      try {
        u = std::stoll(o.edge.substr(0, comma));
        v = std::stoll(o.edge.substr(comma + 1));
      } catch (const std::exception&) {
        throw Failure{kUsage, "--edge expects 'u,v'"};
      }
      Check(gc_local_edge(g.g, u, v, o.order, o.threads, &out.p));
    } else if (o.node >= 0) {
      Check(gc_local_node(g.g, o.node, o.order, o.threads, &out.p));
    } else if (o.all) {
      if (all_kind == "edge")
        Check(gc_local_edge(g.g, -1, -1, o.order, o.threads, &out.p));
      else
        Check(gc_local_node(g.g, -1, o.order, o.threads, &out.p));
    } else {
      throw Failure{kUsage, "give --node, --edge or --all"};
    }
  } else if (sub == fit || sub == dist) {
    GraphHandle g = LoadGraph(o, manifest);
    gc_ergm_options eo{o.order, o.statistics.empty() ? nullptr : o.statistics.c_str(),
                       o.eta.empty() ? nullptr : o.eta.c_str(), o.allow_large, o.threads};
    if (sub == fit)
      Check(gc_ergm_fit(g.g, &eo, &out.p));
    else
      Check(gc_ergm_dist(g.g, &eo, o.statistic.empty() ? nullptr : o.statistic.c_str(), &out.p));
  } else if (sub == editgraph) {
    Check(gc_editgraph(static_cast<int>(std::min<int64_t>(o.nodes, INT32_MAX)), o.span_order, &out.p));
  } else if (sub == generate) {
    GraphHandle g;
    if (o.model == "er") {
      Check(gc_generate_er(o.nodes, o.p, o.seed, o.threads, &g.g));
    } else if (o.model == "ssbm") {
      double a = o.a, b = o.b;
      if (a < 0 || b < 0) {
        if (o.mean_degree < 0)
          throw Failure{kUsage, "ssbm needs --a and --b, or --assortativity and --mean-degree"};
        Check(gc_ssbm_from_chart(o.nodes, o.assortativity, o.mean_degree, &a, &b));
      }
      Check(gc_generate_ssbm(o.nodes, a, b, o.seed, o.threads, &g.g));
    } else {
      if (o.mean_degree < 0) throw Failure{kUsage, "bipartite-geometric needs --mean-degree"};
      Check(gc_generate_bipartite_geometric(o.nodes, o.f, o.mean_degree, o.seed, &g.g));
    }
    EmitGraph(o, manifest, g.g);
    return kOk;
  } else if (sub == shuffle) {
    GraphHandle g = LoadGraph(o, manifest), s;
    Check(gc_shuffle(g.g, o.mode.c_str(), o.seed, &s.g));
    EmitGraph(o, manifest, s.g);
    return kOk;
  } else if (sub == sum_demo) {
    Check(gc_sum_demo(o.order, &out.p));
  }
  EmitDocument(o, manifest, out.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Main(argc, argv);
  } catch (const Failure& f) {
    std::cerr << "gcumulants: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "gcumulants: " << e.what() << "\n";
    return kData;
  }
}
