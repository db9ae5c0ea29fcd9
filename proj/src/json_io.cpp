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
#include "graphcumulants/json_io.hpp"

#include <charconv>
#include <cmath>

namespace gc {

Json RationalJson(const Rational& q) {
  return {{"numer", q.get_num().get_str()}, {"denom", q.get_den().get_str()}};
}

Rational RationalFromJson(const Json& j) {
  try {
    Rational q(Integer(j.at("numer").get<std::string>()),
               Integer(j.at("denom").get<std::string>()));
    if (q.get_den() == 0) throw DataError("zero denominator");
    q.canonicalize();
    return q;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw DataError(std::string("malformed rational: ") + e.what());
  }
}

std::string DoubleText(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, p);
}

namespace {

Json Header(const ClassVector& v) {
  Json j;
  j["n"] = v.n;
  j["mode"] = std::string(ModeName(v.universe->spec().mode));
  j["order"] = v.order();
  if (!v.universe->spec().palette.empty()) {
    j["palette"] = v.universe->spec().palette;
    j["label_counts"] = v.color_sizes;
  }
  return j;
}

Json ClassHead(const ClassUniverse& u, int i) {
  const ClassInfo& c = u[i];
  Json e;
  e["id"] = c.id.str();
  e["alias"] = c.id.alias();
  e["r"] = c.id.order();
  e["connected"] = c.connected;
  return e;
}

void Put(Json& e, const char* key, const ClassVector& v, int i) {
  if (v.has(i))
    e[key] = RationalJson(v[i]);
  else
    e[key] = nullptr;
}

}  // namespace

Json CountsJson(const SubgraphCounts& c) {
  Json j;
  j["n"] = c.n;
  j["mode"] = std::string(ModeName(c.universe->spec().mode));
  j["order"] = c.order();
  if (!c.universe->spec().palette.empty()) {
    j["palette"] = c.universe->spec().palette;
    j["label_counts"] = c.color_sizes;
  }
  Json rows = Json::array();
  for (int i = 0; i < c.universe->size(); ++i) {
    Json e = ClassHead(*c.universe, i);
    e["count"] = RationalJson(c[i]);
    rows.push_back(std::move(e));
  }
  j["counts"] = std::move(rows);
  return j;
}

Json MomentsJson(const MomentVector& m) {
  Json j = Header(m);
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json e = ClassHead(*m.universe, i);
    if (m.has(i)) {
      e["numer"] = m[i].get_num().get_str();
      e["denom"] = m[i].get_den().get_str();
    } else {
      e["absent"] = m.reasons[i];
    }
    rows.push_back(std::move(e));
  }
  j["moments"] = std::move(rows);
  return j;
}

Json CumulantsJson(const MomentVector& m, const CumulantVector& k,
                   const ScaledCumulants* scaled, const Clustering* clustering) {
  Json j = Header(m);
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json e = ClassHead(*m.universe, i);
    Put(e, "mu", m, i);
    Put(e, "kappa", k, i);
    if (scaled) {
      Put(e, "kappa_scaled", scaled->scaled, i);
      if (scaled->signed_root[i])
        e["signed_root"] = DoubleText(*scaled->signed_root[i]);
      else
        e["signed_root"] = nullptr;
      e["root_exponent"] = scaled->exponent[i];
    }
    std::string why = !m.has(i) ? m.reasons[i] : !k.has(i) ? k.reasons[i] : "";
    if (scaled && why.empty() && !scaled->scaled.has(i)) why = scaled->scaled.reasons[i];
    if (!why.empty()) e["absent"] = why;
    rows.push_back(std::move(e));
  }
  j["cumulants"] = std::move(rows);
  if (clustering) {
    Json c;
    c["triangle"] = clustering->triangle ? RationalJson(*clustering->triangle) : Json();
    c["square"] = clustering->square ? RationalJson(*clustering->square) : Json();
    j["clustering"] = std::move(c);
  }
  return j;
}

Json UnbiasedJson(const MomentVector& m, const CumulantVector& unbiased,
                  const std::optional<MomentVector>& targets,
                  const std::optional<Rational>& population,
                  const std::optional<Rational>& variance_kappa1) {
  Json j = Header(m);
  if (targets) {
    j["population"] = population ? Json(RationalJson(*population)) : Json("infinite");
  }
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json e = ClassHead(*m.universe, i);
    Put(e, "mu", m, i);
    Put(e, "kappa_check", unbiased, i);
    if (targets) Put(e, "mu_check", *targets, i);
    if (!unbiased.has(i)) e["absent"] = unbiased.reasons[i];
    rows.push_back(std::move(e));
  }
  j["unbiased"] = std::move(rows);
  if (variance_kappa1) j["variance_kappa1"] = RationalJson(*variance_kappa1);
  return j;
}

Json TestResultJson(const TestResult& t) {
  Json j;
  j["id"] = t.id.str();
  j["alias"] = t.id.alias();
  j["kappa_check"] = RationalJson(t.kappa);
  j["variance"] = DoubleText(t.variance);
  j["variance_method"] = t.variance_method;
  j["z"] = DoubleText(t.z);
  j["z2"] = DoubleText(t.z2);
  j["p_value"] = DoubleText(t.p_value);
  j["sign"] = t.sign;
  j["asymptotic_normality"] = t.asymptotic;
  return j;
}

Json LocalJson(const std::vector<LocalReport>& reports) {
  Json rows = Json::array();
  for (const LocalReport& r : reports) {
    Json a;
    a["anchor"] = r.anchor();
    a["kind"] = r.edge_anchor ? "edge" : "node";
    Json entries = Json::array();
    for (const LocalEntry& e : r.entries) {
      Json x;
      x["name"] = e.name;
      x["r"] = e.order;
      x["count"] = e.count.get_str();
      x["normalization"] = e.normalization.get_str();
      x["mu"] = RationalJson(e.moment);
      x["kappa"] = e.cumulant ? RationalJson(*e.cumulant) : Json();
      x["kappa_scaled"] = e.scaled ? RationalJson(*e.scaled) : Json();
      if (!e.reason.empty()) x["absent"] = e.reason;
      entries.push_back(std::move(x));
    }
    a["entries"] = std::move(entries);
    rows.push_back(std::move(a));
  }
  return {{"local", std::move(rows)}};
}

Json ErgmModelJson(const ErgmModel& m) {
  Json j;
  j["n"] = m.n;
  j["statistics"] = m.statistics;
  Json rows = Json::array();
  for (size_t i = 0; i < m.statistics.size(); ++i) {
    Json e;
    e["statistic"] = m.statistics[i];
    e["target_moment"] = RationalJson(m.target_moments[i]);
    e["target_count"] = DoubleText(m.target_counts[i]);
    e["achieved_count"] = DoubleText(m.achieved_counts[i]);
    e["beta"] = DoubleText(m.beta[i]);
    e["theta"] = DoubleText(m.theta[i]);
    rows.push_back(std::move(e));
  }
  j["parameters"] = std::move(rows);
  j["log_z"] = DoubleText(m.log_z);
  j["residual"] = DoubleText(m.residual);
  j["iterations"] = m.iterations;
  return j;
}

Json HistogramJson(const StatHistogram& h) {
  Json j;
  j["statistic"] = h.statistic;
  Json rows = Json::array();
  for (size_t i = 0; i < h.support.size(); ++i)
    rows.push_back({{"count", h.support[i]}, {"probability", DoubleText(h.probability[i])}});
  j["histogram"] = std::move(rows);
  j["mean"] = DoubleText(h.mean);
  j["modes"] = h.modes;
  j["modality"] = h.modality;
  j["mean_to_mode"] = DoubleText(h.mean_to_mode);
  j["mean_to_mode_steps"] = DoubleText(h.mean_to_mode_steps);
  j["bimodal"] = h.bimodal;
  return j;
}

Json EditGraphJson(const EditGraph& h, const Spectrum& s,
                   const NullVectorCheck& null, const std::vector<SpanCheck>& spans) {
  Json j;
  j["n"] = h.n;
  j["classes"] = h.size();
  std::vector<int> out(h.out_degree.begin(), h.out_degree.end());
  j["out_degree"] = out;
  Json lines = Json::array();
  for (const SpectrumLine& l : s.lines)
    lines.push_back({{"eigenvalue", l.eigenvalue},
                     {"laplacian_eigenvalue", 2 * l.eigenvalue},
                     {"multiplicity", l.multiplicity},
                     {"classes_with_that_many_edges", l.predicted}});
  j["spectrum"] = std::move(lines);
  j["integrality_residual"] = DoubleText(s.max_residual);
  j["zero_left_uniform_residual"] = DoubleText(null.left_uniform_residual);
  j["zero_right_multiplicity_residual"] = DoubleText(null.right_multiplicity_residual);
  Json sp = Json::array();
  for (const SpanCheck& c : spans)
    sp.push_back({{"r", c.r},
                  {"eigen_rank", c.eigen_rank},
                  {"count_rank", c.count_rank},
                  {"joint_rank", c.joint_rank},
                  {"equal", c.equal()}});
  j["span_test"] = std::move(sp);
  return j;
}

Json DistributionJson(const GraphDistribution& d) {
  Json rows = Json::array();
  for (const auto& [g, p] : d.support) {
    Json edges = Json::array();
    for (const Edge& e : g.edges())
      edges.push_back({{"u", e.u}, {"v", e.v}, {"w", RationalJson(e.w)}});
    rows.push_back({{"probability", RationalJson(p)}, {"edges", std::move(edges)}});
  }
  return {{"n", d.n}, {"support", std::move(rows)}};
}

Json SumDemoJson(const SumDemo& demo) {
  Json j;
  j["a"] = DistributionJson(demo.a);
  j["b"] = DistributionJson(demo.b);
  j["sum"] = DistributionJson(demo.sum);
  Json rows = Json::array();
  const CumulantVector& s = demo.kappa_sum;
  for (int i = 0; i < s.size(); ++i) {
    Json e = ClassHead(*s.universe, i);
    Put(e, "kappa_a", demo.kappa_a, i);
    Put(e, "kappa_b", demo.kappa_b, i);
    Put(e, "kappa_sum", s, i);
    if (s.has(i) && demo.kappa_a.has(i) && demo.kappa_b.has(i))
      e["additive"] = s[i] == demo.kappa_a[i] + demo.kappa_b[i];
    else
      e["absent"] = s.reasons[i].empty() ? "undefined at this node count" : s.reasons[i];
    rows.push_back(std::move(e));
  }
  j["cumulants"] = std::move(rows);
  return j;
}

}  // namespace gc
