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
#include "graphcumulants/unbiased.hpp"

#include <cmath>

#include "graphcumulants/parallel.hpp"
#include "graphcumulants/rng.hpp"

namespace gc {

CumulantVector UnbiasedCumulants(const MomentVector& m) {
  const ClassUniverse& u = *m.universe;
  CumulantVector out(m.universe, m.n, m.color_sizes);
  for (int i = 0; i < u.size(); ++i) {
    if (!u[i].connected) {
      out.set(i, 0);
      continue;
    }
    Rational acc = 0;
    std::string missing;
    for (const PartitionTerm& t : u[i].terms) {
      if (t.mobius == 0) continue;
      if (t.disjoint_union < 0) {
        missing = "a disjoint union outside the class table";
        break;
      }
      if (!m.has(t.disjoint_union)) {
        missing = u[t.disjoint_union].id.str() + " (" +
                  m.reasons[t.disjoint_union] + ")";
        break;
      }
      acc += Rational(t.mobius) * m[t.disjoint_union];
    }
    if (missing.empty()) {
      out.set(i, acc);
    } else {
      out.mark_absent(i, "requires the moment of " + missing);
    }
  }
  return out;
}

std::optional<Rational> PopulationSize(const UnbiasingConfig& cfg, int64_t n) {
  std::optional<Rational> N;
  if (cfg.population) {
    N = *cfg.population;
  } else if (cfg.eta) {
    const Rational& eta = *cfg.eta;
    if (eta < 0 || eta > 1) throw UsageError("eta must lie in [0, 1]");
    if (eta == 1) return std::nullopt;
    N = Rational(n) / (1 - eta);
  } else {
    return std::nullopt;
  }
  N->canonicalize();
  if (*N < n)
    throw UsageError("population size N = " + FormatRational(*N) +
                     " is smaller than the observed n = " + std::to_string(n));
  return N;
}

MomentVector PartialUnbiasedMoments(const CumulantVector& unbiased,
                                    const UnbiasingConfig& cfg) {
  const std::optional<Rational> N = PopulationSize(cfg, unbiased.n);
  if (!N) return CumulantsToMoments(unbiased);
  const ClassUniverse& u = *unbiased.universe;
  const UniverseSpec& s = u.spec();
  if (s.order > 2 || s.directed || s.multi || s.bipartite ||
      s.palette_size() != 1)
    throw UsageError(
        "finite-population unbiasing is available for simple graphs through "
        "second order; use eta = 1 otherwise");
  MomentVector out(unbiased.universe, unbiased.n, unbiased.color_sizes);
  const int edge = u.resolve("edge");
  const Rational k1 = unbiased[edge];
  out.set(edge, k1);
  if (s.order == 1) return out;
  const int wedge = u.resolve("wedge"), par = u.resolve("two-parallel");
  const Rational k2 = unbiased[wedge];
  const Rational& n = *N;
  const Rational c1 = n * (n - 1) / 2;
  const Rational cw = n * (n - 1) * (n - 2) / 2;
  const Rational cp = n * (n - 1) * (n - 2) * (n - 3) / 8;
  if (cw + cp == 0)
    throw DataError("second-order targets need a population of at least 3 nodes");
  const Rational tail = (c1 * c1 * k1 * k1 - c1 * k1) / (2 * (cw + cp));
  out.set(wedge, cp / (cw + cp) * k2 + tail);
  out.set(par, -cw / (cw + cp) * k2 + tail);
  return out;
}

MomentVector UnbiasedTargets(const MomentVector& observed) {
  return CumulantsToMoments(UnbiasedCumulants(observed));
}

Rational VarianceKappa1(const MomentVector& t) {
  const ClassUniverse& u = *t.universe;
  if (t.n < 2) throw DataError("the variance needs at least two nodes");
  int edge = -1;
  for (int i = 0; i < u.size(); ++i) {
    if (u[i].id.order() != 1) continue;
    if (edge >= 0)
      throw UsageError("the closed-form variance needs a single edge type");
    edge = i;
  }
  if (u.spec().order < 2)
    throw UsageError("the closed-form variance needs second-order targets");
  const Rational n1 = Normalization(u, edge, t.color_sizes);
  // c_edge^2 expands into copies of every two-unit class.
  Rational second = u.spec().multi ? Rational(0) : n1 * t[edge];
  for (int i = 0; i < u.size(); ++i) {
    if (u[i].id.order() != 2) continue;
    const Rational z = Normalization(u, i, t.color_sizes);
    if (z == 0) continue;
    const bool same_pair = u[i].form.edge_slots() == 1;
    second += (same_pair ? 1 : 2) * z * t[i];
  }
  return second / (n1 * n1) - t[edge] * t[edge];
}

VarianceEstimate JackknifeVariance(const Graph& g, int order, int class_index,
                                   const JackknifeSpec& spec) {
  const int64_t n = g.node_count();
  if (spec.replicates < 2) throw UsageError("the jackknife needs at least 2 replicates");
  if (!(spec.delete_fraction > 0 && spec.delete_fraction < 1))
    throw UsageError("delete fraction must lie in (0, 1)");
  const int64_t d = std::max<int64_t>(
      1, std::llround(spec.delete_fraction * static_cast<double>(n)));
  const int64_t keep = n - d;
  auto universe = GetUniverse(SpecFor(g, order));
  const ClassInfo& target = (*universe)[class_index];
  if (keep < target.form.n)
    throw DataError("subsamples of " + std::to_string(keep) +
                    " nodes cannot host " + target.id.str());
  VarianceEstimate out;
  out.method = "delete-d jackknife (approximate)";
  out.replicate_values.assign(spec.replicates, 0);
  ParallelChunks(spec.replicates, ResolveThreads(spec.threads),
                 [&](int, int64_t b, int64_t e) {
    std::vector<int> nodes(n);
    for (int64_t r = b; r < e; ++r) {
      CounterRng rng(spec.seed, static_cast<uint64_t>(r));
      for (int64_t v = 0; v < n; ++v) nodes[v] = static_cast<int>(v);
      for (int64_t i = 0; i < keep; ++i) {
        const int64_t j = i + static_cast<int64_t>(rng.below(n - i));
        std::swap(nodes[i], nodes[j]);
      }
      std::vector<int> chosen(nodes.begin(), nodes.begin() + keep);
      std::sort(chosen.begin(), chosen.end());
      const Graph sub = g.induced(chosen);
      const MomentVector m = ComputeMoments(sub, order, {1});
      const CumulantVector k = UnbiasedCumulants(m);
      const auto idx = k.universe->find(target.id);
      out.replicate_values[r] = idx && k.has(*idx) ? k[*idx].get_d() : NAN;
    }
  });
  double mean = 0;
  for (double v : out.replicate_values) {
    if (std::isnan(v)) throw DataError("a jackknife replicate was undefined");
    mean += v;
  }
  mean /= spec.replicates;
  double ss = 0;
  for (double v : out.replicate_values) ss += (v - mean) * (v - mean);
  out.variance = static_cast<double>(keep) /
                 (static_cast<double>(d) * spec.replicates) * ss;
  return out;
}

TestResult ZTest(const SubgraphId& id, const Rational& kappa, double variance,
                 std::string variance_method) {
  if (!(variance > 0)) throw DataError("the variance must be positive");
  TestResult t;
  t.id = id;
  t.kappa = kappa;
  t.variance = variance;
  const double k = kappa.get_d();
  t.z = k / std::sqrt(variance);
  t.z2 = k * k / variance;
  t.p_value = std::erfc(std::fabs(t.z) / std::sqrt(2.0));
  t.sign = Sign(kappa);
  t.variance_method = std::move(variance_method);
  return t;
}

WelchResult WelchCompare(double kappa_a, double var_a, double kappa_b,
                         double var_b) {
  if (!(var_a + var_b > 0)) throw DataError("the variances must be positive");
  WelchResult w;
  w.t = (kappa_a - kappa_b) / std::sqrt(var_a + var_b);
  w.p_value = std::erfc(std::fabs(w.t) / std::sqrt(2.0));
  return w;
}

}  // namespace gc
