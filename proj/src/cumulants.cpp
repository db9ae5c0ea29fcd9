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
#include "graphcumulants/cumulants.hpp"

#include <cmath>

namespace gc {

std::vector<ExpansionTerm> EdgePartitions(const ClassUniverse& u, int i) {
  std::vector<ExpansionTerm> out;
  for (const PartitionTerm& t : u[i].terms)
    out.push_back({t.multiplicity, t.parts});
  return out;
}

std::vector<ExpansionTerm> CumulantInMoments(const ClassUniverse& u, int i) {
  std::vector<ExpansionTerm> out;
  for (const PartitionTerm& t : u[i].terms)
    if (t.mobius != 0) out.push_back({t.mobius, t.parts});
  return out;
}

namespace {

// Evaluates sum coef * prod in[part] for every class; absent inputs make the
// output absent.
ClassVector Transform(const ClassVector& in, bool to_cumulants) {
  const ClassUniverse& u = *in.universe;
  ClassVector out(in.universe, in.n, in.color_sizes);
  for (int i = 0; i < u.size(); ++i) {
    Rational acc = 0;
    std::string missing;
    for (const PartitionTerm& t : u[i].terms) {
      const Integer& coef = to_cumulants ? t.mobius : t.multiplicity;
      if (coef == 0) continue;
      Rational prod = Rational(coef);
      for (int p : t.parts) {
        if (!in.has(p)) {
          missing = u[p].id.str();
          break;
        }
        prod *= *in.values[p];
      }
      if (!missing.empty()) break;
      acc += prod;
    }
    if (missing.empty()) {
      out.set(i, acc);
    } else {
      out.mark_absent(i, "requires " + missing + ", which is unavailable");
    }
  }
  return out;
}

}  // namespace

CumulantVector MomentsToCumulants(const MomentVector& m) {
  return Transform(m, true);
}

MomentVector CumulantsToMoments(const CumulantVector& k) {
  return Transform(k, false);
}

double SignedRoot(const Rational& x, double exponent) {
  const double v = x.get_d();
  const double r = std::pow(std::fabs(v), 1.0 / exponent);
  return v < 0 ? -r : r;
}

ScaledCumulants ScaleCumulants(const CumulantVector& k,
                               std::optional<double> root_exponent) {
  const ClassUniverse& u = *k.universe;
  ScaledCumulants out{ClassVector(k.universe, k.n, k.color_sizes), {}, {}};
  out.signed_root.resize(u.size());
  out.exponent.resize(u.size());
  for (int i = 0; i < u.size(); ++i) {
    const Pattern& f = u[i].form;
    out.exponent[i] = root_exponent.value_or(u[i].id.order());
    if (!k.has(i)) {
      out.scaled.mark_absent(i, k.reasons[i]);
      continue;
    }
    Rational scale = 1;
    std::string problem;
    for (int a = 0; a < f.n && problem.empty(); ++a)
      for (int b = f.directed ? 0 : a + 1; b < f.n && problem.empty(); ++b) {
        const uint8_t m = f.at(a, b);
        if (!m) continue;
        const std::pair<int, int> e[1] = {{0, 1}};
        const uint8_t cols[2] = {f.color[a], f.color[b]};
        const int edge = u.classify(Pattern::FromEdges(2, f.directed, e, cols));
        if (!k.has(edge) || k[edge] == 0) {
          problem = "first-order cumulant of " + u[edge].id.str() +
                    " is zero or unavailable";
          break;
        }
        scale *= Pow(k[edge], m);
      }
    if (!problem.empty()) {
      out.scaled.mark_absent(i, problem);
      continue;
    }
    out.scaled.set(i, k[i] / scale);
    out.signed_root[i] = SignedRoot(*out.scaled.values[i], out.exponent[i]);
  }
  return out;
}

namespace {

// Sum of moments times normalizations over all classes with a given shape,
// so colored variants pool into one uncolored moment.
std::optional<std::pair<Rational, Rational>> Pooled(const MomentVector& m,
                                                    std::string_view shape) {
  const ClassUniverse& u = *m.universe;
  Pattern target;
  try {
    target = NamedPattern(Mode::kSimple, shape);
  } catch (const Error&) {
    return std::nullopt;
  }
  const std::string code = Canonicalize(target).code;
  Rational count = 0, norm = 0;
  bool any = false;
  for (int i = 0; i < u.size(); ++i) {
    Pattern p = u[i].form;
    if (p.directed) return std::nullopt;
    std::fill(p.color.begin(), p.color.end(), 0);
    if (Canonicalize(p).code != code) continue;
    const Rational z = Normalization(u, i, m.color_sizes);
    if (z == 0) continue;
    if (!m.has(i)) return std::nullopt;
    count += m[i] * z;
    norm += z;
    any = true;
  }
  if (!any) return std::nullopt;
  return std::pair(count, norm);
}

std::optional<Rational> Ratio(const MomentVector& m, std::string_view num,
                              std::string_view den) {
  auto a = Pooled(m, num), b = Pooled(m, den);
  if (!a || !b || b->first == 0 || a->second == 0) return std::nullopt;
  return (a->first / a->second) / (b->first / b->second);
}

}  // namespace

Clustering ClusteringCoefficients(const MomentVector& m) {
  Clustering c;
  c.triangle = Ratio(m, "triangle", "wedge");
  c.square = Ratio(m, "square", "three-path");
  return c;
}

}  // namespace gc
