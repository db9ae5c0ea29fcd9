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
#ifndef GRAPHCUMULANTS_UNBIASED_HPP_
#define GRAPHCUMULANTS_UNBIASED_HPP_

#include <optional>
#include <string>
#include <vector>

#include "graphcumulants/cumulants.hpp"

namespace gc {

// Unbiased estimators: every product of moments in the cumulant expansion is
// replaced by the moment of the disjoint union of its parts. Disconnected
// classes get exactly zero.
CumulantVector UnbiasedCumulants(const MomentVector& m);

// Size N of the population the observed n nodes are drawn from;
// eta = 1 - n/N. Leave both unset (or eta = 1) for N = infinity.
struct UnbiasingConfig {
  std::optional<Rational> eta;
  std::optional<Rational> population;
};

// Population size, or nullopt for N = infinity. Requires N >= n.
std::optional<Rational> PopulationSize(const UnbiasingConfig& cfg, int64_t n);

// Moment targets for a model of the population. N = infinity works at any
// order in any mode; finite N uses the closed forms through second order for
// simple graphs. N = n returns the observed moments.
MomentVector PartialUnbiasedMoments(const CumulantVector& unbiased,
                                    const UnbiasingConfig& cfg);

// Var(kappa-check of the edge) from first- and second-order moment targets.
Rational VarianceKappa1(const MomentVector& targets);

// Fully unbiased targets (N = infinity) of an observed graph's moments.
MomentVector UnbiasedTargets(const MomentVector& observed);

struct JackknifeSpec {
  int replicates = 200;
  double delete_fraction = 0.5;
  uint64_t seed = 1;
  int threads = 0;
};

struct VarianceEstimate {
  double variance = 0;
  std::string method;  // "closed-form" or "delete-d jackknife (approximate)"
  std::vector<double> replicate_values;
};

// Delete-d jackknife over random node subsets: each replicate keeps n - d
// nodes and recomputes the unbiased cumulant of the class.
VarianceEstimate JackknifeVariance(const Graph& g, int order, int class_index,
                                   const JackknifeSpec& spec);

struct TestResult {
  SubgraphId id;
  Rational kappa;
  double variance = 0;
  double z2 = 0;
  double z = 0;
  double p_value = 1;
  int sign = 0;
  std::string variance_method;
  // Normality of the estimator is asymptotic in n.
  bool asymptotic = true;
};

TestResult ZTest(const SubgraphId& id, const Rational& kappa, double variance,
                 std::string variance_method);

struct WelchResult {
  double t = 0;
  double p_value = 1;
  bool heuristic = true;
};

// Two-sample comparison of unbiased cumulants with estimated variances.
WelchResult WelchCompare(double kappa_a, double var_a, double kappa_b,
                         double var_b);

}  // namespace gc

#endif  // GRAPHCUMULANTS_UNBIASED_HPP_
