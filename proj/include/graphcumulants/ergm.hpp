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
#ifndef GRAPHCUMULANTS_ERGM_HPP_
#define GRAPHCUMULANTS_ERGM_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "graphcumulants/base.hpp"
#include "graphcumulants/small_graph.hpp"

namespace gc {

// Statistic columns: the simple-graph classes through third order.
inline constexpr int kErgmColumns = 8;
inline constexpr std::array<std::string_view, kErgmColumns> kErgmStatistics = {
    "edge",  "wedge",      "two-parallel",  "triangle",
    "claw",  "three-path", "wedge-edge",    "three-parallel"};

int ErgmColumn(std::string_view alias);
// Order (edge count) of a column's class.
int ErgmColumnOrder(int column);

// Subgraph counts of a small graph for every statistic column.
std::array<uint32_t, kErgmColumns> SmallGraphStatistics(const SmallGraph& g);

// One row per isomorphism class of simple graphs on n nodes.
struct GraphClassTable {
  int n = 0;
  std::vector<uint64_t> code;          // canonical code
  std::vector<uint64_t> multiplicity;  // n! / |Aut|
  std::vector<std::array<uint32_t, kErgmColumns>> stats;

  size_t size() const { return code.size(); }
};

// Orderly generation by vertex augmentation with canonical deduplication.
// n <= 9 by default; n = 10 needs allow_large and takes minutes.
std::shared_ptr<const GraphClassTable> EnumerateClasses(int n,
                                                        bool allow_large = false,
                                                        int threads = 0);

// #_g of a column on n nodes.
Rational ColumnNormalization(int column, int n);

struct ErgmModel {
  int n = 0;
  std::vector<std::string> statistics;
  std::vector<Rational> target_moments;
  std::vector<double> target_counts;
  // Parameters in moment units (theta = beta * #_g) and count units.
  std::vector<double> theta;
  std::vector<double> beta;
  double log_z = 0;
  std::vector<double> achieved_counts;
  double residual = 0;  // max |achieved - target| / max |target| over counts
  int iterations = 0;
};

struct FitOptions {
  double tolerance = 1e-8;
  int max_iterations = 500;
};

// Maximizes the concave dual beta . t - ln Z(beta) by damped Newton steps.
// Targets on or outside the convex hull of realizable statistics raise
// InfeasibleError naming the separating direction.
ErgmModel FitErgm(const GraphClassTable& table,
                  const std::vector<std::string>& statistics,
                  const std::vector<Rational>& target_moments,
                  const FitOptions& options = {});

// Probability of each class (already multiplied by the multiplicity).
std::vector<long double> ClassProbabilities(const GraphClassTable& table,
                                            const ErgmModel& model);

// Mean and covariance of the model's statistics in moment units.
struct StatisticMoments {
  std::vector<long double> mean;
  std::vector<std::vector<long double>> covariance;
};
StatisticMoments ModelStatisticMoments(const GraphClassTable& table,
                                       const ErgmModel& model);

struct StatHistogram {
  std::string statistic;
  std::vector<uint64_t> support;
  std::vector<double> probability;
  double mean = 0;
  // Filled by DegeneracyDiagnostics.
  std::vector<uint64_t> modes;
  int modality = 0;
  double mean_to_mode = 0;        // in statistic units
  double mean_to_mode_steps = 0;  // in support steps
  bool bimodal = false;
};

StatHistogram ErgmDistribution(const GraphClassTable& table,
                               const ErgmModel& model,
                               std::string_view statistic);

// Local maxima after merging equal-height plateaus; maxima lower than
// relative_floor times the global maximum are ignored.
void DegeneracyDiagnostics(StatHistogram& h, double relative_floor = 0.01);

}  // namespace gc

#endif  // GRAPHCUMULANTS_ERGM_HPP_
