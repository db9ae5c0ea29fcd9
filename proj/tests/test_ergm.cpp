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

#include <cmath>
#include <random>

#include "graphcumulants/ergm.hpp"

namespace gc {
namespace {

TEST(Classes, CountsMatchKnownSequence) {
  const std::vector<size_t> expected = {1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) {
    const auto t = EnumerateClasses(n);
    EXPECT_EQ(t->size(), expected[n - 1]) << n;
    Integer total = 0;
    for (uint64_t m : t->multiplicity) total += m;
    EXPECT_EQ(total, Integer(1) << (n * (n - 1) / 2));
  }
}

TEST(Classes, SizeCap) {
  EXPECT_THROW(EnumerateClasses(10), SizeCapError);
  EXPECT_THROW(EnumerateClasses(11, true), SizeCapError);
}

TEST(Classes, StatisticsOfCompleteGraph) {
  const auto t = EnumerateClasses(6);
  for (size_t i = 0; i < t->size(); ++i) {
    if (t->stats[i][0] != 15) continue;
    for (int c = 0; c < kErgmColumns; ++c)
      EXPECT_EQ(Rational(t->stats[i][c]), ColumnNormalization(c, 6)) << kErgmStatistics[c];
  }
}

TEST(Fit, EdgeOnlyIsLogit) {
  const auto t = EnumerateClasses(6);
  for (Rational p : {Rational(1, 2), Rational(1, 5), Rational(7, 9)}) {
    const ErgmModel m = FitErgm(*t, {"edge"}, {p});
    const double q = p.get_d();
    EXPECT_NEAR(m.beta[0], std::log(q / (1 - q)), 1e-7);
    EXPECT_NEAR(m.theta[0], m.beta[0] * 15, 1e-6);
    EXPECT_LE(m.residual, 1e-8);
  }
}

TEST(Fit, HalfDensityIsUniform) {
  const auto t = EnumerateClasses(5);
  const ErgmModel m = FitErgm(*t, {"edge", "wedge"}, {Rational(1, 2), Rational(1, 4)});
  EXPECT_NEAR(m.beta[0], 0, 1e-9);
  EXPECT_NEAR(m.beta[1], 0, 1e-9);
  // Z is relative to the uniform base measure.
  EXPECT_NEAR(m.log_z, 0, 1e-9);
}

TEST(Fit, ProbabilitiesSumToOne) {
  const auto t = EnumerateClasses(6);
  const ErgmModel m = FitErgm(*t, {"edge", "triangle"}, {Rational(2, 5), Rational(1, 20)});
  long double sum = 0;
  for (long double p : ClassProbabilities(*t, m)) sum += p;
  EXPECT_NEAR(static_cast<double>(sum), 1.0, 1e-12);
}

TEST(Fit, AchievesRandomFeasibleTargets) {
  const auto t = EnumerateClasses(7);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> pd(0.2, 0.8), dd(-0.02, 0.02);
  for (int rep = 0; rep < 5; ++rep) {
    const double p = pd(rng);
    const Rational e(p), w(p * p + dd(rng)), par(p * p + dd(rng));
    const ErgmModel m = FitErgm(*t, {"edge", "wedge", "two-parallel"}, {e, w, par});
    EXPECT_LE(m.residual, 1e-8);
    const StatisticMoments s = ModelStatisticMoments(*t, m);
    EXPECT_NEAR(static_cast<double>(s.mean[0]), e.get_d(), 1e-8);
    EXPECT_NEAR(static_cast<double>(s.mean[1]), w.get_d(), 1e-8);
    EXPECT_NEAR(static_cast<double>(s.mean[2]), par.get_d(), 1e-8);
  }
}

TEST(Fit, OutsideHullIsInfeasible) {
  const auto t = EnumerateClasses(5);
  EXPECT_THROW(FitErgm(*t, {"edge"}, {Rational(3, 2)}), InfeasibleError);
  EXPECT_THROW(FitErgm(*t, {"edge"}, {Rational(1)}), InfeasibleError);
  EXPECT_THROW(FitErgm(*t, {"edge"}, {Rational(0)}), InfeasibleError);
  // Wedge density below what the edge density forces.
  EXPECT_THROW(FitErgm(*t, {"edge", "wedge"}, {Rational(9, 10), Rational(1, 10)}),
               InfeasibleError);
}

TEST(Fit, BoundaryTargetIsInfeasible) {
  // Second-order moments of a triangle with a pendant edge on 4 nodes lie on
  // a face of the hull of realizable statistics.
  const auto t = EnumerateClasses(4);
  EXPECT_THROW(FitErgm(*t, {"edge", "wedge", "two-parallel"},
                       {Rational(4, 6), Rational(5, 12), Rational(1, 3)}),
               InfeasibleError);
}

TEST(Fit, UnknownStatistic) {
  const auto t = EnumerateClasses(4);
  EXPECT_THROW(FitErgm(*t, {"square"}, {Rational(1, 2)}), Error);
}

TEST(Histogram, BinomialIsUnimodal) {
  const auto t = EnumerateClasses(7);
  const ErgmModel m = FitErgm(*t, {"edge"}, {Rational(3, 10)});
  StatHistogram h = ErgmDistribution(*t, m, "edge");
  DegeneracyDiagnostics(h);
  ASSERT_EQ(h.support.size(), 22u);
  // Binomial(21, 0.3): P(k) = C(21, k) 0.3^k 0.7^(21-k).
  for (size_t k = 0; k < h.support.size(); ++k) {
    const double want = std::tgamma(22.0) / (std::tgamma(k + 1.0) * std::tgamma(22.0 - k)) *
                        std::pow(0.3, k) * std::pow(0.7, 21.0 - k);
    EXPECT_NEAR(h.probability[k], want, 1e-9);
  }
  EXPECT_EQ(h.modality, 1);
  EXPECT_FALSE(h.bimodal);
  EXPECT_NEAR(h.mean, 6.3, 1e-7);
  EXPECT_EQ(h.modes, std::vector<uint64_t>{6});
  EXPECT_NEAR(h.mean_to_mode_steps, 0.3, 1e-7);
}

TEST(Histogram, EmptyPlusCompleteIsBimodal) {
  StatHistogram h;
  h.statistic = "edge";
  for (uint64_t k = 0; k <= 10; ++k) {
    h.support.push_back(k);
    h.probability.push_back(k == 0 || k == 10 ? 0.5 : 0.0);
  }
  h.mean = 5;
  DegeneracyDiagnostics(h);
  EXPECT_TRUE(h.bimodal);
  EXPECT_EQ(h.modes, (std::vector<uint64_t>{0, 10}));
  EXPECT_DOUBLE_EQ(h.mean_to_mode_steps, 5);
}

TEST(Histogram, FloorIgnoresTinyBumps) {
  StatHistogram h;
  h.statistic = "edge";
  const std::vector<double> p = {0.001, 0.0005, 0.2, 0.5, 0.2985, 0.0};
  for (size_t k = 0; k < p.size(); ++k) {
    h.support.push_back(k);
    h.probability.push_back(p[k]);
  }
  DegeneracyDiagnostics(h);
  EXPECT_EQ(h.modality, 1);
  DegeneracyDiagnostics(h, 0.0);
  EXPECT_EQ(h.modality, 2);
}

}  // namespace
}  // namespace gc
