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

#ifndef GRAPHCUMULANTS_JSON_IO_HPP_
#define GRAPHCUMULANTS_JSON_IO_HPP_

#include <optional>
#include <vector>

#include <json.hpp>

#include "graphcumulants/cumulants.hpp"
#include "graphcumulants/edit_spectrum.hpp"
#include "graphcumulants/ergm.hpp"
#include "graphcumulants/graph_sum.hpp"
#include "graphcumulants/local.hpp"
#include "graphcumulants/unbiased.hpp"

namespace gc {

// Key order is insertion order so documents serialize deterministically.
using Json = nlohmann::ordered_json;

// {"numer": "...", "denom": "..."}
Json RationalJson(const Rational& q);
Rational RationalFromJson(const Json& j);
// Shortest round-trip decimal text.
std::string DoubleText(double x);

Json CountsJson(const SubgraphCounts& c);
Json MomentsJson(const MomentVector& m);
// Moments alongside cumulants; scaled values when given.
Json CumulantsJson(const MomentVector& m, const CumulantVector& k,
                   const ScaledCumulants* scaled, const Clustering* clustering);
Json UnbiasedJson(const MomentVector& m, const CumulantVector& unbiased,
                  const std::optional<MomentVector>& targets,
                  const std::optional<Rational>& population,
                  const std::optional<Rational>& variance_kappa1);
Json TestResultJson(const TestResult& t);
Json LocalJson(const std::vector<LocalReport>& reports);
Json ErgmModelJson(const ErgmModel& m);
Json HistogramJson(const StatHistogram& h);
Json EditGraphJson(const EditGraph& h, const Spectrum& s,
                   const NullVectorCheck& null, const std::vector<SpanCheck>& spans);
Json DistributionJson(const GraphDistribution& d);
Json SumDemoJson(const SumDemo& demo);

}  // namespace gc

#endif  // GRAPHCUMULANTS_JSON_IO_HPP_
