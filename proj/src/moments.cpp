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
#include "graphcumulants/moments.hpp"

namespace gc {

ClassVector::ClassVector(std::shared_ptr<const ClassUniverse> u, int64_t nodes,
                         std::vector<int64_t> sizes)
    : universe(std::move(u)), n(nodes), color_sizes(std::move(sizes)) {
  values.resize(universe->size());
  reasons.assign(universe->size(), "not computed");
}

const Rational& ClassVector::operator[](int i) const {
  if (!values[i])
    throw DataError("value for " + (*universe)[i].id.str() +
                    " is unavailable: " + reasons[i]);
  return *values[i];
}

Rational Normalization(const ClassUniverse& u, int i,
                       std::span<const int64_t> color_sizes) {
  return CompleteCount(u[i].id, color_sizes);
}

MomentVector MomentsFromCounts(const SubgraphCounts& counts) {
  MomentVector m(counts.universe, counts.n, counts.color_sizes);
  const ClassUniverse& u = *counts.universe;
  for (int i = 0; i < u.size(); ++i) {
    if (!u[i].connected && !counts.disconnected_derived) {
      m.mark_absent(i, "disconnected counts were not derived");
      continue;
    }
    const Rational norm = Normalization(u, i, counts.color_sizes);
    if (norm == 0) {
      m.mark_absent(i, "the class needs more nodes than the graph provides");
      continue;
    }
    m.set(i, counts.counts[i] / norm);
  }
  return m;
}

MomentVector ComputeMoments(const Graph& g, int order,
                            const CountOptions& options) {
  return MomentsFromCounts(CountSubgraphs(g, order, options));
}

MomentVector ErMoments(const UniverseSpec& spec, int64_t n, const Rational& p) {
  auto u = GetUniverse(spec);
  std::vector<int64_t> sizes(spec.palette_size(), 0);
  sizes[0] = n;
  MomentVector m(u, n, sizes);
  for (int i = 0; i < u->size(); ++i) m.set(i, Pow(p, (*u)[i].id.order()));
  return m;
}

}  // namespace gc
