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
#ifndef GRAPHCUMULANTS_MOMENTS_HPP_
#define GRAPHCUMULANTS_MOMENTS_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphcumulants/motif_count.hpp"
#include "graphcumulants/universe.hpp"

namespace gc {

// Exact values over a class universe. Entries may be absent (with a reason),
// e.g. moments of classes that do not fit into n nodes.
struct ClassVector {
  std::shared_ptr<const ClassUniverse> universe;
  int64_t n = 0;
  std::vector<int64_t> color_sizes;
  std::vector<std::optional<Rational>> values;
  std::vector<std::string> reasons;

  ClassVector() = default;
  ClassVector(std::shared_ptr<const ClassUniverse> u, int64_t nodes,
              std::vector<int64_t> sizes);

  int size() const { return static_cast<int>(values.size()); }
  int order() const { return universe->spec().order; }
  bool has(int i) const { return values[i].has_value(); }
  // Throws DataError carrying the absence reason.
  const Rational& operator[](int i) const;
  const Rational& at(std::string_view name) const {
    return (*this)[universe->resolve(name)];
  }
  void set(int i, Rational v) {
    values[i] = std::move(v);
    reasons[i].clear();
  }
  void mark_absent(int i, std::string reason) {
    values[i].reset();
    reasons[i] = std::move(reason);
  }
};

using MomentVector = ClassVector;
using CumulantVector = ClassVector;

// #_g for class i of the universe on a host with the given color sizes.
Rational Normalization(const ClassUniverse& u, int i,
                       std::span<const int64_t> color_sizes);

MomentVector MomentsFromCounts(const SubgraphCounts& counts);

MomentVector ComputeMoments(const Graph& g, int order,
                            const CountOptions& options = {});

// Distribution-level moments of ER(n, p): every class has moment p^r.
MomentVector ErMoments(const UniverseSpec& spec, int64_t n, const Rational& p);

}  // namespace gc

#endif  // GRAPHCUMULANTS_MOMENTS_HPP_
