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
#ifndef GRAPHCUMULANTS_CUMULANTS_HPP_
#define GRAPHCUMULANTS_CUMULANTS_HPP_

#include <optional>
#include <vector>

#include "graphcumulants/moments.hpp"

namespace gc {

// coefficient * product of the values of the parts.
struct ExpansionTerm {
  Integer coefficient;
  std::vector<int> parts;  // sorted class indices
};

// Moment of class i as a sum over partitions of its edges into induced
// parts: mu_g = sum multiplicity * prod kappa_part. Multiplicities add up to
// the Bell number of the order.
std::vector<ExpansionTerm> EdgePartitions(const ClassUniverse& u, int i);

// The inverse: kappa_g = sum coefficient * prod mu_part.
std::vector<ExpansionTerm> CumulantInMoments(const ClassUniverse& u, int i);

CumulantVector MomentsToCumulants(const MomentVector& m);
MomentVector CumulantsToMoments(const CumulantVector& k);

struct ScaledCumulants {
  ClassVector scaled;
  std::vector<std::optional<double>> signed_root;
  std::vector<double> exponent;
};

// kappa_g divided by the product, over the edges of g, of the first-order
// cumulant of that edge's type (kappa_edge^r for single-typed graphs).
// The signed root uses exponent r unless root_exponent is given.
ScaledCumulants ScaleCumulants(const CumulantVector& k,
                               std::optional<double> root_exponent = {});

// sign(x) |x|^(1/exponent).
double SignedRoot(const Rational& x, double exponent);

struct Clustering {
  std::optional<Rational> triangle;  // mu_triangle / mu_wedge
  std::optional<Rational> square;    // mu_square / mu_three-path
};

// Coefficients are absent when the classes are missing or the denominator
// vanishes. Attributed and bipartite universes pool the colored classes.
Clustering ClusteringCoefficients(const MomentVector& m);

}  // namespace gc

#endif  // GRAPHCUMULANTS_CUMULANTS_HPP_
