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

#ifndef GRAPHCUMULANTS_EDIT_SPECTRUM_HPP_
#define GRAPHCUMULANTS_EDIT_SPECTRUM_HPP_

#include <cstdint>
#include <vector>

namespace gc {

inline constexpr int kMaxEditNodes = 6;

// Classes of simple graphs on n nodes; weight[i][j] counts the node pairs
// whose toggle turns a graph of class i into one of class j.
struct EditGraph {
  int n = 0;
  std::vector<uint64_t> code;
  std::vector<uint64_t> multiplicity;  // labeled graphs per class
  std::vector<int> edges;              // edge count per class
  std::vector<std::vector<int>> weight;
  std::vector<int> out_degree;

  int size() const { return static_cast<int>(code.size()); }
};

EditGraph BuildEditGraph(int n);

struct SpectrumLine {
  int64_t eigenvalue = 0;  // of L / 2; L itself has 2 * eigenvalue
  int multiplicity = 0;
  int predicted = 0;  // classes with exactly that many edges
};

struct Spectrum {
  std::vector<SpectrumLine> lines;
  double max_residual = 0;  // distance of eigenvalues from the integers
};

// Spectrum of (D_out - A^T) / 2, snapped to integers. Throws DataError when
// an eigenvalue is further than 1e-8 from an integer.
Spectrum LaplacianSpectrum(const EditGraph& h);

struct NullVectorCheck {
  double left_uniform_residual = 0;
  double right_multiplicity_residual = 0;
};
NullVectorCheck ZeroEigenvectors(const EditGraph& h);

// Compares the span of left eigenvectors with eigenvalue <= r (of L / 2) against the
// span of the subgraph-count vectors of all subgraphs with <= r edges.
struct SpanCheck {
  int r = 0;
  int eigen_rank = 0;
  int count_rank = 0;
  int joint_rank = 0;
  bool equal() const { return eigen_rank == count_rank && count_rank == joint_rank; }
};
std::vector<SpanCheck> SpanTest(const EditGraph& h, int max_r);

}  // namespace gc

#endif  // GRAPHCUMULANTS_EDIT_SPECTRUM_HPP_
