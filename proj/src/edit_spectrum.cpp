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
#include "graphcumulants/edit_spectrum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "graphcumulants/ergm.hpp"
#include "graphcumulants/motif_count.hpp"

namespace gc {

EditGraph BuildEditGraph(int n) {
  if (n < 1) throw UsageError("the node count must be positive");
  if (n > kMaxEditNodes)
    throw SizeCapError("edit graphs support at most " +
                       std::to_string(kMaxEditNodes) + " nodes");
  auto table = EnumerateClasses(n);
  EditGraph h;
  h.n = n;
  h.code = table->code;
  h.multiplicity = table->multiplicity;
  std::unordered_map<uint64_t, int> index;
  for (int i = 0; i < h.size(); ++i) {
    index[h.code[i]] = i;
    h.edges.push_back(static_cast<int>(table->stats[i][0]));
  }
  h.weight.assign(h.size(), std::vector<int>(h.size(), 0));
  h.out_degree.assign(h.size(), 0);
  for (int i = 0; i < h.size(); ++i) {
    const SmallGraph g = SmallGraph::FromCode(n, h.code[i]);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        SmallGraph t = g;
        t.toggle(u, v);
        ++h.weight[i][index.at(CanonicalizeSmall(t).code)];
        ++h.out_degree[i];
      }
  }
  return h;
}

namespace {

Eigen::MatrixXd Laplacian(const EditGraph& h) {
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(h.size(), h.size());
  for (int i = 0; i < h.size(); ++i) {
    l(i, i) += h.out_degree[i];
    for (int j = 0; j < h.size(); ++j) l(j, i) -= h.weight[i][j];
  }
  return l;
}

int Rank(const Eigen::MatrixXd& m) {
  if (m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  const double tol = 1e-8 * std::max(1.0, s.size() ? s[0] : 0.0);
  return static_cast<int>((s.array() > tol).count());
}

}  // namespace

Spectrum LaplacianSpectrum(const EditGraph& h) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(Laplacian(h), false);
  if (es.info() != Eigen::Success) throw DataError("eigensolver failed");
  Spectrum s;
  std::map<int64_t, int> count;
  // Toggling a pair is an involution, so L has eigenvalues 2r; the
  // reported spectrum is that of L / 2.
  for (const auto& z : es.eigenvalues()) {
    const double half = z.real() / 2;
    const double snapped = std::round(half);
    s.max_residual = std::max({s.max_residual, std::fabs(half - snapped),
                               std::fabs(z.imag())});
    ++count[static_cast<int64_t>(snapped)];
  }
  if (s.max_residual >= 1e-8)
    throw DataError("edit-graph Laplacian has a non-integer eigenvalue (residual " +
                    std::to_string(s.max_residual) + ")");
  std::map<int64_t, int> predicted;
  for (int e : h.edges) ++predicted[e];
  for (const auto& [v, m] : count) s.lines.push_back({v, m, predicted[v]});
  for (const auto& [v, m] : predicted)
    if (!count.count(v)) s.lines.push_back({v, 0, m});
  std::sort(s.lines.begin(), s.lines.end(),
            [](const SpectrumLine& a, const SpectrumLine& b) {
              return a.eigenvalue < b.eigenvalue;
            });
  return s;
}

NullVectorCheck ZeroEigenvectors(const EditGraph& h) {
  const Eigen::MatrixXd l = Laplacian(h);
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(h.size());
  Eigen::VectorXd mult(h.size());
  for (int i = 0; i < h.size(); ++i) mult[i] = static_cast<double>(h.multiplicity[i]);
  mult /= mult.sum();
  ones /= std::sqrt(static_cast<double>(h.size()));
  return {(l.transpose() * ones).cwiseAbs().maxCoeff(),
          (l * mult).cwiseAbs().maxCoeff()};
}

std::vector<SpanCheck> SpanTest(const EditGraph& h, int max_r) {
  if (max_r < 0 || max_r > 6) throw UsageError("span test order must be in [0, 6]");
  const int k = h.size();
  // Left eigenvectors of L are eigenvectors of L^T.
  Eigen::EigenSolver<Eigen::MatrixXd> es(Laplacian(h).transpose(), true);
  if (es.info() != Eigen::Success) throw DataError("eigensolver failed");

  // counts(i, g): copies of subgraph g in a graph of class i.
  std::vector<std::vector<Rational>> counts(k);
  std::vector<int> class_edges;
  for (int i = 0; i < k; ++i) {
    const SmallGraph g = SmallGraph::FromCode(h.n, h.code[i]);
    std::vector<Edge> edges;
    for (int u = 0; u < h.n; ++u)
      for (int v = u + 1; v < h.n; ++v)
        if (g.has(u, v)) edges.push_back({u, v, 1});
    if (max_r == 0) continue;
    const SubgraphCounts c = CountSubgraphs(Graph(h.n, edges, {}), max_r);
    counts[i] = c.counts;
    if (class_edges.empty())
      for (const ClassInfo& info : c.universe->classes())
        class_edges.push_back(info.id.order());
  }

  const Eigen::MatrixXcd vectors = es.eigenvectors();
  std::vector<SpanCheck> out;
  for (int r = 0; r <= max_r; ++r) {
    std::vector<Eigen::VectorXd> eig, cnt;
    for (int j = 0; j < k; ++j) {
      const auto lambda = es.eigenvalues()[j];
      if (std::round(lambda.real() / 2) <= r) {
        const Eigen::VectorXcd v = vectors.col(j);
        // Real eigenvalues carry eigenvectors with a common complex phase.
        Eigen::Index p;
        v.cwiseAbs().maxCoeff(&p);
        eig.push_back((v / v[p]).real());
      }
    }
    cnt.push_back(Eigen::VectorXd::Ones(k));
    for (size_t g = 0; g < class_edges.size(); ++g) {
      if (class_edges[g] > r) continue;
      Eigen::VectorXd col(k);
      for (int i = 0; i < k; ++i) col[i] = counts[i][g].get_d();
      cnt.push_back(col);
    }
    auto stack = [k](const std::vector<Eigen::VectorXd>& a,
                     const std::vector<Eigen::VectorXd>& b) {
      Eigen::MatrixXd m(k, a.size() + b.size());
      for (size_t j = 0; j < a.size(); ++j) m.col(j) = a[j];
      for (size_t j = 0; j < b.size(); ++j) m.col(a.size() + j) = b[j];
      return m;
    };
    SpanCheck c;
    c.r = r;
    c.eigen_rank = Rank(stack(eig, {}));
    c.count_rank = Rank(stack(cnt, {}));
    c.joint_rank = Rank(stack(eig, cnt));
    out.push_back(c);
  }
  return out;
}

}  // namespace gc
