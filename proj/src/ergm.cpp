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
#include "graphcumulants/ergm.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "graphcumulants/parallel.hpp"
#include "graphcumulants/pattern.hpp"

namespace gc {

int ErgmColumn(std::string_view alias) {
  for (int i = 0; i < kErgmColumns; ++i)
    if (kErgmStatistics[i] == alias) return i;
  throw UsageError("unknown ERGM statistic '" + std::string(alias) +
                   "'; choose from the simple classes through third order");
}

int ErgmColumnOrder(int column) { return column == 0 ? 1 : column < 3 ? 2 : 3; }

std::array<uint32_t, kErgmColumns> SmallGraphStatistics(const SmallGraph& g) {
  int64_t e = 0, wedge = 0, claw = 0, tri = 0, path = 0;
  for (int v = 0; v < g.n; ++v) {
    const int64_t d = g.degree(v);
    e += d;
    wedge += d * (d - 1) / 2;
    claw += d * (d - 1) * (d - 2) / 6;
  }
  e /= 2;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      if (!g.has(u, v)) continue;
      path += static_cast<int64_t>(g.degree(u) - 1) * (g.degree(v) - 1);
      tri += std::popcount(static_cast<uint16_t>(g.adj[u] & g.adj[v] &
                                                 ~((1u << (v + 1)) - 1)));
    }
  path -= 3 * tri;
  const int64_t par = e * (e - 1) / 2 - wedge;
  const int64_t wedge_edge = e * wedge - 2 * wedge - 3 * tri - 3 * claw - 2 * path;
  const int64_t three_par =
      e * (e - 1) * (e - 2) / 6 - tri - claw - path - wedge_edge;
  return {static_cast<uint32_t>(e),        static_cast<uint32_t>(wedge),
          static_cast<uint32_t>(par),      static_cast<uint32_t>(tri),
          static_cast<uint32_t>(claw),     static_cast<uint32_t>(path),
          static_cast<uint32_t>(wedge_edge), static_cast<uint32_t>(three_par)};
}

namespace {

std::shared_ptr<GraphClassTable> Build(int n, int threads) {
  std::vector<std::pair<uint64_t, uint64_t>> level{{0, 1}};  // (code, aut)
  for (int k = 1; k < n; ++k) {
    const int workers = static_cast<int>(
        std::max<int64_t>(1, std::min<int64_t>(threads, level.size())));
    std::vector<std::unordered_map<uint64_t, uint64_t>> found(workers);
    ParallelChunks(static_cast<int64_t>(level.size()), workers,
                   [&](int t, int64_t b, int64_t e) {
      for (int64_t i = b; i < e; ++i) {
        const SmallGraph parent = SmallGraph::FromCode(k, level[i].first);
        for (uint32_t s = 0; s < (1u << k); ++s) {
          SmallGraph child = parent;
          child.n = k + 1;
          for (int v = 0; v < k; ++v)
            if (s >> v & 1) child.add(v, k);
          const SmallCanonical c = CanonicalizeSmall(child);
          found[t].emplace(c.code, c.automorphisms);
        }
      }
    });
    for (int t = 1; t < workers; ++t) {
      found[0].insert(found[t].begin(), found[t].end());
      found[t].clear();
    }
    level.assign(found[0].begin(), found[0].end());
    std::sort(level.begin(), level.end());
  }
  auto table = std::make_shared<GraphClassTable>();
  table->n = n;
  uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= static_cast<uint64_t>(i);
  for (const auto& [code, aut] : level) {
    table->code.push_back(code);
    table->multiplicity.push_back(fact / aut);
    table->stats.push_back(SmallGraphStatistics(SmallGraph::FromCode(n, code)));
  }
  return table;
}

}  // namespace

std::shared_ptr<const GraphClassTable> EnumerateClasses(int n, bool allow_large,
                                                        int threads) {
  if (n < 1) throw UsageError("the node count must be positive");
  if (n > 10) throw SizeCapError("exact enumeration supports at most 10 nodes");
  if (n == 10 && !allow_large)
    throw SizeCapError(
        "10-node enumeration (12,005,168 classes) needs --allow-large");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const GraphClassTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  auto table = Build(n, ResolveThreads(threads));
  cache[n] = table;
  return table;
}

Rational ColumnNormalization(int column, int n) {
  const Pattern p = NamedPattern(Mode::kSimple, kErgmStatistics[column]);
  return CompleteCount(CanonicalSubgraphId(p, Mode::kSimple), n);
}

namespace {

using Real = long double;
using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

struct Problem {
  const GraphClassTable& table;
  std::vector<int> cols;
  std::vector<Real> norm;
  std::vector<Real> base;  // ln multiplicity - C(n,2) ln 2

  Problem(const GraphClassTable& t, const std::vector<std::string>& stats)
      : table(t) {
    for (const auto& s : stats) {
      const int c = ErgmColumn(s);
      if (std::find(cols.begin(), cols.end(), c) != cols.end())
        throw UsageError("statistic '" + s + "' listed twice");
      const Rational z = ColumnNormalization(c, t.n);
      if (z == 0)
        throw UsageError("statistic '" + s + "' does not fit into " +
                         std::to_string(t.n) + " nodes");
      cols.push_back(c);
      norm.push_back(static_cast<Real>(z.get_d()));
    }
    const Real pairs = static_cast<Real>(t.n) * (t.n - 1) / 2;
    for (uint64_t m : t.multiplicity)
      base.push_back(std::log(static_cast<Real>(m)) - pairs * std::log(2.0L));
  }

  size_t k() const { return cols.size(); }
  Real x(size_t row, size_t j) const {
    return static_cast<Real>(table.stats[row][cols[j]]) / norm[j];
  }

  // Log weights and their log-sum-exp.
  Real LogWeights(const Vec& theta, std::vector<Real>& w) const {
    w.resize(table.size());
    Real top = -INFINITY;
    for (size_t i = 0; i < table.size(); ++i) {
      Real s = base[i];
      for (size_t j = 0; j < k(); ++j) s += theta[j] * x(i, j);
      w[i] = s;
      top = std::max(top, s);
    }
    Real sum = 0, comp = 0;  // Kahan summation
    for (Real v : w) {
      const Real y = std::exp(v - top) - comp;
      const Real t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    return top + std::log(sum);
  }

  void Moments(const Vec& theta, Real& log_z, Vec& mean, Mat& cov) const {
    std::vector<Real> w;
    log_z = LogWeights(theta, w);
    mean = Vec::Zero(k());
    Mat second = Mat::Zero(k(), k());
    for (size_t i = 0; i < table.size(); ++i) {
      const Real p = std::exp(w[i] - log_z);
      for (size_t a = 0; a < k(); ++a) {
        const Real xa = x(i, a);
        mean[a] += p * xa;
        for (size_t b = 0; b <= a; ++b) second(a, b) += p * xa * x(i, b);
      }
    }
    cov = Mat(k(), k());
    for (size_t a = 0; a < k(); ++a)
      for (size_t b = 0; b <= a; ++b)
        cov(a, b) = cov(b, a) = second(a, b) - mean[a] * mean[b];
  }
};

std::string DirectionText(const std::vector<std::string>& stats, const Vec& u) {
  std::string s;
  for (size_t j = 0; j < stats.size(); ++j) {
    if (j) s += ", ";
    s += stats[j] + ": " + std::to_string(static_cast<double>(u[j]));
  }
  return s;
}


// Exact supporting hyperplane through the target, guessed from a fitted
// theta. A large fitted theta concentrates mass on the rows maximizing
// theta.x; when the target lies on that face, the face's normal u gives
// u.(x - t) <= 0 on every row with strict inequality somewhere. The check
// is exact, so an interior target never yields a certificate.
std::optional<std::vector<Rational>> BoundaryCertificate(
    const Problem& pr, const std::vector<Rational>& target, const Vec& theta) {
  const size_t k = pr.k(), rows = pr.table.size();
  std::vector<Rational> t(k);
  for (size_t j = 0; j < k; ++j)
    t[j] = target[j] * ColumnNormalization(pr.cols[j], pr.table.n);
  auto diff = [&](size_t i, size_t j) {
    return Rational(Rational(pr.table.stats[i][pr.cols[j]]) - t[j]);
  };

  std::vector<Real> score(rows);
  std::vector<size_t> order(rows);
  for (size_t i = 0; i < rows; ++i) {
    order[i] = i;
    Real s = 0;
    for (size_t j = 0; j < k; ++j) s += theta[j] * pr.x(i, j);
    score[i] = s;
  }
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return score[a] > score[b]; });

  std::vector<Rational> beta(k);
  for (size_t j = 0; j < k; ++j)
    beta[j] = Rational(static_cast<double>(theta[j] / pr.norm[j]));

  // Row-reduced basis of the rows seen so far.
  std::vector<std::vector<Rational>> basis;
  std::vector<size_t> pivot;
  auto add_row = [&](size_t i) {
    std::vector<Rational> r(k);
    for (size_t j = 0; j < k; ++j) r[j] = diff(i, j);
    for (size_t b = 0; b < basis.size(); ++b) {
      if (r[pivot[b]] == 0) continue;
      const Rational f = r[pivot[b]];
      for (size_t j = 0; j < k; ++j) r[j] -= f * basis[b][j];
    }
    size_t p = 0;
    while (p < k && r[p] == 0) ++p;
    if (p == k) return;
    const Rational lead = r[p];
    for (auto& v : r) v /= lead;
    for (auto& b : basis) {
      if (b[p] == 0) continue;
      const Rational f = b[p];
      for (size_t j = 0; j < k; ++j) b[j] -= f * r[j];
    }
    basis.push_back(std::move(r));
    pivot.push_back(p);
  };

  int tried = 0;
  for (size_t end = 1; end < rows && tried < 32 && basis.size() < k; ++end) {
    add_row(order[end - 1]);
    if (score[order[end - 1]] - score[order[end]] < 1) continue;
    ++tried;
    // Null space of the face rows, projected onto beta's direction: take
    // beta minus its components along the face-row span.
    std::vector<bool> is_pivot(k, false);
    for (size_t p : pivot) is_pivot[p] = true;
    std::vector<std::vector<Rational>> null;
    for (size_t f = 0; f < k; ++f) {
      if (is_pivot[f]) continue;
      std::vector<Rational> v(k, 0);
      v[f] = 1;
      for (size_t b = 0; b < basis.size(); ++b) v[pivot[b]] = -basis[b][f];
      null.push_back(std::move(v));
    }
    if (null.empty()) continue;
    // u = sum_m c_m null_m with c the least-squares fit to beta.
    const size_t d = null.size();
    std::vector<std::vector<Rational>> gram(d, std::vector<Rational>(d + 1, 0));
    for (size_t a = 0; a < d; ++a) {
      for (size_t b = 0; b < d; ++b)
        for (size_t j = 0; j < k; ++j) gram[a][b] += null[a][j] * null[b][j];
      for (size_t j = 0; j < k; ++j) gram[a][d] += null[a][j] * beta[j];
    }
    for (size_t a = 0; a < d; ++a) {
      size_t piv = a;
      while (gram[piv][a] == 0) ++piv;
      std::swap(gram[a], gram[piv]);
      for (size_t b = 0; b < d; ++b) {
        if (b == a || gram[b][a] == 0) continue;
        const Rational f = gram[b][a] / gram[a][a];
        for (size_t c = a; c <= d; ++c) gram[b][c] -= f * gram[a][c];
      }
    }
    std::vector<Rational> u(k, 0);
    for (size_t a = 0; a < d; ++a) {
      const Rational c = gram[a][d] / gram[a][a];
      for (size_t j = 0; j < k; ++j) u[j] += c * null[a][j];
    }
    bool valid = true, strict = false;
    for (size_t i = 0; i < rows && valid; ++i) {
      Rational s = 0;
      for (size_t j = 0; j < k; ++j) s += u[j] * diff(i, j);
      if (s > 0) valid = false;
      if (s < 0) strict = true;
    }
    if (valid && strict) return u;
  }
  return std::nullopt;
}

}  // namespace

ErgmModel FitErgm(const GraphClassTable& table,
                  const std::vector<std::string>& statistics,
                  const std::vector<Rational>& target_moments,
                  const FitOptions& options) {
  if (statistics.empty()) throw UsageError("no ERGM statistics given");
  if (statistics.size() != target_moments.size())
    throw UsageError("one target per statistic is required");
  Problem pr(table, statistics);
  const size_t k = pr.k();
  Vec t(k);
  for (size_t j = 0; j < k; ++j) t[j] = static_cast<Real>(target_moments[j].get_d());

  const std::string remedy =
      "; an intermediate unbiasing parameter (eta < 1) moves targets inward";
  // Coordinate bounds are the cheapest hull faces.
  for (size_t j = 0; j < k; ++j) {
    Real lo = INFINITY, hi = -INFINITY;
    for (size_t i = 0; i < table.size(); ++i) {
      lo = std::min(lo, pr.x(i, j));
      hi = std::max(hi, pr.x(i, j));
    }
    const Real slack = 1e-12L * std::max<Real>(1, hi);
    if (t[j] <= lo + slack || t[j] >= hi - slack)
      throw InfeasibleError("target moment of " + statistics[j] + " (" +
                            std::to_string(static_cast<double>(t[j])) +
                            ") is not strictly inside the realizable range [" +
                            std::to_string(static_cast<double>(lo)) + ", " +
                            std::to_string(static_cast<double>(hi)) + "]" +
                            remedy);
  }

  auto counts_residual = [&](const Vec& mean) {
    Real num = 0, den = 0;
    for (size_t j = 0; j < k; ++j) {
      num = std::max(num, std::fabs((mean[j] - t[j]) * pr.norm[j]));
      den = std::max(den, std::fabs(t[j] * pr.norm[j]));
    }
    return den > 0 ? num / den : num;
  };

  Vec theta = Vec::Zero(k);
  Real log_z;
  Vec mean;
  Mat cov;
  pr.Moments(theta, log_z, mean, cov);
  int it = 0;
  bool converged = false;
  Vec last_dir = Vec::Zero(k);
  for (; it < options.max_iterations; ++it) {
    if (counts_residual(mean) <= options.tolerance) {
      converged = true;
      break;
    }
    const Vec g = t - mean;
    Vec dir;
    Eigen::LDLT<Mat> ldlt(cov);
    // The Hessian of the dual is minus the statistic covariance.
    const Real scale = std::max<Real>(1, cov.diagonal().cwiseAbs().maxCoeff());
    if (ldlt.info() == Eigen::Success && ldlt.vectorD().minCoeff() < -1e-10L * scale)
      throw std::logic_error("statistic covariance is not positive semidefinite");
    if (ldlt.info() == Eigen::Success) dir = ldlt.solve(g);
    if (dir.size() != static_cast<Eigen::Index>(k) || !dir.allFinite() ||
        dir.dot(g) <= 0)
      dir = g;
    const Real f0 = theta.dot(t) - log_z;
    const Real slope = g.dot(dir);
    Real alpha = 1;
    Vec next;
    Real next_log_z = 0;
    bool accepted = false;
    std::vector<Real> w;
    while (alpha > 1e-14L) {
      next = theta + alpha * dir;
      next_log_z = pr.LogWeights(next, w);
      if (next.dot(t) - next_log_z >= f0 + 1e-4L * alpha * slope) {
        accepted = true;
        break;
      }
      alpha /= 2;
    }
    if (!accepted) break;
    last_dir = dir;
    theta = next;
    pr.Moments(theta, log_z, mean, cov);
    if (theta.cwiseAbs().maxCoeff() > 5e3L) break;
  }
  if (!converged) {
    // A direction u with u.t >= max over graphs of u.x certifies that the
    // target is on or beyond a supporting hyperplane of the hull.
    Vec u = theta.norm() > 0 ? Vec(theta / theta.norm()) : last_dir;
    if (u.norm() > 0) {
      Real best = -INFINITY;
      for (size_t i = 0; i < table.size(); ++i) {
        Real s = 0;
        for (size_t j = 0; j < k; ++j) s += u[j] * pr.x(i, j);
        best = std::max(best, s);
      }
      if (u.dot(t) >= best - 1e-6L)
        throw InfeasibleError(
            "target moments lie on or outside the convex hull of realizable "
            "statistics; supporting direction {" + DirectionText(statistics, u) +
            "}" + remedy);
    }
    throw InfeasibleError(
        "the fit did not converge within " + std::to_string(it) +
        " iterations; the target is numerically at the hull boundary" + remedy);
  }
  if (auto u = BoundaryCertificate(pr, target_moments, theta)) {
    Vec v(k);
    Real scale = 0;
    for (size_t j = 0; j < k; ++j) scale = std::max(scale, static_cast<Real>(std::fabs((*u)[j].get_d())));
    for (size_t j = 0; j < k; ++j) v[j] = static_cast<Real>((*u)[j].get_d()) / scale;
    throw InfeasibleError(
        "target moments lie on the boundary of the convex hull of realizable "
        "statistics; supporting direction {" + DirectionText(statistics, v) +
        "}" + remedy);
  }
  ErgmModel m;
  m.n = table.n;
  m.statistics = statistics;
  m.target_moments = target_moments;
  for (size_t j = 0; j < k; ++j) {
    m.target_counts.push_back(static_cast<double>(t[j] * pr.norm[j]));
    m.theta.push_back(static_cast<double>(theta[j]));
    m.beta.push_back(static_cast<double>(theta[j] / pr.norm[j]));
    m.achieved_counts.push_back(static_cast<double>(mean[j] * pr.norm[j]));
  }
  m.log_z = static_cast<double>(log_z);
  m.residual = static_cast<double>(counts_residual(mean));
  m.iterations = it;
  return m;
}

std::vector<long double> ClassProbabilities(const GraphClassTable& table,
                                            const ErgmModel& model) {
  Problem pr(table, model.statistics);
  Vec theta(pr.k());
  for (size_t j = 0; j < pr.k(); ++j) theta[j] = model.theta[j];
  std::vector<Real> w;
  const Real log_z = pr.LogWeights(theta, w);
  for (Real& v : w) v = std::exp(v - log_z);
  return w;
}

StatisticMoments ModelStatisticMoments(const GraphClassTable& table,
                                       const ErgmModel& model) {
  Problem pr(table, model.statistics);
  Vec theta(pr.k());
  for (size_t j = 0; j < pr.k(); ++j) theta[j] = model.theta[j];
  Real log_z;
  Vec mean;
  Mat cov;
  pr.Moments(theta, log_z, mean, cov);
  StatisticMoments out;
  for (size_t a = 0; a < pr.k(); ++a) {
    out.mean.push_back(mean[a]);
    out.covariance.emplace_back();
    for (size_t b = 0; b < pr.k(); ++b) out.covariance.back().push_back(cov(a, b));
  }
  return out;
}

StatHistogram ErgmDistribution(const GraphClassTable& table,
                               const ErgmModel& model,
                               std::string_view statistic) {
  const int col = ErgmColumn(statistic);
  const std::vector<long double> p = ClassProbabilities(table, model);
  std::map<uint64_t, long double> hist;
  long double mean = 0;
  for (size_t i = 0; i < table.size(); ++i) {
    const uint32_t v = table.stats[i][col];
    hist[v] += p[i];
    mean += p[i] * v;
  }
  StatHistogram h;
  h.statistic = std::string(statistic);
  for (const auto& [v, q] : hist) {
    h.support.push_back(v);
    h.probability.push_back(static_cast<double>(q));
  }
  h.mean = static_cast<double>(mean);
  DegeneracyDiagnostics(h);
  return h;
}

void DegeneracyDiagnostics(StatHistogram& h, double relative_floor) {
  h.modes.clear();
  const size_t s = h.support.size();
  if (s == 0) return;
  const double top = *std::max_element(h.probability.begin(), h.probability.end());
  auto same = [](double a, double b) {
    return std::fabs(a - b) <= 1e-12 * std::max(std::fabs(a), std::fabs(b));
  };
  for (size_t i = 0; i < s;) {
    size_t j = i;
    while (j + 1 < s && same(h.probability[j + 1], h.probability[i])) ++j;
    const double here = h.probability[i];
    const bool left_lower = i == 0 || h.probability[i - 1] < here;
    const bool right_lower = j + 1 == s || h.probability[j + 1] < here;
    if (left_lower && right_lower && here >= relative_floor * top)
      h.modes.push_back(h.support[(i + j) / 2]);
    i = j + 1;
  }
  h.modality = static_cast<int>(h.modes.size());
  h.bimodal = h.modality >= 2;
  uint64_t step = 0;
  for (size_t i = 1; i < s; ++i) step = std::gcd(step, h.support[i] - h.support[i - 1]);
  if (step == 0) step = 1;
  h.mean_to_mode = INFINITY;
  for (uint64_t m : h.modes)
    h.mean_to_mode = std::min(h.mean_to_mode, std::fabs(h.mean - static_cast<double>(m)));
  h.mean_to_mode_steps = h.mean_to_mode / static_cast<double>(step);
}

}  // namespace gc
