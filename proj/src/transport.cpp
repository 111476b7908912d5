// Copyright 2026 The qham Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qham/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace qham::transport {

using linalg::RealMatrix;
using linalg::RealVector;

namespace {

constexpr double kEnteringThreshold = 1e-12;  // reduced cost counted as negative

std::vector<double> normalized_weights(const std::vector<double>& w, const char* side) {
  if (w.empty()) {
    throw InfeasibleMarginals(std::string(side) + " marginal is empty");
  }
  double total = 0.0;
  for (double x : w) {
    if (!std::isfinite(x) || x < -1e-12) {
      throw InfeasibleMarginals(std::string(side) + " marginal has invalid entry " +
                                std::to_string(x));
    }
    total += x;
  }
  if (std::abs(total - 1.0) > tol::kWeightSum) {
    throw InfeasibleMarginals(std::string(side) + " marginal sums to " +
                              std::to_string(total));
  }
  std::vector<double> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = std::max(w[i], 0.0) / total;
  return out;
}

void check_cost(const RealMatrix& cost, std::size_t m, std::size_t k) {
  if (cost.rows() != static_cast<Eigen::Index>(m) ||
      cost.cols() != static_cast<Eigen::Index>(k)) {
    throw SizeMismatch("cost table is " + std::to_string(cost.rows()) + "x" +
                       std::to_string(cost.cols()) + ", marginals need " +
                       std::to_string(m) + "x" + std::to_string(k));
  }
  for (Eigen::Index i = 0; i < cost.rows(); ++i) {
    for (Eigen::Index j = 0; j < cost.cols(); ++j) {
      if (!std::isfinite(cost(i, j)) || cost(i, j) < -1e-9) {
        throw SizeMismatch("cost entry (" + std::to_string(i) + "," + std::to_string(j) +
                           ") invalid: " + std::to_string(cost(i, j)));
      }
    }
  }
}

struct Basis {
  int m, k;
  std::vector<char> in;  // m*k cell flags

  bool has(int i, int j) const { return in[static_cast<std::size_t>(i) * k + j] != 0; }
  void add(int i, int j) { in[static_cast<std::size_t>(i) * k + j] = 1; }
  void remove(int i, int j) { in[static_cast<std::size_t>(i) * k + j] = 0; }
};

// Dual potentials from the basis tree: u[0] = 0, u_i + v_j = c_ij on basis
// cells. Breadth-first over the bipartite tree; every node must be reached.
void compute_potentials(const Basis& basis, const RealMatrix& cost, RealVector& u,
                        RealVector& v) {
  const int m = basis.m, k = basis.k;
  std::vector<char> row_done(m, 0), col_done(k, 0);
  u.setZero(m);
  v.setZero(k);
  std::vector<int> queue;
  queue.reserve(m + k);
  queue.push_back(0);  // row node 0
  row_done[0] = 1;
  u(0) = 0.0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int node = queue[head];
    if (node < m) {
      for (int j = 0; j < k; ++j) {
        if (basis.has(node, j) && !col_done[j]) {
          v(j) = cost(node, j) - u(node);
          col_done[j] = 1;
          queue.push_back(m + j);
        }
      }
    } else {
      const int j = node - m;
      for (int i = 0; i < m; ++i) {
        if (basis.has(i, j) && !row_done[i]) {
          u(i) = cost(i, j) - v(j);
          row_done[i] = 1;
          queue.push_back(i);
        }
      }
    }
  }
  if (queue.size() != static_cast<std::size_t>(m + k)) {
    throw SolverFailure("basis graph is not spanning");
  }
}

// Path of basis cells from row node `row` to col node `col` (tree-unique).
std::vector<std::pair<int, int>> tree_path(const Basis& basis, int row, int col) {
  const int m = basis.m, k = basis.k;
  const int total = m + k;
  std::vector<int> parent(total, -1);
  std::vector<char> seen(total, 0);
  std::vector<int> queue;
  queue.push_back(row);
  seen[row] = 1;
  const int target = m + col;
  for (std::size_t head = 0; head < queue.size() && !seen[target]; ++head) {
    const int node = queue[head];
    if (node < m) {
      for (int j = 0; j < k; ++j) {
        if (basis.has(node, j) && !seen[m + j]) {
          seen[m + j] = 1;
          parent[m + j] = node;
          queue.push_back(m + j);
        }
      }
    } else {
      const int jj = node - m;
      for (int i = 0; i < m; ++i) {
        if (basis.has(i, jj) && !seen[i]) {
          seen[i] = 1;
          parent[i] = node;
          queue.push_back(i);
        }
      }
    }
  }
  if (!seen[target]) {
    throw SolverFailure("entering cell not connected through basis");
  }
  std::vector<std::pair<int, int>> path;  // from col end back to row end
  int node = target;
  while (node != row) {
    const int par = parent[node];
    if (node < m) {
      path.push_back({node, par - m});
    } else {
      path.push_back({par, node - m});
    }
    node = par;
  }
  return path;
}

}  // namespace

OtResult solve_ot(const std::vector<double>& mu, const std::vector<double>& nu,
                  const RealMatrix& cost) {
  const std::vector<double> a0 = normalized_weights(mu, "source");
  const std::vector<double> b0 = normalized_weights(nu, "target");
  const int m = static_cast<int>(a0.size());
  const int k = static_cast<int>(b0.size());
  check_cost(cost, a0.size(), b0.size());

  RealMatrix plan = RealMatrix::Zero(m, k);
  Basis basis{m, k, std::vector<char>(static_cast<std::size_t>(m) * k, 0)};

  // North-west-corner start: exactly m + k − 1 basis cells, degenerate zeros
  // included.
  {
    std::vector<double> a = a0, b = b0;
    int i = 0, j = 0;
    while (true) {
      const double move = std::min(a[i], b[j]);
      plan(i, j) = move;
      basis.add(i, j);
      a[i] -= move;
      b[j] -= move;
      if (i == m - 1 && j == k - 1) break;
      if (j == k - 1) {
        ++i;
      } else if (i == m - 1) {
        ++j;
      } else if (a[i] <= b[j]) {
        ++i;
      } else {
        ++j;
      }
    }
  }

  RealVector u(m), v(k);
  const long iteration_cap = 2000 + 20L * m * k * (m + k);
  long iteration = 0;
  while (true) {
    if (++iteration > iteration_cap) {
      throw DegenerateCycle("pivot count exceeded " + std::to_string(iteration_cap));
    }
    compute_potentials(basis, cost, u, v);

    // Bland's rule: first improving cell in (row, col) lexicographic order.
    int ei = -1, ej = -1;
    for (int i = 0; i < m && ei < 0; ++i) {
      for (int j = 0; j < k; ++j) {
        if (basis.has(i, j)) continue;
        if (cost(i, j) - u(i) - v(j) < -kEnteringThreshold) {
          ei = i;
          ej = j;
          break;
        }
      }
    }
    if (ei < 0) break;  // dual feasible: optimal

    // Close the unique cycle through the entering cell. Walking the path
    // from the col end back to the row end alternates signs −, +, −, …
    const auto path = tree_path(basis, ei, ej);
    std::vector<std::pair<int, int>> minus, plus;
    plus.push_back({ei, ej});
    for (std::size_t t = 0; t < path.size(); ++t) {
      if (t % 2 == 0) {
        minus.push_back(path[t]);
      } else {
        plus.push_back(path[t]);
      }
    }
    double theta = std::numeric_limits<double>::infinity();
    for (const auto& [i, j] : minus) theta = std::min(theta, plan(i, j));
    std::pair<int, int> leaving{m, k};
    for (const auto& [i, j] : minus) {
      if (plan(i, j) <= theta && std::pair<int, int>{i, j} < leaving) {
        leaving = {i, j};
      }
    }
    for (const auto& [i, j] : plus) plan(i, j) += theta;
    for (const auto& [i, j] : minus) plan(i, j) = std::max(plan(i, j) - theta, 0.0);
    plan(leaving.first, leaving.second) = 0.0;
    basis.remove(leaving.first, leaving.second);
    basis.add(ei, ej);
  }

  // Certify before returning: dual feasibility, complementary slackness, and
  // primal feasibility must all hold or the result is worthless.
  compute_potentials(basis, cost, u, v);
  double slackness = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) {
      const double reduced = cost(i, j) - u(i) - v(j);
      if (reduced < -tol::kOtCertificate) {
        throw SolverFailure("dual infeasible at (" + std::to_string(i) + "," +
                            std::to_string(j) + "): " + std::to_string(reduced));
      }
      slackness += plan(i, j) * std::abs(reduced);
    }
  }
  if (slackness > tol::kOtCertificate) {
    throw SolverFailure("complementary slackness residual " + std::to_string(slackness));
  }
  for (int i = 0; i < m; ++i) {
    double row = 0.0;
    for (int j = 0; j < k; ++j) row += plan(i, j);
    if (std::abs(row - a0[static_cast<std::size_t>(i)]) > 1e-8) {
      throw SolverFailure("row marginal violated at " + std::to_string(i));
    }
  }
  for (int j = 0; j < k; ++j) {
    double col = 0.0;
    for (int i = 0; i < m; ++i) col += plan(i, j);
    if (std::abs(col - b0[static_cast<std::size_t>(j)]) > 1e-8) {
      throw SolverFailure("col marginal violated at " + std::to_string(j));
    }
  }

  OtResult result;
  result.plan = std::move(plan);
  result.cost = result.plan.cwiseProduct(cost).sum();
  result.row_potential = std::move(u);
  result.col_potential = std::move(v);
  return result;
}

double brute_force_ot(const std::vector<double>& mu, const std::vector<double>& nu,
                      const RealMatrix& cost) {
  if (mu.size() > 4 || nu.size() > 4) {
    throw TooLarge("brute force limited to 4x4 marginals");
  }
  const std::vector<double> a = normalized_weights(mu, "source");
  const std::vector<double> b = normalized_weights(nu, "target");
  const int m = static_cast<int>(a.size());
  const int k = static_cast<int>(b.size());
  check_cost(cost, a.size(), b.size());

  const int edges = m * k;
  const int tree_size = m + k - 1;
  std::vector<int> pick(tree_size);
  for (int t = 0; t < tree_size; ++t) pick[t] = t;

  double best = std::numeric_limits<double>::infinity();
  std::vector<int> uf(m + k);
  std::vector<int> degree(m + k);
  std::vector<double> residual(m + k);
  std::vector<double> alloc(tree_size);
  std::vector<char> used(tree_size);

  auto find_root = [&uf](int x) {
    while (uf[x] != x) {
      uf[x] = uf[uf[x]];
      x = uf[x];
    }
    return x;
  };

  while (true) {
    // Spanning-tree test: all picked edges must join distinct components.
    bool is_tree = true;
    for (int x = 0; x < m + k; ++x) uf[x] = x;
    for (int t = 0; t < tree_size && is_tree; ++t) {
      const int i = pick[t] / k;
      const int j = pick[t] % k;
      const int ri = find_root(i);
      const int rj = find_root(m + j);
      if (ri == rj) {
        is_tree = false;
      } else {
        uf[ri] = rj;
      }
    }
    if (is_tree) {
      // Strip leaves: each leaf's unique edge carries that node's residual.
      std::fill(degree.begin(), degree.end(), 0);
      for (int t = 0; t < tree_size; ++t) {
        ++degree[pick[t] / k];
        ++degree[m + pick[t] % k];
      }
      for (int i = 0; i < m; ++i) residual[i] = a[static_cast<std::size_t>(i)];
      for (int j = 0; j < k; ++j) residual[m + j] = b[static_cast<std::size_t>(j)];
      std::fill(used.begin(), used.end(), 0);
      bool feasible = true;
      for (int round = 0; round < tree_size; ++round) {
        int t_leaf = -1, leaf_node = -1;
        for (int t = 0; t < tree_size && t_leaf < 0; ++t) {
          if (used[t]) continue;
          const int i = pick[t] / k;
          const int j = m + pick[t] % k;
          if (degree[i] == 1) {
            t_leaf = t;
            leaf_node = i;
          } else if (degree[j] == 1) {
            t_leaf = t;
            leaf_node = j;
          }
        }
        if (t_leaf < 0) {  // unreachable for a spanning tree
          feasible = false;
          break;
        }
        const int i = pick[t_leaf] / k;
        const int j = m + pick[t_leaf] % k;
        const double x = residual[leaf_node];
        alloc[t_leaf] = x;
        used[t_leaf] = 1;
        const int other = (leaf_node == i) ? j : i;
        residual[other] -= x;
        --degree[i];
        --degree[j];
        if (x < -1e-12) feasible = false;
      }
      if (feasible) {
        double total = 0.0;
        for (int t = 0; t < tree_size; ++t) {
          total += std::max(alloc[t], 0.0) * cost(pick[t] / k, pick[t] % k);
        }
        best = std::min(best, total);
      }
    }
    // Next combination of edge indices, lexicographic.
    int pos = tree_size - 1;
    while (pos >= 0 && pick[pos] == edges - tree_size + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int t = pos + 1; t < tree_size; ++t) pick[t] = pick[t - 1] + 1;
  }
  return best;
}

double hamming(const std::vector<int>& sigma, const std::vector<int>& sigma2) {
  if (sigma.size() != sigma2.size() || sigma.empty()) {
    throw SizeMismatch("permutations have different lengths");
  }
  int moved = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] != sigma2[i]) ++moved;
  }
  return static_cast<double>(moved) / static_cast<double>(sigma.size());
}

double classical_w1(const ClassicalMeasure& m1, const ClassicalMeasure& m2) {
  if (m1.perms.size() != m1.weights.size() || m2.perms.size() != m2.weights.size()) {
    throw SizeMismatch("measure support and weights differ in length");
  }
  RealMatrix cost(m1.perms.size(), m2.perms.size());
  for (std::size_t i = 0; i < m1.perms.size(); ++i) {
    for (std::size_t j = 0; j < m2.perms.size(); ++j) {
      cost(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          hamming(m1.perms[i], m2.perms[j]);
    }
  }
  return solve_ot(m1.weights, m2.weights, cost).cost;
}

}  // namespace qham::transport
