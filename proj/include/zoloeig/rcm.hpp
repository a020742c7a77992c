// Copyright 2026 The ZoloEig Authors. All Rights Reserved.
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

#ifndef ZOLOEIG_RCM_HPP
#define ZOLOEIG_RCM_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "zoloeig/sparse.hpp"

namespace zoloeig {

namespace detail {

/// BFS levels from a root over the sparsity graph; returns (farthest node,
/// eccentricity). Ties break toward the smaller degree, then smaller index,
/// keeping the ordering deterministic.
template <class S>
std::pair<std::size_t, std::size_t> bfs_far_node(const CsrMatrix<S>& m, std::size_t root,
                                                 std::vector<int>& level) {
  level.assign(m.n, -1);
  std::queue<std::size_t> q;
  q.push(root);
  level[root] = 0;
  std::size_t far = root;
  int far_level = 0;
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    for (std::size_t k = m.row_offsets[u]; k < m.row_offsets[u + 1]; ++k) {
      const std::size_t v = m.col_indices[k];
      if (v != u && level[v] < 0) {
        level[v] = level[u] + 1;
        q.push(v);
        if (level[v] > far_level) {
          far_level = level[v];
          far = v;
        } else if (level[v] == far_level) {
          const std::size_t du = m.row_offsets[far + 1] - m.row_offsets[far];
          const std::size_t dv = m.row_offsets[v + 1] - m.row_offsets[v];
          if (dv < du || (dv == du && v < far)) far = v;
        }
      }
    }
  }
  return {far, static_cast<std::size_t>(far_level)};
}

}  // namespace detail

/// Reverse Cuthill-McKee ordering of a structurally symmetric pattern.
/// Returns the permutation as a sequence: perm[new_index] = old_index.
/// Deterministic for a given pattern (degree then index tie-breaking).
template <class S>
std::vector<std::size_t> reorder_rcm(const CsrMatrix<S>& m) {
  const std::size_t n = m.n;
  const auto degree = [&m](std::size_t v) { return m.row_offsets[v + 1] - m.row_offsets[v]; };
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<char> visited(n, 0);
  std::vector<int> level;

  for (std::size_t seed = 0; order.size() < n; ++seed) {
    // next unvisited node of minimum degree starts a new component
    std::size_t root = n;
    std::size_t best_deg = std::numeric_limits<std::size_t>::max();
    for (std::size_t v = 0; v < n; ++v)
      if (!visited[v] && degree(v) < best_deg) {
        best_deg = degree(v);
        root = v;
      }
    // pseudo-peripheral refinement: walk to a farthest node twice
    for (int it = 0; it < 2; ++it) root = detail::bfs_far_node(m, root, level).first;

    std::queue<std::size_t> q;
    q.push(root);
    visited[root] = 1;
    std::vector<std::size_t> nbrs;
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      order.push_back(u);
      nbrs.clear();
      for (std::size_t k = m.row_offsets[u]; k < m.row_offsets[u + 1]; ++k) {
        const std::size_t v = m.col_indices[k];
        if (v != u && !visited[v]) {
          visited[v] = 1;
          nbrs.push_back(v);
        }
      }
      std::sort(nbrs.begin(), nbrs.end(), [&](std::size_t x, std::size_t y) {
        const std::size_t dx = degree(x), dy = degree(y);
        return dx < dy || (dx == dy && x < y);
      });
      for (std::size_t v : nbrs) q.push(v);
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

/// Half bandwidth max |i - j| of the pattern under a symmetric permutation.
template <class S>
std::size_t bandwidth_under(const CsrMatrix<S>& m, const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> pos(m.n);
  for (std::size_t k = 0; k < m.n; ++k) pos[perm[k]] = k;
  std::size_t bw = 0;
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t k = m.row_offsets[i]; k < m.row_offsets[i + 1]; ++k) {
      const std::size_t pi = pos[i], pj = pos[m.col_indices[k]];
      bw = std::max(bw, pi > pj ? pi - pj : pj - pi);
    }
  return bw;
}

/// Profile (envelope size): sum over rows of the distance from the first
/// in-row entry to the diagonal, under the permutation.
template <class S>
std::size_t profile_under(const CsrMatrix<S>& m, const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> pos(m.n);
  for (std::size_t k = 0; k < m.n; ++k) pos[perm[k]] = k;
  std::vector<std::size_t> lowest(m.n, 0);
  for (std::size_t i = 0; i < m.n; ++i) lowest[pos[i]] = pos[i];
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t k = m.row_offsets[i]; k < m.row_offsets[i + 1]; ++k)
      lowest[std::max(pos[i], pos[m.col_indices[k]])] =
          std::min(lowest[std::max(pos[i], pos[m.col_indices[k]])],
                   std::min(pos[i], pos[m.col_indices[k]]));
  std::size_t prof = 0;
  for (std::size_t i = 0; i < m.n; ++i) prof += i - lowest[i];
  return prof;
}

}  // namespace zoloeig

#endif  // ZOLOEIG_RCM_HPP
