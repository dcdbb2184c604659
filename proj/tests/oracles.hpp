// Copyright 2026 The ruclab Authors
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
//
// Test-only brute-force oracles, kept independent of the library paths they
// check: Cayley-graph BFS distances, restricted-growth-string partition
// enumeration, a quadruple-scan crossing test, and interval-product weight
// nets.

#ifndef RUCLAB_TESTS_ORACLES_HPP_
#define RUCLAB_TESTS_ORACLES_HPP_

#include <map>
#include <queue>
#include <vector>

#include "ruclab/permkit.hpp"
#include "ruclab/sampler.hpp"

namespace ruclab::test_oracles {

using permkit::Permutation;

// True graph distances in the Cayley graph of S_p generated by all
// transpositions, by breadth-first search from every vertex. Returns the
// distance matrix indexed like permkit::all_permutations(p).
inline std::vector<std::vector<int>> bfs_distance_table(int p) {
  const auto group = permkit::all_permutations(p);
  const int order = static_cast<int>(group.size());
  std::map<std::vector<int>, int> index;
  for (int g = 0; g < order; ++g) index[group[g].images()] = g;

  std::vector<std::vector<int>> neighbors(order);
  for (int g = 0; g < order; ++g) {
    for (int a = 0; a < p; ++a) {
      for (int b = a + 1; b < p; ++b) {
        neighbors[g].push_back(index.at((group[g] * Permutation::transposition(p, a, b)).images()));
      }
    }
  }

  std::vector<std::vector<int>> dist(order, std::vector<int>(order, -1));
  for (int start = 0; start < order; ++start) {
    std::queue<int> frontier;
    dist[start][start] = 0;
    frontier.push(start);
    while (!frontier.empty()) {
      const int cur = frontier.front();
      frontier.pop();
      for (int next : neighbors[cur]) {
        if (dist[start][next] < 0) {
          dist[start][next] = dist[start][cur] + 1;
          frontier.push(next);
        }
      }
    }
  }
  return dist;
}

// all set partitions of {0..p-1} as label vectors (restricted growth strings)
inline std::vector<std::vector<int>> all_partition_labels(int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> labels(p, 0);
  std::vector<int> rec;
  auto dfs = [&](auto&& self, int i, int used) -> void {
    if (i == p) {
      out.push_back(labels);
      return;
    }
    for (int lab = 0; lab <= used; ++lab) {
      labels[i] = lab;
      self(self, i + 1, used + (lab == used ? 1 : 0));
    }
  };
  dfs(dfs, 0, 0);
  return out;
}

// direct alternation scan: a < b < c < d with {a,c} and {b,d} in different blocks
inline bool has_crossing(const std::vector<int>& labels) {
  const int p = static_cast<int>(labels.size());
  for (int a = 0; a < p; ++a) {
    for (int b = a + 1; b < p; ++b) {
      for (int c = b + 1; c < p; ++c) {
        for (int d = c + 1; d < p; ++d) {
          if (labels[a] == labels[c] && labels[b] == labels[d] && labels[a] != labels[b])
            return true;
        }
      }
    }
  }
  return false;
}

// closed-form weight net on a geodesic pair: the interval products determined
// by the inner subset A (and whether B is empty)
inline double interval_product_net(const permkit::GeodesicPair& pair, int p,
                                   const sampler::WeightVector& w) {
  if (pair.a_mask == 0) {
    const double top_bottom = w.trace_power(p);
    return (pair.b_mask == 0) ? top_bottom * top_bottom : w.trace_power(2 * p);
  }
  std::vector<int> members;
  for (int i = 0; i < p; ++i) {
    if (pair.a_mask & (1u << i)) members.push_back(i);
  }
  const int r = static_cast<int>(members.size());
  double value = 1.0;
  for (int i = 0; i < r; ++i) {
    const int gap = (i + 1 < r) ? members[i + 1] - members[i] : p + members[0] - members[r - 1];
    value *= w.trace_power(2 * gap);
  }
  return value;
}

}  // namespace ruclab::test_oracles

#endif  // RUCLAB_TESTS_ORACLES_HPP_
