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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "ruclab/permkit.hpp"

using namespace ruclab;
using permkit::Permutation;
using permkit::SetPartition;

namespace {

Permutation cycle(int p, std::vector<int> points) {
  return Permutation::from_cycles(p, {points});
}

SetPartition random_partition(std::mt19937& gen, int ground) {
  std::uniform_int_distribution<int> labels(0, ground - 1);
  std::vector<int> lab(ground);
  for (int& x : lab) x = labels(gen);
  return SetPartition::from_labels(lab);
}

}  // namespace

TEST_CASE("cycle structure basics") {
  const auto id3 = Permutation::identity(3);
  CHECK(permkit::cycle_partition(id3).block_count() == 3);
  CHECK(id3.length() == 0);

  const auto swap12 = Permutation::transposition(3, 0, 1);
  const auto swap_part = permkit::cycle_partition(swap12);
  CHECK(swap_part.blocks() == std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(swap12.length() == 1);

  const auto three_cycle = cycle(3, {0, 1, 2});
  CHECK(permkit::cycle_partition(three_cycle).block_count() == 1);
  CHECK(three_cycle.length() == 2);
  CHECK(three_cycle.cycle_type() == std::vector<int>{3});

  for (int p = 1; p <= 6; ++p) {
    const auto id = Permutation::identity(p);
    CHECK(id.length() + id.cycle_count() == p);
  }
}

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(permkit::all_permutations(9), std::invalid_argument);
}

TEST_CASE("geodesic test against BFS distance oracle") {
  const auto table = test_oracles::bfs_distance_table(3);
  const auto group = permkit::all_permutations(3);
  for (std::size_t a = 0; a < group.size(); ++a) {
    for (std::size_t b = 0; b < group.size(); ++b) {
      CHECK(permkit::cayley_distance(group[a], group[b]) == table[a][b]);
    }
  }

  const auto id = Permutation::identity(3);
  const auto swap12 = Permutation::transposition(3, 0, 1);
  const auto rot = cycle(3, {0, 1, 2});
  CHECK(permkit::geodesic_test(id, swap12, swap12));
  CHECK(permkit::geodesic_test(id, swap12, rot));   // 1 + 1 = 2
  CHECK(!permkit::geodesic_test(id, rot, swap12));  // 2 + 1 != 1
  CHECK_THROWS_AS(permkit::geodesic_test(id, Permutation::identity(4), id), std::invalid_argument);
}

TEST_CASE("cayley distance is a translation-invariant metric with diameter p-1") {
  for (int p = 2; p <= 5; ++p) {
    const auto group = permkit::all_permutations(p);
    const int order = static_cast<int>(group.size());

    std::vector<std::vector<int>> dist(order, std::vector<int>(order));
    std::vector<std::vector<int>> compose(order, std::vector<int>(order));
    std::map<std::vector<int>, int> index;
    for (int g = 0; g < order; ++g) index[group[g].images()] = g;
    for (int a = 0; a < order; ++a) {
      for (int b = 0; b < order; ++b) {
        dist[a][b] = permkit::cayley_distance(group[a], group[b]);
        compose[a][b] = index.at((group[a] * group[b]).images());
      }
    }

    int diameter = 0;
    for (int a = 0; a < order; ++a) {
      CHECK(dist[a][a] == 0);
      for (int b = 0; b < order; ++b) {
        if (a != b) CHECK(dist[a][b] > 0);
        CHECK(dist[a][b] == dist[b][a]);
        diameter = std::max(diameter, dist[a][b]);
      }
    }
    CHECK(diameter == p - 1);

    // exhaustive triangle inequality and left/right translation invariance
    for (int a = 0; a < order; ++a) {
      for (int b = 0; b < order; ++b) {
        for (int c = 0; c < order; ++c) {
          CHECK(dist[a][b] + dist[b][c] >= dist[a][c]);
          CHECK(dist[compose[c][a]][compose[c][b]] == dist[a][b]);
          CHECK(dist[compose[a][c]][compose[b][c]] == dist[a][b]);
        }
      }
    }
  }
}

TEST_CASE("distance parity relation") {
  for (int p = 2; p <= 4; ++p) {
    const auto group = permkit::all_permutations(p);
    for (const auto& tau : group) {
      for (const auto& s1 : group) {
        for (const auto& s2 : group) {
          const int lhs = permkit::cayley_distance(tau, s1) + permkit::cayley_distance(tau, s2);
          const int rhs = permkit::cayley_distance(s1, s2);
          CHECK((lhs - rhs) % 2 == 0);
        }
      }
    }
  }
}

TEST_CASE("geodesics between id and the full cycle are counted by Catalan numbers") {
  for (int p = 2; p <= 6; ++p) {
    const auto id = Permutation::identity(p);
    std::vector<int> full(p);
    for (int i = 0; i < p; ++i) full[i] = i;
    const auto full_cycle = cycle(p, full);
    long long count = 0;
    for (const auto& sigma : permkit::all_permutations(p)) {
      if (permkit::geodesic_test(id, sigma, full_cycle)) ++count;
    }
    CHECK(count == permkit::catalan(p));
  }
}

TEST_CASE("partition join examples") {
  const SetPartition bottom = SetPartition::singletons(3);
  const SetPartition pair(3, {{0, 1}, {2}});
  CHECK(permkit::join(bottom, pair) == pair);

  const SetPartition left(4, {{0, 1}, {2, 3}});
  const SetPartition right(4, {{1, 2}, {0}, {3}});
  CHECK(permkit::join(left, right) == SetPartition(4, {{0, 1, 2, 3}}));

  CHECK(permkit::join(pair, pair) == pair);
  CHECK_THROWS_AS(permkit::join(bottom, SetPartition::singletons(4)), std::invalid_argument);
}

TEST_CASE("partition join is commutative, associative, idempotent") {
  std::mt19937 gen(20260808);
  for (int round = 0; round < 200; ++round) {
    const int ground = 2 + static_cast<int>(gen() % 9);
    const auto p = random_partition(gen, ground);
    const auto q = random_partition(gen, ground);
    const auto r = random_partition(gen, ground);
    CHECK(permkit::join(p, q) == permkit::join(q, p));
    CHECK(permkit::join(permkit::join(p, q), r) == permkit::join(p, permkit::join(q, r)));
    CHECK(permkit::join(p, p) == p);
  }
}

TEST_CASE("set partition validation") {
  CHECK_THROWS_AS(SetPartition(3, {{0, 1}}), std::invalid_argument);          // not covering
  CHECK_THROWS_AS(SetPartition(3, {{0, 1}, {1, 2}}), std::invalid_argument);  // overlap
  CHECK_THROWS_AS(SetPartition(3, {{0, 1, 2}, {}}), std::invalid_argument);   // empty block
  CHECK_THROWS_AS(SetPartition(2, {{0, 2}, {1}}), std::invalid_argument);     // out of range
}

TEST_CASE("noncrossing partitions match the brute-force enumeration") {
  CHECK(permkit::noncrossing_partitions(1).size() == 1);
  CHECK(permkit::noncrossing_partitions(3).size() == 5);
  CHECK(permkit::noncrossing_partitions(4).size() == 14);

  for (int p = 1; p <= 6; ++p) {
    std::set<std::vector<std::vector<int>>> expected;
    for (const auto& labels : test_oracles::all_partition_labels(p)) {
      if (!test_oracles::has_crossing(labels)) {
        expected.insert(SetPartition::from_labels(labels).blocks());
      }
    }
    std::set<std::vector<std::vector<int>>> produced;
    for (const auto& part : permkit::noncrossing_partitions(p)) {
      CHECK(part.is_noncrossing());
      produced.insert(part.blocks());
    }
    CHECK(produced == expected);
    CHECK(static_cast<long long>(produced.size()) == permkit::catalan(p));
  }

  // is_noncrossing agrees with the quadruple scan on every partition
  for (int p = 3; p <= 6; ++p) {
    for (const auto& labels : test_oracles::all_partition_labels(p)) {
      CHECK(SetPartition::from_labels(labels).is_noncrossing() ==
            !test_oracles::has_crossing(labels));
    }
  }
}

TEST_CASE("canonical wirings") {
  // p = 2, labels 1T 2T 1B 2B = indices 0 1 2 3
  const auto [gamma, delta] = permkit::canonical_wirings(2);
  CHECK(delta(0) == 2);  // 1T -> 1B
  CHECK(gamma(0) == 1);  // 1T -> 2T (cyclic predecessor)
  CHECK(gamma(2) == 3);  // 1B -> 2B (cyclic successor)

  for (int p = 1; p <= 6; ++p) {
    const auto wirings = permkit::canonical_wirings(p);
    CHECK(wirings.delta * wirings.delta == Permutation::identity(2 * p));
    // gamma splits into the top and bottom p-cycles
    CHECK(wirings.gamma.cycle_count() == (p == 1 ? 2 : 2));
    CHECK(wirings.gamma.cycle_type() == std::vector<int>(2, p));
  }
}

TEST_CASE("geodesic pairs enumerate A <= B with the geodesic property") {
  CHECK(permkit::geodesic_pairs(1).size() == 3);
  CHECK(permkit::geodesic_pairs(2).size() == 9);

  for (int p = 1; p <= 4; ++p) {
    const auto pairs = permkit::geodesic_pairs(p);
    CHECK(pairs.size() == static_cast<std::size_t>(std::pow(3.0, p)));
    const auto id = Permutation::identity(2 * p);
    const auto delta = permkit::canonical_wirings(p).delta;
    bool saw_empty = false;
    for (const auto& pair : pairs) {
      CHECK((pair.a_mask & ~pair.b_mask) == 0);
      CHECK(permkit::geodesic_test(id, pair.alpha, pair.beta));
      CHECK(permkit::geodesic_test(pair.alpha, pair.beta, delta));
      if (pair.b_mask == 0) {
        saw_empty = true;
        CHECK(pair.alpha == id);
        CHECK(pair.beta == id);
      }
    }
    CHECK(saw_empty);
  }
  CHECK_THROWS_AS(permkit::geodesic_pairs(13), std::invalid_argument);
}

TEST_CASE("geodesic pairs are complete: no other removals sit on the geodesic") {
  // exhaustively over S_{2p} x S_{2p}: exactly the 3^p transposition-product
  // pairs satisfy id -> alpha -> beta -> delta
  for (int p : {1, 2, 3}) {
    const auto id = Permutation::identity(2 * p);
    const auto delta = permkit::canonical_wirings(p).delta;
    const auto group = permkit::all_permutations(2 * p);
    long long on_geodesic = 0;
    for (const auto& alpha : group) {
      const int d_id_alpha = alpha.length();
      for (const auto& beta : group) {
        if (d_id_alpha + permkit::cayley_distance(alpha, beta) +
                permkit::cayley_distance(beta, delta) ==
            p) {
          ++on_geodesic;
        }
      }
    }
    CHECK(on_geodesic == static_cast<long long>(std::pow(3.0, p)));
  }
}

TEST_CASE("integer partitions") {
  CHECK(permkit::integer_partitions(6).size() == 11);
  CHECK(permkit::integer_partitions(1) == std::vector<std::vector<int>>{{1}});
}
