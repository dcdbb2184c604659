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
// Symmetric-group and set-partition kernel: cycle structure, the Cayley
// metric and geodesic tests, partition joins, non-crossing partitions, and
// the fixed trace/conjugation wirings used by the moment expansions.
//
// Ground-set conventions: permutations act on {0, ..., p-1}. For the doubled
// ground set of the channel-product expansions (size 2p), index t in [0, p)
// is the t-th "top" label and p + t the t-th "bottom" label; every wiring
// formula in this project is written against that fixed order.

#ifndef RUCLAB_PERMKIT_HPP_
#define RUCLAB_PERMKIT_HPP_

#include <cstdint>
#include <functional>
#include <vector>

namespace ruclab::permkit {

// Caps that keep the factorial/exponential enumerations loud on misuse.
inline constexpr int kMaxEnumeratedSymmetricGroup = 8;
inline constexpr int kMaxGeodesicPairOrder = 12;
inline constexpr int kMaxNoncrossingOrder = 12;

class Permutation {
 public:
  // one-line notation: i -> images[i]; must be a bijection of {0..p-1}
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int p);
  static Permutation transposition(int p, int a, int b);
  static Permutation from_cycles(int p, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  // composition: (a * b)(i) = a(b(i))
  Permutation operator*(const Permutation& rhs) const;

  // orbits in traversal order (each cycle starts at its smallest element and
  // follows repeated application)
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;
  // Cayley length: minimal number of transpositions, equals size - cycles
  int length() const { return size() - cycle_count(); }
  // cycle lengths sorted descending; conjugacy-class key
  std::vector<int> cycle_type() const;

  bool operator==(const Permutation& rhs) const = default;

 private:
  std::vector<int> images_;
};

// d(a, b) = |a^{-1} b|; a bi-invariant metric with diameter p-1
int cayley_distance(const Permutation& a, const Permutation& b);

// true iff b lies on a geodesic from a to c: d(a,b) + d(b,c) = d(a,c)
bool geodesic_test(const Permutation& a, const Permutation& b, const Permutation& c);

// all of S_p in lexicographic order; p <= 8
std::vector<Permutation> all_permutations(int p);

class SetPartition {
 public:
  // blocks must be disjoint, nonempty and cover {0..ground_size-1};
  // stored canonically (elements ascending, blocks by smallest element)
  SetPartition(int ground_size, std::vector<std::vector<int>> blocks);

  static SetPartition singletons(int ground_size);
  // labels[i] == labels[j] iff i, j share a block
  static SetPartition from_labels(const std::vector<int>& labels);

  int ground_size() const { return ground_size_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  // block index of each element
  std::vector<int> labels() const;

  bool is_noncrossing() const;

  bool operator==(const SetPartition& rhs) const = default;

 private:
  int ground_size_;
  std::vector<std::vector<int>> blocks_;
};

// orbit partition of a permutation
SetPartition cycle_partition(const Permutation& sigma);

// finest partition coarser than both arguments (connected components of the
// union of the two block relations)
SetPartition join(const SetPartition& p, const SetPartition& q);

// all non-crossing partitions of {0..p-1}; Catalan(p) of them; p <= 12
std::vector<SetPartition> noncrossing_partitions(int p);

long long catalan(int n);

// integer partitions of p, each sorted descending, in lexicographically
// decreasing order starting from {p}
std::vector<std::vector<int>> integer_partitions(int p);

// Fixed wirings on the doubled ground set of order 2p: gamma rotates the top
// row backwards and the bottom row forwards (the trace wiring of the two
// channel factors), delta swaps top and bottom (the conjugation pairing).
struct Wirings {
  Permutation gamma;
  Permutation delta;
};
Wirings canonical_wirings(int p);

// One term of the geodesic expansion id -> alpha -> beta -> delta: subsets
// A <= B of {0..p-1} with alpha, beta the products of the top-bottom
// transpositions over A and B.
struct GeodesicPair {
  std::uint32_t a_mask = 0;
  std::uint32_t b_mask = 0;
  Permutation alpha;
  Permutation beta;
  int a_size() const;
  int b_size() const;
};

// all 3^p geodesic pairs; p <= 12
std::vector<GeodesicPair> geodesic_pairs(int p);

// enumeration without materializing the list
void for_each_geodesic_pair(int p, const std::function<void(const GeodesicPair&)>& fn);

}  // namespace ruclab::permkit

#endif  // RUCLAB_PERMKIT_HPP_
