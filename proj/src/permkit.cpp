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

#include "ruclab/permkit.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ruclab::permkit {

namespace {

void check_order(int p, int cap, const char* what) {
  if (p < 1) throw std::invalid_argument(std::string(what) + ": order must be positive");
  if (p > cap) {
    throw std::invalid_argument(std::string(what) + ": order " + std::to_string(p) +
                                " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int p = static_cast<int>(images_.size());
  if (p == 0) throw std::invalid_argument("Permutation: empty image list");
  std::vector<bool> seen(p, false);
  for (int v : images_) {
    if (v < 0 || v >= p || seen[v]) throw std::invalid_argument("Permutation: images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int p) {
  std::vector<int> im(p);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int p, int a, int b) {
  if (a < 0 || b < 0 || a >= p || b >= p || a == b)
    throw std::invalid_argument("Permutation::transposition: bad points");
  std::vector<int> im(p);
  std::iota(im.begin(), im.end(), 0);
  std::swap(im[a], im[b]);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int p, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(p);
  std::iota(im.begin(), im.end(), 0);
  std::vector<bool> used(p, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int from = c[i];
      const int to = c[(i + 1) % c.size()];
      if (from < 0 || from >= p || used[from])
        throw std::invalid_argument("Permutation::from_cycles: bad or repeated point");
      used[from] = true;
      im[from] = to;
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[images_[i]] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (size() != rhs.size()) throw std::invalid_argument("Permutation product: size mismatch");
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[i] = images_[rhs.images_[i]];
  return Permutation(std::move(im));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    for (int cur = start; !seen[cur]; cur = images_[cur]) {
      seen[cur] = true;
      cyc.push_back(cur);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (int cur = start; !seen[cur]; cur = images_[cur]) seen[cur] = true;
  }
  return count;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> type;
  for (const auto& c : cycles()) type.push_back(static_cast<int>(c.size()));
  std::sort(type.begin(), type.end(), std::greater<int>());
  return type;
}

int cayley_distance(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("cayley_distance: size mismatch");
  return (a.inverse() * b).length();
}

bool geodesic_test(const Permutation& a, const Permutation& b, const Permutation& c) {
  return cayley_distance(a, b) + cayley_distance(b, c) == cayley_distance(a, c);
}

std::vector<Permutation> all_permutations(int p) {
  check_order(p, kMaxEnumeratedSymmetricGroup, "all_permutations");
  std::vector<int> im(p);
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

SetPartition::SetPartition(int ground_size, std::vector<std::vector<int>> blocks)
    : ground_size_(ground_size), blocks_(std::move(blocks)) {
  if (ground_size_ < 1) throw std::invalid_argument("SetPartition: ground size must be positive");
  std::vector<bool> seen(ground_size_, false);
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 0 || x >= ground_size_ || seen[x])
        throw std::invalid_argument("SetPartition: blocks must be disjoint subsets of the ground set");
      seen[x] = true;
    }
  }
  for (bool s : seen) {
    if (!s) throw std::invalid_argument("SetPartition: blocks must cover the ground set");
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::singletons(int ground_size) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(ground_size);
  for (int i = 0; i < ground_size; ++i) blocks.push_back({i});
  return SetPartition(ground_size, std::move(blocks));
}

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
  const int m = static_cast<int>(labels.size());
  std::vector<std::vector<int>> by_label;
  std::vector<int> label_slot;
  for (int i = 0; i < m; ++i) {
    int slot = -1;
    for (std::size_t s = 0; s < label_slot.size(); ++s) {
      if (label_slot[s] == labels[i]) {
        slot = static_cast<int>(s);
        break;
      }
    }
    if (slot < 0) {
      slot = static_cast<int>(by_label.size());
      by_label.emplace_back();
      label_slot.push_back(labels[i]);
    }
    by_label[slot].push_back(i);
  }
  return SetPartition(m, std::move(by_label));
}

std::vector<int> SetPartition::labels() const {
  std::vector<int> lab(ground_size_, -1);
  for (int b = 0; b < block_count(); ++b) {
    for (int x : blocks_[b]) lab[x] = b;
  }
  return lab;
}

bool SetPartition::is_noncrossing() const {
  // noncrossing iff between any two consecutive elements of a block, only
  // blocks entirely inside that gap occur
  const auto lab = labels();
  std::vector<int> lo(block_count(), ground_size_), hi(block_count(), -1);
  for (int x = 0; x < ground_size_; ++x) {
    lo[lab[x]] = std::min(lo[lab[x]], x);
    hi[lab[x]] = std::max(hi[lab[x]], x);
  }
  for (const auto& b : blocks_) {
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
      for (int x = b[i] + 1; x < b[i + 1]; ++x) {
        if (lo[lab[x]] <= b[i] || hi[lab[x]] >= b[i + 1]) return false;
      }
    }
  }
  return true;
}

SetPartition cycle_partition(const Permutation& sigma) {
  return SetPartition(sigma.size(), sigma.cycles());
}

SetPartition join(const SetPartition& p, const SetPartition& q) {
  if (p.ground_size() != q.ground_size()) throw std::invalid_argument("join: ground size mismatch");
  const int m = p.ground_size();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto* part : {&p, &q}) {
    for (const auto& b : part->blocks()) {
      for (std::size_t i = 1; i < b.size(); ++i) unite(b[0], b[i]);
    }
  }
  std::vector<int> lab(m);
  for (int i = 0; i < m; ++i) lab[i] = find(i);
  return SetPartition::from_labels(lab);
}

namespace {

// non-crossing partitions of the interval elems[lo..hi); the block of the
// first element splits the rest into independent sub-intervals
void nc_interval(int lo, int hi, std::vector<std::vector<int>>& current,
                 const std::function<void()>& emit) {
  if (lo >= hi) {
    emit();
    return;
  }
  // choose the block of element `lo` as an increasing subset of (lo, hi)
  std::vector<int> block = {lo};
  std::function<void(int)> extend = [&](int from) {
    // close the block here: partition the gaps between consecutive members
    {
      std::function<void(std::size_t)> gaps = [&](std::size_t gi) {
        if (gi + 1 < block.size()) {
          nc_interval(block[gi] + 1, block[gi + 1], current, [&] { gaps(gi + 1); });
        } else {
          nc_interval(block.back() + 1, hi, current, emit);
        }
      };
      current.push_back(block);
      gaps(0);
      current.pop_back();
    }
    for (int next = from; next < hi; ++next) {
      block.push_back(next);
      extend(next + 1);
      block.pop_back();
    }
  };
  extend(lo + 1);
}

}  // namespace

std::vector<SetPartition> noncrossing_partitions(int p) {
  check_order(p, kMaxNoncrossingOrder, "noncrossing_partitions");
  std::vector<SetPartition> out;
  std::vector<std::vector<int>> current;
  nc_interval(0, p, current, [&] { out.emplace_back(p, current); });
  return out;
}

long long catalan(int n) {
  if (n < 0 || n > 32) throw std::invalid_argument("catalan: argument out of range");
  // ballot recurrence keeps everything in integers
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
  }
  return c[n];
}

std::vector<std::vector<int>> integer_partitions(int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(p, p);
  return out;
}

Wirings canonical_wirings(int p) {
  if (p < 1) throw std::invalid_argument("canonical_wirings: order must be positive");
  std::vector<int> gamma(2 * p), delta(2 * p);
  for (int t = 0; t < p; ++t) {
    gamma[t] = (t - 1 + p) % p;          // top row: t -> t-1 (cyclic)
    gamma[p + t] = p + (t + 1) % p;      // bottom row: t -> t+1 (cyclic)
    delta[t] = p + t;
    delta[p + t] = t;
  }
  return Wirings{Permutation(std::move(gamma)), Permutation(std::move(delta))};
}

int GeodesicPair::a_size() const { return std::popcount(a_mask); }
int GeodesicPair::b_size() const { return std::popcount(b_mask); }

namespace {

Permutation mask_transpositions(int p, std::uint32_t mask) {
  std::vector<int> im(2 * p);
  std::iota(im.begin(), im.end(), 0);
  for (int t = 0; t < p; ++t) {
    if (mask & (1u << t)) std::swap(im[t], im[p + t]);
  }
  return Permutation(std::move(im));
}

}  // namespace

void for_each_geodesic_pair(int p, const std::function<void(const GeodesicPair&)>& fn) {
  check_order(p, kMaxGeodesicPairOrder, "geodesic_pairs");
  const std::uint32_t full = (p == 32) ? ~0u : ((1u << p) - 1);
  for (std::uint32_t b_mask = 0;; ++b_mask) {
    const Permutation beta = mask_transpositions(p, b_mask);
    // enumerate all submasks of b_mask, including 0
    std::uint32_t a_mask = b_mask;
    while (true) {
      fn(GeodesicPair{a_mask, b_mask, mask_transpositions(p, a_mask), beta});
      if (a_mask == 0) break;
      a_mask = (a_mask - 1) & b_mask;
    }
    if (b_mask == full) break;
  }
}

std::vector<GeodesicPair> geodesic_pairs(int p) {
  std::vector<GeodesicPair> out;
  for_each_geodesic_pair(p, [&](const GeodesicPair& gp) { out.push_back(gp); });
  return out;
}

}  // namespace ruclab::permkit
