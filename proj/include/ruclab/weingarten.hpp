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
// Unitary Weingarten calculus: the convolution inverse of sigma -> n^{#sigma}
// on S_p (exact rationals for n >= p, Moore-Penrose pseudo-inverse below),
// its large-n asymptotics through the Moebius function, the multi-matrix
// (level-labelled) extension, and exact monomial integrals over one or
// several independent Haar unitaries.

#ifndef RUCLAB_WEINGARTEN_HPP_
#define RUCLAB_WEINGARTEN_HPP_

#include <gmpxx.h>

#include <map>
#include <memory>
#include <vector>

#include "ruclab/permkit.hpp"

namespace ruclab::weingarten {

using permkit::Permutation;
using Rational = mpq_class;

inline constexpr int kMaxOrder = 8;

// product over cycles b of (-1)^{|b|-1} Catalan(|b|-1); the leading
// coefficient of Wg(n, sigma) at large n
long long mobius(const Permutation& sigma);

// Weingarten values for fixed (n, p), one value per conjugacy class.
//
// For n >= p the defining convolution system is invertible and the table is
// exact (arbitrary-precision rationals). For n < p the Gram map is singular;
// the table holds the Moore-Penrose pseudo-inverse, computed in doubles on
// the class-reduced system with singular values below 1e-12 * max dropped.
class WeingartenTable {
 public:
  WeingartenTable(int n, int p);

  int n() const { return n_; }
  int p() const { return p_; }
  bool exact_mode() const { return exact_mode_; }

  // conjugacy classes as cycle types (descending parts), fixed order
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  long long class_size(const std::vector<int>& cycle_type) const;

  const Rational& exact(const std::vector<int>& cycle_type) const;
  Rational exact(const Permutation& sigma) const { return exact(sigma.cycle_type()); }

  double value(const std::vector<int>& cycle_type) const;
  double value(const Permutation& sigma) const { return value(sigma.cycle_type()); }

 private:
  int n_;
  int p_;
  bool exact_mode_;
  std::vector<std::vector<int>> classes_;
  std::map<std::vector<int>, long long> class_sizes_;
  std::map<std::vector<int>, Rational> exact_values_;
  std::map<std::vector<int>, double> double_values_;
};

// convenience single-value accessors (build a table per call; use a
// WeingartenTable or WgCache when evaluating many values)
Rational wg_exact(int n, const Permutation& sigma);
double wg_value(int n, const Permutation& sigma);

// leading-order approximation n^{-(p+|sigma|)} * Mob(sigma)
double wg_asymptotic(int n, const Permutation& sigma);

// exact closed form on a full d-cycle:
// (-1)^{d-1} Catalan(d-1) / prod_{j=-(d-1)}^{d-1} (n-j); requires n >= d
Rational wg_full_cycle_exact(int n, int d);

// Tables for a fixed dimension across orders 1..max_p, built lazily.
class WgCache {
 public:
  explicit WgCache(int n) : n_(n) {}
  const WeingartenTable& table(int p) const;
  int n() const { return n_; }

 private:
  int n_;
  mutable std::map<int, std::unique_ptr<WeingartenTable>> tables_;
};

// Block labels for moments in several independent unitaries: factor t of the
// product carries matrix U^{(l[t])}, conjugate factor t carries U^{(l')}.
struct LevelLabels {
  int p = 0;
  std::vector<int> l;        // size p, values in [0, k)
  std::vector<int> l_prime;  // size p

  // true iff some level occurs a different number of times in l and l';
  // then no permutation maps the level sets onto each other
  bool class_empty() const;
};

// membership in S_p^{l -> l'}: sigma maps each level set of l onto the
// matching level set of l'
bool in_level_class(const Permutation& sigma, const LevelLabels& labels);

// product over levels s of Wg(n, alpha_s^{-1} beta_s), the weight of the
// multi-matrix Weingarten formula; throws on empty classes or when alpha or
// beta is not in S_p^{l -> l'}
double wg_modified(int n, const Permutation& alpha, const Permutation& beta,
                   const LevelLabels& labels);
double wg_modified(const WgCache& cache, const Permutation& alpha, const Permutation& beta,
                   const LevelLabels& labels);

// Exact mixed moment of matrix entries over independent Haar unitaries:
//   E[ prod_t U^{(l[t])}(rows[t], cols[t]) *
//      prod_t conj(U^{(l'[t])}(conj_rows[t], conj_cols[t])) ]
// Zero when the factor counts differ. Index values are 0-based in [0, n).
double monomial_integral(const WgCache& cache, const std::vector<int>& rows,
                         const std::vector<int>& cols, const std::vector<int>& conj_rows,
                         const std::vector<int>& conj_cols, const std::vector<int>& levels,
                         const std::vector<int>& conj_levels);
double monomial_integral(int n, const std::vector<int>& rows, const std::vector<int>& cols,
                         const std::vector<int>& conj_rows, const std::vector<int>& conj_cols,
                         const std::vector<int>& levels, const std::vector<int>& conj_levels);

}  // namespace ruclab::weingarten

#endif  // RUCLAB_WEINGARTEN_HPP_
