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

#include "ruclab/weingarten.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ruclab::weingarten {

namespace {

void check_order(int p) {
  if (p < 1) throw std::invalid_argument("weingarten: order must be positive");
  if (p > kMaxOrder) {
    throw std::invalid_argument("weingarten: order " + std::to_string(p) + " exceeds cap " +
                                std::to_string(kMaxOrder));
  }
}

Permutation representative(int p, const std::vector<int>& cycle_type) {
  std::vector<std::vector<int>> cycles;
  int next = 0;
  for (int len : cycle_type) {
    std::vector<int> c(len);
    for (int i = 0; i < len; ++i) c[i] = next++;
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(p, cycles);
}

// exact rational solve of M x = rhs by Gaussian elimination; M is small
// (number of integer partitions of p, at most 22 for p <= 8)
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> m,
                                     std::vector<Rational> rhs) {
  const int dim = static_cast<int>(m.size());
  for (int col = 0; col < dim; ++col) {
    int pivot = -1;
    for (int row = col; row < dim; ++row) {
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) throw std::runtime_error("weingarten: singular convolution system in exact mode");
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (int row = 0; row < dim; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational factor = m[row][col] / m[col][col];
      for (int c2 = col; c2 < dim; ++c2) m[row][c2] -= factor * m[col][c2];
      rhs[row] -= factor * rhs[col];
    }
  }
  std::vector<Rational> x(dim);
  for (int i = 0; i < dim; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

}  // namespace

long long mobius(const Permutation& sigma) {
  long long result = 1;
  for (const auto& cycle : sigma.cycles()) {
    const int len = static_cast<int>(cycle.size());
    const long long cat = permkit::catalan(len - 1);
    result *= (len % 2 == 0) ? -cat : cat;
  }
  return result;
}

WeingartenTable::WeingartenTable(int n, int p) : n_(n), p_(p), exact_mode_(n >= p) {
  check_order(p);
  if (n < 1) throw std::invalid_argument("weingarten: dimension must be positive");

  classes_ = permkit::integer_partitions(p);
  const int dim = static_cast<int>(classes_.size());
  std::map<std::vector<int>, int> class_index;
  for (int c = 0; c < dim; ++c) class_index[classes_[c]] = c;

  // M[c][c'] = sum over tau of type c' of n^{#(sigma_c * tau^{-1})}, with
  // sigma_c a representative of class c.  Wg solves M x = e_{id class}.
  const auto group = permkit::all_permutations(p);
  std::vector<Permutation> reps;
  reps.reserve(dim);
  for (const auto& type : classes_) reps.push_back(representative(p, type));

  std::vector<std::vector<long long>> cycle_counts(dim);
  std::vector<long long> sizes(dim, 0);
  std::vector<std::vector<std::vector<long long>>> count_by_cycles(
      dim, std::vector<std::vector<long long>>(dim, std::vector<long long>(p + 1, 0)));
  for (const auto& tau : group) {
    const int ct = class_index.at(tau.cycle_type());
    ++sizes[ct];
    const Permutation tau_inv = tau.inverse();
    for (int c = 0; c < dim; ++c) {
      const int cycles = (reps[c] * tau_inv).cycle_count();
      ++count_by_cycles[c][ct][cycles];
    }
  }
  for (int c = 0; c < dim; ++c) class_sizes_[classes_[c]] = sizes[c];

  const std::vector<int> id_type(static_cast<std::size_t>(p), 1);
  const int id_class = class_index.at(id_type);

  if (exact_mode_) {
    std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim, 0));
    for (int c = 0; c < dim; ++c) {
      for (int c2 = 0; c2 < dim; ++c2) {
        mpz_class entry = 0;
        for (int cyc = 1; cyc <= p; ++cyc) {
          const long long cnt = count_by_cycles[c][c2][cyc];
          if (cnt == 0) continue;
          mpz_class power;
          mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(cyc));
          entry += power * static_cast<long>(cnt);
        }
        m[c][c2] = Rational(entry);
      }
    }
    std::vector<Rational> rhs(dim, 0);
    rhs[id_class] = 1;
    const auto x = solve_rational(std::move(m), std::move(rhs));
    for (int c = 0; c < dim; ++c) {
      exact_values_[classes_[c]] = x[c];
      double_values_[classes_[c]] = x[c].get_d();
    }
    return;
  }

  // n < p: Moore-Penrose pseudo-inverse.  The Gram map commutes with
  // conjugation, so its pseudo-inverse is a class function; reduce to class
  // space, symmetrize with the class sizes and invert the spectrum above a
  // relative cutoff.
  Eigen::MatrixXd m(dim, dim);
  for (int c = 0; c < dim; ++c) {
    for (int c2 = 0; c2 < dim; ++c2) {
      double entry = 0;
      for (int cyc = 1; cyc <= p; ++cyc) {
        const long long cnt = count_by_cycles[c][c2][cyc];
        if (cnt != 0) entry += static_cast<double>(cnt) * std::pow(static_cast<double>(n), cyc);
      }
      m(c, c2) = entry;
    }
  }
  Eigen::VectorXd sqrt_size(dim), inv_sqrt_size(dim);
  for (int c = 0; c < dim; ++c) {
    sqrt_size(c) = std::sqrt(static_cast<double>(sizes[c]));
    inv_sqrt_size(c) = 1.0 / sqrt_size(c);
  }
  const Eigen::MatrixXd s =
      sqrt_size.asDiagonal() * m * inv_sqrt_size.asDiagonal();  // symmetric PSD
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (s + s.transpose()));
  if (solver.info() != Eigen::Success) throw std::runtime_error("weingarten: eigensolver failed");
  const Eigen::VectorXd eig = solver.eigenvalues();
  const double cutoff = 1e-12 * eig.cwiseAbs().maxCoeff();
  Eigen::VectorXd inv_eig(dim);
  for (int c = 0; c < dim; ++c) inv_eig(c) = (eig(c) > cutoff) ? 1.0 / eig(c) : 0.0;
  Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
  e(id_class) = 1.0;
  const Eigen::VectorXd x = inv_sqrt_size.asDiagonal() * (solver.eigenvectors() *
                            inv_eig.asDiagonal() * solver.eigenvectors().transpose()) *
                            (sqrt_size.asDiagonal() * e);
  for (int c = 0; c < dim; ++c) double_values_[classes_[c]] = x(c);
}

long long WeingartenTable::class_size(const std::vector<int>& cycle_type) const {
  const auto it = class_sizes_.find(cycle_type);
  if (it == class_sizes_.end()) throw std::invalid_argument("WeingartenTable: unknown cycle type");
  return it->second;
}

const Rational& WeingartenTable::exact(const std::vector<int>& cycle_type) const {
  if (!exact_mode_)
    throw std::logic_error("WeingartenTable: exact values unavailable in pseudo-inverse mode (n < p)");
  const auto it = exact_values_.find(cycle_type);
  if (it == exact_values_.end()) throw std::invalid_argument("WeingartenTable: unknown cycle type");
  return it->second;
}

double WeingartenTable::value(const std::vector<int>& cycle_type) const {
  const auto it = double_values_.find(cycle_type);
  if (it == double_values_.end()) throw std::invalid_argument("WeingartenTable: unknown cycle type");
  return it->second;
}

Rational wg_exact(int n, const Permutation& sigma) {
  return WeingartenTable(n, sigma.size()).exact(sigma);
}

double wg_value(int n, const Permutation& sigma) {
  return WeingartenTable(n, sigma.size()).value(sigma);
}

double wg_asymptotic(int n, const Permutation& sigma) {
  const int p = sigma.size();
  return std::pow(static_cast<double>(n), -(p + sigma.length())) *
         static_cast<double>(mobius(sigma));
}

Rational wg_full_cycle_exact(int n, int d) {
  if (d < 1) throw std::invalid_argument("wg_full_cycle_exact: cycle length must be positive");
  if (n < d) throw std::invalid_argument("wg_full_cycle_exact: requires n >= d");
  mpz_class denom = 1;
  for (int j = -(d - 1); j <= d - 1; ++j) denom *= n - j;
  Rational value(mpz_class(static_cast<long>(permkit::catalan(d - 1))), denom);
  value.canonicalize();
  return (d % 2 == 0) ? Rational(-value) : value;
}

const WeingartenTable& WgCache::table(int p) const {
  auto it = tables_.find(p);
  if (it == tables_.end()) {
    it = tables_.emplace(p, std::make_unique<WeingartenTable>(n_, p)).first;
  }
  return *it->second;
}

bool LevelLabels::class_empty() const {
  std::map<int, long long> count_l, count_lp;
  for (int v : l) ++count_l[v];
  for (int v : l_prime) ++count_lp[v];
  return count_l != count_lp;
}

bool in_level_class(const Permutation& sigma, const LevelLabels& labels) {
  if (sigma.size() != labels.p || static_cast<int>(labels.l.size()) != labels.p ||
      static_cast<int>(labels.l_prime.size()) != labels.p) {
    throw std::invalid_argument("in_level_class: size mismatch");
  }
  for (int t = 0; t < labels.p; ++t) {
    if (labels.l_prime[sigma(t)] != labels.l[t]) return false;
  }
  return true;
}

namespace {

// cycle types of tau restricted to the level sets of l; tau must preserve
// those level sets
std::vector<std::vector<int>> cycle_types_by_level(const Permutation& tau,
                                                   const std::vector<int>& levels) {
  const int p = tau.size();
  std::map<int, std::vector<int>> types;
  std::vector<bool> seen(p, false);
  for (int start = 0; start < p; ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int cur = start; !seen[cur]; cur = tau(cur)) {
      seen[cur] = true;
      ++len;
    }
    types[levels[start]].push_back(len);
  }
  std::vector<std::vector<int>> out;
  for (auto& [level, type] : types) {
    std::sort(type.begin(), type.end(), std::greater<int>());
    out.push_back(std::move(type));
  }
  return out;
}

double modified_weight(const WgCache& cache, const Permutation& alpha, const Permutation& beta,
                       const std::vector<int>& levels) {
  const Permutation tau = alpha.inverse() * beta;
  double weight = 1.0;
  for (const auto& type : cycle_types_by_level(tau, levels)) {
    int block_order = 0;
    for (int part : type) block_order += part;
    weight *= cache.table(block_order).value(type);
  }
  return weight;
}

}  // namespace

double wg_modified(const WgCache& cache, const Permutation& alpha, const Permutation& beta,
                   const LevelLabels& labels) {
  if (labels.class_empty())
    throw std::invalid_argument("wg_modified: empty class (level multiplicities differ)");
  if (!in_level_class(alpha, labels) || !in_level_class(beta, labels))
    throw std::invalid_argument("wg_modified: permutation not in S_p^{l->l'}");
  check_order(labels.p);
  return modified_weight(cache, alpha, beta, labels.l);
}

double wg_modified(int n, const Permutation& alpha, const Permutation& beta,
                   const LevelLabels& labels) {
  WgCache cache(n);
  return wg_modified(cache, alpha, beta, labels);
}

double monomial_integral(const WgCache& cache, const std::vector<int>& rows,
                         const std::vector<int>& cols, const std::vector<int>& conj_rows,
                         const std::vector<int>& conj_cols, const std::vector<int>& levels,
                         const std::vector<int>& conj_levels) {
  const std::size_t p = rows.size();
  if (cols.size() != p || levels.size() != p)
    throw std::invalid_argument("monomial_integral: inconsistent tuple lengths");
  const std::size_t pp = conj_rows.size();
  if (conj_cols.size() != pp || conj_levels.size() != pp)
    throw std::invalid_argument("monomial_integral: inconsistent conjugate tuple lengths");
  if (p != pp) return 0.0;  // unmatched factor counts integrate to zero
  check_order(static_cast<int>(p));

  const auto group = permkit::all_permutations(static_cast<int>(p));
  std::vector<const Permutation*> alphas, betas;
  for (const auto& sigma : group) {
    bool row_ok = true, col_ok = true;
    for (std::size_t t = 0; t < p && (row_ok || col_ok); ++t) {
      const int image = sigma(static_cast<int>(t));
      if (conj_levels[image] != levels[t]) {
        row_ok = col_ok = false;
        break;
      }
      row_ok = row_ok && conj_rows[image] == rows[t];
      col_ok = col_ok && conj_cols[image] == cols[t];
    }
    if (row_ok) alphas.push_back(&sigma);
    if (col_ok) betas.push_back(&sigma);
  }

  double total = 0.0;
  for (const Permutation* alpha : alphas) {
    for (const Permutation* beta : betas) {
      total += modified_weight(cache, *alpha, *beta, levels);
    }
  }
  return total;
}

double monomial_integral(int n, const std::vector<int>& rows, const std::vector<int>& cols,
                         const std::vector<int>& conj_rows, const std::vector<int>& conj_cols,
                         const std::vector<int>& levels, const std::vector<int>& conj_levels) {
  WgCache cache(n);
  return monomial_integral(cache, rows, cols, conj_rows, conj_cols, levels, conj_levels);
}

}  // namespace ruclab::weingarten
