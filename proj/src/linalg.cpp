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

#include "ruclab/linalg.hpp"

extern "C" void openblas_set_num_threads(int);

namespace ruclab::linalg {

void pin_blas_single_thread() { openblas_set_num_threads(1); }

namespace {
// Every binary that links the library gets a pinned BLAS before main().
const bool kBlasPinned = [] {
  pin_blas_single_thread();
  return true;
}();
}  // namespace

RVec eigenvalues_descending(const CMat& h) {
  Eigen::SelfAdjointEigenSolver<CMat> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian eigensolver failed");
  return solver.eigenvalues().reverse();
}

RVec eigenvalues_descending(const RMat& h) {
  Eigen::SelfAdjointEigenSolver<RMat> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver failed");
  return solver.eigenvalues().reverse();
}

}  // namespace ruclab::linalg
