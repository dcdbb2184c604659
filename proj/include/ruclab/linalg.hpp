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

#ifndef RUCLAB_LINALG_HPP_
#define RUCLAB_LINALG_HPP_

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace ruclab {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using Complex = std::complex<double>;

namespace linalg {

// Pins the BLAS backend to one thread. Parallelism in this project lives at
// the Monte Carlo trial level; a single-threaded backend keeps results
// bit-identical regardless of the worker count.
void pin_blas_single_thread();

// Eigenvalues of a self-adjoint matrix, sorted descending (ties keep the
// ascending-solver order reversed, i.e. resolution by index).
RVec eigenvalues_descending(const CMat& h);
RVec eigenvalues_descending(const RMat& h);

inline double hermiticity_error(const CMat& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline void require_square(const CMat& m, const char* what) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + ": matrix must be square");
}

}  // namespace linalg
}  // namespace ruclab

#endif  // RUCLAB_LINALG_HPP_
