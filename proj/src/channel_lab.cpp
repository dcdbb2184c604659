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

#include "ruclab/channel_lab.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ruclab/stats.hpp"

namespace ruclab::channel_lab {

namespace {

constexpr double kStateTolerance = 1e-10;
constexpr double kPi = 3.14159265358979323846;

void check_density_matrix_shape(const ChannelRealization& realization, const CMat& rho) {
  if (rho.rows() != realization.n || rho.cols() != realization.n)
    throw std::invalid_argument("channel: density matrix dimension mismatch");
}

void validate_output(CMat& z, const char* what) {
  const double herm_err = linalg::hermiticity_error(z);
  if (herm_err > kStateTolerance)
    throw std::runtime_error(std::string(what) + ": output not Hermitian, error " +
                             std::to_string(herm_err));
  z = 0.5 * (z + z.adjoint().eval());  // strip roundoff asymmetry
  const double trace_err = std::abs(z.trace().real() - 1.0) + std::abs(z.trace().imag());
  if (trace_err > kStateTolerance)
    throw std::runtime_error(std::string(what) + ": output trace deviates from 1 by " +
                             std::to_string(trace_err));
}

}  // namespace

InputState input_family(int n, double m, double phase) {
  if (n < 1) throw std::invalid_argument("input_family: dimension must be positive");
  if (m < 0.0 || m > 1.0) throw std::invalid_argument("input_family: overlap must lie in [0,1]");
  if (n == 1 && m != 1.0)
    throw std::invalid_argument("input_family: n = 1 supports only the Bell case m = 1");
  const double residue = std::sqrt(std::max(0.0, 1.0 - m * m));
  const Complex head = std::polar(m, phase);
  CMat a = CMat::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const Complex root = std::polar(1.0, 2.0 * kPi * (j + 1) / n);
    a(j, j) = (head + residue * root) / std::sqrt(static_cast<double>(n));
  }
  return InputState{n, std::move(a), head};
}

InputState make_input(CMat coefficients) {
  linalg::require_square(coefficients, "make_input");
  const int n = static_cast<int>(coefficients.rows());
  const double norm = coefficients.squaredNorm();
  if (std::abs(norm - 1.0) > 1e-12)
    throw std::invalid_argument("make_input: trace[A A^*] must be 1, got " + std::to_string(norm));
  const Complex overlap = coefficients.trace() / std::sqrt(static_cast<double>(n));
  return InputState{n, std::move(coefficients), overlap};
}

CVec bell_vector(int n) {
  CVec phi = CVec::Zero(n * n);
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i) phi(i * n + i) = inv_sqrt_n;
  return phi;
}

CMat apply_channel(const ChannelRealization& realization, const CMat& rho) {
  check_density_matrix_shape(realization, rho);
  CMat out = CMat::Zero(realization.n, realization.n);
  for (int i = 0; i < realization.k(); ++i) {
    out.noalias() += realization.weights[i] *
                     (realization.unitaries[i] * rho * realization.unitaries[i].adjoint());
  }
  return out;
}

CMat apply_complementary(const ChannelRealization& realization, const CMat& rho) {
  check_density_matrix_shape(realization, rho);
  const int k = realization.k();
  std::vector<CMat> rotated(k);
  for (int i = 0; i < k; ++i) rotated[i] = realization.unitaries[i] * rho;
  CMat out(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      // trace[U_i rho U_j^*] as a Frobenius pairing of U_i rho with U_j
      const Complex t = (realization.unitaries[j].conjugate().cwiseProduct(rotated[i])).sum();
      out(i, j) = std::sqrt(realization.weights[i] * realization.weights[j]) * t;
    }
  }
  return out;
}

namespace detail {

CMat conjugate_pair_columns_adjoint(const ChannelRealization& realization,
                                    const InputState& input) {
  if (input.n != realization.n)
    throw std::invalid_argument("product_output: input dimension mismatch");
  const int n = realization.n;
  const int k = realization.k();
  std::vector<CMat> left(k);
  for (int i = 0; i < k; ++i) left[i] = realization.unitaries[i] * input.coefficients;
  CMat columns_adj(k * k, n * n);
  CMat block(n, n);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const double weight = std::sqrt(realization.weights[i] * realization.weights[j]);
      block.noalias() = weight * (left[i] * realization.unitaries[j].adjoint());
      // row (i,j) holds conj(vec(U_i A U_j^*)) in row-major vec order
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) columns_adj(i * k + j, a * n + b) = std::conj(block(a, b));
      }
    }
  }
  return columns_adj;
}

}  // namespace detail

OutputState product_output(const ChannelRealization& realization, const InputState& input,
                           Regime regime) {
  const int n = realization.n;
  const int k = realization.k();
  if (regime == Regime::kLinear && n > kMaxLinearDimension)
    throw std::invalid_argument("product_output: linear regime materializes an n^2 x n^2 matrix; n " +
                                std::to_string(n) + " exceeds cap " +
                                std::to_string(kMaxLinearDimension) +
                                " (use linear_trial_stats instead)");
  const CMat y = detail::conjugate_pair_columns_adjoint(realization, input);  // k^2 x n^2
  OutputState out;
  out.regime = regime;
  out.n = n;
  out.k = k;
  if (regime == Regime::kFixedK) {
    // Z[(i,j),(i',j')] = sum_{a,b} X[(a,b),(i,j)] conj(X[(a,b),(i',j')]) = conj(X^* X)
    CMat gram = CMat::Zero(k * k, k * k);
    gram.selfadjointView<Eigen::Lower>().rankUpdate(y);
    gram.triangularView<Eigen::StrictlyUpper>() = gram.adjoint();
    out.matrix = gram.conjugate();
    validate_output(out.matrix, "product_output(fixed-k)");
  } else {
    CMat z = CMat::Zero(n * n, n * n);
    z.selfadjointView<Eigen::Lower>().rankUpdate(y.adjoint());
    z.triangularView<Eigen::StrictlyUpper>() = z.adjoint();
    out.matrix = std::move(z);
    validate_output(out.matrix, "product_output(linear)");
  }
  return out;
}

CMat compress_bell(const OutputState& z) {
  if (z.regime != Regime::kLinear)
    throw std::invalid_argument("compress_bell: requires a linear-regime output");
  const CVec phi = bell_vector(z.n);
  const CVec z_phi = z.matrix * phi;
  const Complex overlap = phi.dot(z_phi);  // phi^* Z phi
  CMat out = z.matrix;
  out.noalias() -= phi * z_phi.adjoint();
  out.noalias() -= z_phi * phi.adjoint();
  out.noalias() += overlap * (phi * phi.adjoint());
  return out;
}

Spectrum spectrum_and_entropy(const CMat& hermitian) {
  linalg::require_square(hermitian, "spectrum_and_entropy");
  const double herm_err = linalg::hermiticity_error(hermitian);
  if (herm_err > kStateTolerance)
    throw std::invalid_argument("spectrum_and_entropy: matrix not Hermitian, error " +
                                std::to_string(herm_err));
  RVec eigs = linalg::eigenvalues_descending(hermitian);
  const double entropy =
      stats::shannon_entropy(std::span<const double>(eigs.data(), eigs.size()));
  return Spectrum{std::move(eigs), entropy};
}

double hayden_winter_bound(const InputState& input, const WeightVector& weights) {
  const double trace_abs = std::abs(input.coefficients.trace());
  return trace_abs * trace_abs / static_cast<double>(input.n) * weights.trace_power(2);
}

LinearTrialStats linear_trial_stats(const ChannelRealization& realization,
                                    const InputState& input) {
  const int n = realization.n;
  const int k = realization.k();
  const CMat y = detail::conjugate_pair_columns_adjoint(realization, input);  // k^2 x n^2

  CMat gram = CMat::Zero(k * k, k * k);
  gram.selfadjointView<Eigen::Lower>().rankUpdate(y);  // gram = Y Y^* = X^* X
  gram.triangularView<Eigen::StrictlyUpper>() = gram.adjoint();

  LinearTrialStats out;
  out.trace_z = gram.trace().real();
  out.trace_z_sq = gram.squaredNorm();
  if (std::abs(out.trace_z - 1.0) > kStateTolerance)
    throw std::runtime_error("linear_trial_stats: output trace deviates from 1 by " +
                             std::to_string(std::abs(out.trace_z - 1.0)));

  // Bell-compressed trace moments from rank-one corrections:
  //   trace[QZQ]     = trace Z - phi^* Z phi
  //   trace[(QZQ)^2] = trace Z^2 - 2 phi^* Z^2 phi + (phi^* Z phi)^2
  const CVec phi = bell_vector(n);
  const CVec y_phi = y * phi;                  // X^* phi
  const double phi_z_phi = y_phi.squaredNorm();
  const double phi_z2_phi = (y.adjoint() * y_phi).squaredNorm();
  out.trace_qzq = out.trace_z - phi_z_phi;
  out.trace_qzq_sq = out.trace_z_sq - 2.0 * phi_z2_phi + phi_z_phi * phi_z_phi;

  out.eigenvalues = linalg::eigenvalues_descending(gram);
  out.lambda_max = out.eigenvalues(0);
  out.entropy = stats::shannon_entropy(
      std::span<const double>(out.eigenvalues.data(), out.eigenvalues.size()));
  return out;
}

}  // namespace ruclab::channel_lab
