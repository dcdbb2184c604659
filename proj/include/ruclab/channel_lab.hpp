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
// Random unitary channels and their complementary channels, outputs of the
// product channel on generalized Bell inputs in the two scaling regimes,
// Bell-direction compression, spectra and entropies.
//
// Composite index conventions: a vector psi = sum a_ij e_i (x) e_j on
// C^n (x) C^n is stored with flat index i*n + j (matrix A row-major); the
// k (x) k output side uses i*k + j.

#ifndef RUCLAB_CHANNEL_LAB_HPP_
#define RUCLAB_CHANNEL_LAB_HPP_

#include "ruclab/linalg.hpp"
#include "ruclab/sampler.hpp"

namespace ruclab::channel_lab {

using sampler::ChannelRealization;
using sampler::WeightVector;

// materialized n^2 x n^2 outputs cap (the Gram-based paths below scale further)
inline constexpr int kMaxLinearDimension = 64;

// Coefficient matrix A of a generalized Bell input psi = sum A_ij e_i (x) e_j
// with trace[A A^*] = 1; `overlap` is trace[A]/sqrt(n), the Bell overlap m.
struct InputState {
  int n = 0;
  CMat coefficients;
  Complex overlap;
};

// Built-in family: A = diag((m e^{i phase} + sqrt(1-m^2) w^j)/sqrt(n)) with
// w = exp(2 pi i / n). Requires 0 <= m <= 1 and n >= 2 unless m = 1 (the
// roots of unity must cancel for the overlap to be exactly m).
InputState input_family(int n, double m, double phase = 0.0);

// generic constructor: validates normalization and computes the overlap
InputState make_input(CMat coefficients);

// the Bell vector (1/sqrt(n)) sum e_i (x) e_i
CVec bell_vector(int n);

// Phi(rho) = sum_i w_i U_i rho U_i^*
CMat apply_channel(const ChannelRealization& realization, const CMat& rho);

// complementary channel, k x k: entries sqrt(w_i w_j) trace[U_i rho U_j^*]
CMat apply_complementary(const ChannelRealization& realization, const CMat& rho);

enum class Regime {
  kFixedK,  // k^2 x k^2 output of the complementary product channel
  kLinear,  // n^2 x n^2 output of the direct product channel
};

struct OutputState {
  Regime regime = Regime::kFixedK;
  int n = 0;
  int k = 0;
  CMat matrix;  // Hermitian, PSD, unit trace

  int dim() const { return static_cast<int>(matrix.rows()); }
};

// Output of the product of conjugate channels on the input state:
// fixed-k regime traces out the two n-factors, linear regime the two
// k-factors, of (V~ (x) conj(V~)) psi psi^* (V~ (x) conj(V~))^*.
OutputState product_output(const ChannelRealization& realization, const InputState& input,
                           Regime regime);

// Q Z Q with Q the projection off the Bell direction; linear regime only
CMat compress_bell(const OutputState& z);

struct Spectrum {
  RVec eigenvalues;  // descending
  double entropy;    // nats, eigenvalues above 1e-14 only
};
Spectrum spectrum_and_entropy(const CMat& hermitian);

// deterministic lower bound |trace A|^2 / n * sum_i w_i^2 for the largest
// eigenvalue of the product-channel output
double hayden_winter_bound(const InputState& input, const WeightVector& weights);

// Per-trial summary of the linear-regime output computed through the k^2 x k^2
// Gram matrix of the conjugate-pair coefficient columns, never materializing
// the n^2 x n^2 output. The Gram spectrum is the nonzero spectrum of Z.
struct LinearTrialStats {
  RVec eigenvalues;     // descending, k^2 entries
  double lambda_max;
  double entropy;
  double trace_z;       // = 1 up to roundoff
  double trace_z_sq;
  double trace_qzq;     // trace of the Bell-compressed output
  double trace_qzq_sq;
};
LinearTrialStats linear_trial_stats(const ChannelRealization& realization,
                                    const InputState& input);

namespace detail {
// columns sqrt(w_i w_j) vec(U_i A U_j^*), flat column index i*k + j; the
// linear-regime output is X X^* and the fixed-k output is conj(X^* X).
// Returned adjointed (k^2 x n^2) so Gram accumulation needs no transpose copy.
CMat conjugate_pair_columns_adjoint(const ChannelRealization& realization,
                                    const InputState& input);
}  // namespace detail

}  // namespace ruclab::channel_lab

#endif  // RUCLAB_CHANNEL_LAB_HPP_
