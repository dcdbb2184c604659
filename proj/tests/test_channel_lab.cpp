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

#include <cmath>

#include "ruclab/asymptotics.hpp"
#include "ruclab/channel_lab.hpp"
#include "ruclab/stats.hpp"

using namespace ruclab;
using channel_lab::Regime;
using sampler::WeightVector;

namespace {

CMat random_density_matrix(int n, std::uint64_t seed) {
  auto stream = rng::derive_stream(seed, {0});
  CMat g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = stream.complex_gaussian();
  }
  CMat rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

CMat pure_state(int n, std::uint64_t seed) {
  auto stream = rng::derive_stream(seed, {1});
  CVec v(n);
  for (int i = 0; i < n; ++i) v(i) = stream.complex_gaussian();
  v.normalize();
  return v * v.adjoint();
}

RVec nonzero_descending(const RVec& values, double cutoff = 1e-10) {
  std::vector<double> keep;
  for (int i = 0; i < values.size(); ++i) {
    if (values(i) > cutoff) keep.push_back(values(i));
  }
  return Eigen::Map<const RVec>(keep.data(), static_cast<Eigen::Index>(keep.size()));
}

}  // namespace

TEST_CASE("input family") {
  const auto bell = channel_lab::input_family(6, 1.0);
  CHECK((bell.coefficients - CMat::Identity(6, 6) / std::sqrt(6.0)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(bell.overlap == Complex(1.0, 0.0));

  const auto orthogonal = channel_lab::input_family(7, 0.0);
  CHECK(std::abs(orthogonal.coefficients.trace()) < 1e-13);
  CHECK(orthogonal.coefficients.squaredNorm() == doctest::Approx(1.0).epsilon(1e-13));

  for (double m : {0.0, 0.3, 0.5, 0.8, 1.0}) {
    const auto input = channel_lab::input_family(9, m);
    CHECK(input.coefficients.squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(input.overlap - Complex(m, 0.0)) < 1e-13);
    CHECK(std::abs(input.coefficients.trace() / std::sqrt(9.0) - Complex(m, 0.0)) < 1e-13);
    CHECK(input.coefficients.cwiseAbs().maxCoeff() <= 2.0 / 3.0 + 1e-12);
  }

  CHECK_THROWS_AS(channel_lab::input_family(5, 1.2), std::invalid_argument);
  CHECK_THROWS_AS(channel_lab::input_family(1, 0.5), std::invalid_argument);
  CHECK_NOTHROW(channel_lab::input_family(1, 1.0));

  // complex overlap through an explicit phase on the head coefficient
  const auto phased = channel_lab::input_family(8, 0.6, 1.1);
  CHECK(phased.coefficients.squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(phased.overlap) == doctest::Approx(0.6).epsilon(1e-13));
  CHECK(std::arg(phased.overlap) == doctest::Approx(1.1).epsilon(1e-13));

  CHECK_THROWS_AS(channel_lab::make_input(CMat::Identity(3, 3)), std::invalid_argument);
  const auto generic = channel_lab::make_input(CMat::Identity(3, 3) / std::sqrt(3.0));
  CHECK(std::abs(generic.overlap - Complex(1.0, 0.0)) < 1e-14);
}

TEST_CASE("apply_channel basics") {
  const auto w = WeightVector({0.5, 0.3, 0.2});
  const auto realization = sampler::ChannelRealization::sample(6, w, 42, 0);

  const CMat maximally_mixed = CMat::Identity(6, 6) / 6.0;
  CHECK((channel_lab::apply_channel(realization, maximally_mixed) - maximally_mixed)
            .cwiseAbs()
            .maxCoeff() < 1e-13);

  const CMat rho = random_density_matrix(6, 17);
  const CMat out = channel_lab::apply_channel(realization, rho);
  CHECK(std::abs(out.trace().real() - 1.0) < 1e-12);
  CHECK(linalg::hermiticity_error(out) < 1e-13);

  // k = 1 is a unitary conjugation: the spectrum is preserved
  const auto single = sampler::ChannelRealization::sample(6, WeightVector({1.0}), 43, 0);
  const RVec before = linalg::eigenvalues_descending(rho);
  const RVec after = linalg::eigenvalues_descending(channel_lab::apply_channel(single, rho));
  CHECK((before - after).cwiseAbs().maxCoeff() < 1e-12);

  CHECK_THROWS_AS(channel_lab::apply_channel(realization, CMat::Identity(5, 5)),
                  std::invalid_argument);
}

TEST_CASE("complementary channel") {
  const auto w = WeightVector({0.5, 0.25, 0.25});
  const auto realization = sampler::ChannelRealization::sample(7, w, 44, 0);
  const CMat rho = random_density_matrix(7, 18);
  const CMat comp = channel_lab::apply_complementary(realization, rho);
  for (int i = 0; i < 3; ++i) {
    CHECK(comp(i, i).real() == doctest::Approx(w[i]).epsilon(1e-12));
    CHECK(std::abs(comp(i, i).imag()) < 1e-13);
  }

  // pure inputs: nonzero output spectra of the channel and its complementary agree
  const CMat psi = pure_state(7, 19);
  const RVec direct = nonzero_descending(
      linalg::eigenvalues_descending(channel_lab::apply_channel(realization, psi)));
  const RVec complementary = nonzero_descending(
      linalg::eigenvalues_descending(channel_lab::apply_complementary(realization, psi)));
  REQUIRE(direct.size() >= complementary.size());
  for (int i = 0; i < complementary.size(); ++i) {
    CHECK(direct(i) == doctest::Approx(complementary(i)).epsilon(1e-8));
  }
  for (int i = complementary.size(); i < direct.size(); ++i) CHECK(direct(i) < 1e-8);

  const auto single = sampler::ChannelRealization::sample(7, WeightVector({1.0}), 45, 0);
  const CMat scalar = channel_lab::apply_complementary(single, psi);
  REQUIRE(scalar.rows() == 1);
  CHECK(scalar(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("product output: unit trace, positivity, purity at k = 1") {
  const auto bell = channel_lab::input_family(5, 1.0);
  const auto single = sampler::ChannelRealization::sample(5, WeightVector({1.0}), 46, 0);
  const auto pure = channel_lab::product_output(single, bell, Regime::kFixedK);
  REQUIRE(pure.matrix.rows() == 1);
  CHECK(pure.matrix(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));

  for (double m : {0.0, 0.6, 1.0}) {
    const auto input = channel_lab::input_family(6, m);
    const auto realization =
        sampler::ChannelRealization::sample(6, WeightVector({0.55, 0.25, 0.2}), 47, 1);
    for (auto regime : {Regime::kFixedK, Regime::kLinear}) {
      const auto z = channel_lab::product_output(realization, input, regime);
      CHECK(std::abs(z.matrix.trace().real() - 1.0) < 1e-10);
      CHECK(linalg::hermiticity_error(z.matrix) < 1e-10);
      const RVec eigs = linalg::eigenvalues_descending(z.matrix);
      CHECK(eigs.minCoeff() > -1e-10);
      // the Hayden-Winter bound is deterministic
      CHECK(eigs(0) >= channel_lab::hayden_winter_bound(input, realization.weights) - 1e-10);
    }
  }
}

TEST_CASE("linear-regime output matches the direct Kraus-pair construction") {
  const int n = 3, k = 2;
  const auto w = WeightVector({0.7, 0.3});
  const auto input = channel_lab::input_family(n, 0.4);
  const auto realization = sampler::ChannelRealization::sample(n, w, 48, 0);
  const auto z = channel_lab::product_output(realization, input, Regime::kLinear);

  CMat direct = CMat::Zero(n * n, n * n);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const CMat block = realization.unitaries[i] * input.coefficients *
                         realization.unitaries[j].adjoint();
      CVec vec(n * n);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) vec(a * n + b) = block(a, b);
      }
      direct += w[i] * w[j] * (vec * vec.adjoint());
    }
  }
  CHECK((z.matrix - direct).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("fixed-k and linear outputs share their nonzero spectra") {
  for (int n : {4, 8}) {
    for (int k : {2, 3}) {
      const auto input = channel_lab::input_family(n, 0.7);
      const auto realization =
          sampler::ChannelRealization::sample(n, WeightVector::uniform(k), 49, n + k);
      const auto fixed = channel_lab::product_output(realization, input, Regime::kFixedK);
      const auto linear = channel_lab::product_output(realization, input, Regime::kLinear);
      const RVec fixed_eigs = nonzero_descending(linalg::eigenvalues_descending(fixed.matrix), 1e-9);
      const RVec linear_eigs =
          nonzero_descending(linalg::eigenvalues_descending(linear.matrix), 1e-9);
      REQUIRE(fixed_eigs.size() == linear_eigs.size());
      for (int i = 0; i < fixed_eigs.size(); ++i) {
        CHECK(fixed_eigs(i) == doctest::Approx(linear_eigs(i)).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("bell compression") {
  const int n = 4;
  const auto input = channel_lab::input_family(n, 0.8);
  const auto realization = sampler::ChannelRealization::sample(n, WeightVector::uniform(3), 50, 2);
  const auto z = channel_lab::product_output(realization, input, Regime::kLinear);
  const CMat compressed = channel_lab::compress_bell(z);

  const CVec phi = channel_lab::bell_vector(n);
  const CMat q = CMat::Identity(n * n, n * n) - phi * phi.adjoint();
  CHECK((q * q - q).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((compressed - q * z.matrix * q).cwiseAbs().maxCoeff() < 1e-12);

  const Complex overlap = phi.dot(z.matrix * phi);
  CHECK(compressed.trace().real() ==
        doctest::Approx(z.matrix.trace().real() - overlap.real()).epsilon(1e-12));

  // Cauchy interlacing with the uncompressed spectrum
  const RVec original = linalg::eigenvalues_descending(z.matrix);
  const RVec squeezed = linalg::eigenvalues_descending(compressed);
  for (int i = 0; i + 1 < original.size(); ++i) {
    CHECK(squeezed(i) <= original(i) + 1e-12);
    CHECK(squeezed(i) >= original(i + 1) - 1e-12);
  }

  const auto fixed = channel_lab::product_output(realization, input, Regime::kFixedK);
  CHECK_THROWS_AS(channel_lab::compress_bell(fixed), std::invalid_argument);
}

TEST_CASE("spectrum and entropy") {
  const int d = 5;
  const auto uniform = channel_lab::spectrum_and_entropy(CMat::Identity(d, d) / d);
  CHECK(uniform.entropy == doctest::Approx(std::log(d)).epsilon(1e-12));

  const auto pure = channel_lab::spectrum_and_entropy(pure_state(6, 21));
  CHECK(pure.entropy == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(pure.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-12));

  // diag(w (x) w) has entropy 2 H(w)
  const auto w = WeightVector({0.5, 0.3, 0.2});
  CMat kron = CMat::Zero(9, 9);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) kron(i * 3 + j, i * 3 + j) = w[i] * w[j];
  }
  const double h_w = stats::shannon_entropy(w.w());
  CHECK(channel_lab::spectrum_and_entropy(kron).entropy == doctest::Approx(2.0 * h_w).epsilon(1e-12));

  CHECK_THROWS_AS(channel_lab::spectrum_and_entropy(CMat::Random(3, 3)), std::invalid_argument);
}

TEST_CASE("hayden-winter bound closed forms") {
  const auto w = WeightVector({0.6, 0.4});
  const auto bell = channel_lab::input_family(8, 1.0);
  CHECK(channel_lab::hayden_winter_bound(bell, w) ==
        doctest::Approx(0.36 + 0.16).epsilon(1e-12));

  for (double m : {0.0, 0.5, 0.9}) {
    const auto input = channel_lab::input_family(8, m);
    CHECK(channel_lab::hayden_winter_bound(input, w) ==
          doctest::Approx(m * m * (0.36 + 0.16)).epsilon(1e-10));
  }

  const auto trivial = WeightVector({1.0, 0.0});
  CHECK(channel_lab::hayden_winter_bound(bell, trivial) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fixed-k spectra concentrate on the predicted limit at nonuniform weights") {
  const int n = 100, trials = 20;
  const auto w = WeightVector({0.5, 0.3, 0.2});
  const auto input = channel_lab::input_family(n, 0.5);
  const RVec predicted = asymptotics::fixed_k_spectrum(w, 0.5);
  double deviation = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const auto realization = sampler::ChannelRealization::sample(n, w, 4242, trial);
    const auto z = channel_lab::product_output(realization, input, Regime::kFixedK);
    const RVec eigs = linalg::eigenvalues_descending(z.matrix);
    for (int i = 0; i < eigs.size(); ++i) deviation += std::abs(eigs(i) - predicted(i));
  }
  deviation /= trials * predicted.size();
  CHECK(deviation < 0.02);  // measured ~7e-4 at this size
}

TEST_CASE("gram-based trial statistics agree with the materialized output") {
  const int n = 5;
  const auto w = WeightVector({0.4, 0.35, 0.25});
  const auto input = channel_lab::input_family(n, 0.6);
  const auto realization = sampler::ChannelRealization::sample(n, w, 51, 4);

  const auto stats_fast = channel_lab::linear_trial_stats(realization, input);
  const auto z = channel_lab::product_output(realization, input, Regime::kLinear);
  const auto full = channel_lab::spectrum_and_entropy(z.matrix);
  const CMat compressed = channel_lab::compress_bell(z);

  CHECK(stats_fast.trace_z == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(stats_fast.lambda_max == doctest::Approx(full.eigenvalues(0)).epsilon(1e-10));
  CHECK(stats_fast.entropy == doctest::Approx(full.entropy).epsilon(1e-9));
  CHECK(stats_fast.trace_qzq == doctest::Approx(compressed.trace().real()).epsilon(1e-10));
  CHECK(stats_fast.trace_qzq_sq ==
        doctest::Approx((compressed * compressed).trace().real()).epsilon(1e-10));
  CHECK(stats_fast.trace_z_sq ==
        doctest::Approx((z.matrix * z.matrix).trace().real()).epsilon(1e-10));

  const RVec dense_nonzero = nonzero_descending(full.eigenvalues, 1e-12);
  for (int i = 0; i < dense_nonzero.size(); ++i) {
    CHECK(stats_fast.eigenvalues(i) == doctest::Approx(dense_nonzero(i)).epsilon(1e-9));
  }
}
