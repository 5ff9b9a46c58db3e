// Copyright 2026 The ssaudio Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SSAUDIO_TESTS_TESTING_ORACLES_H_
#define SSAUDIO_TESTS_TESTING_ORACLES_H_

#include <cstdint>
#include <vector>

#include "core/tensor.h"
#include "losses/similarity.h"

// Independent scalar re-implementations used as test oracles. Everything
// here is written with plain loops and naive exp sums, deliberately sharing
// no code with src/losses (which uses stacked GEMMs and stable logsumexp).

namespace ssaudio::oracles {

// u'Wv via an explicit triple loop.
double BilinearTripleLoop(const Tensor& u, const Tensor& v, const Tensor& w);

double CosineNaive(const Tensor& u, const Tensor& v, double temperature);

// Pairwise similarity of two rows / two frame columns under `sim`.
double RowSimilarity(const Tensor& za, int64_t i, const Tensor& zp, int64_t j,
                     const SimilarityMode& sim, const Tensor& w);

// mean_i -log( exp(s(i,i)) / sum_j exp(s(i,j)) ), naive exponentials.
double ClipLossNaive(const Tensor& z_anchor, const Tensor& z_positive,
                     const SimilarityMode& sim, const Tensor& w);

// Frame loss of one sample z (d, T'): per anchor frame t,
// -log( sum_{tau in window(t,m)} exp s(t,tau) / sum_i exp s(t,i) ) / M(t),
// averaged over t.
double FrameLossSingleNaive(const Tensor& z, int64_t m,
                            const SimilarityMode& sim, const Tensor& w);

// Batch mean of FrameLossSingleNaive.
double FrameLossViewNaive(const Tensor& z, int64_t m, const SimilarityMode& sim,
                          const Tensor& w);

// Mean over three views.
double FrameLossNaive(const Tensor& za, const Tensor& zp, const Tensor& zs,
                      int64_t m, const SimilarityMode& sim, const Tensor& w);

double PitchLossNaive(const Tensor& z_shifted, const Tensor& z_anchor,
                      const std::vector<double>& a);

// Dominant frequency of a waveform by scanning a dense frequency grid with
// a direct windowed DFT (Goertzel-style correlation); independent of the
// FFT-based code under test.
double DominantFrequencyHz(const std::vector<double>& samples, int sample_rate,
                           double f_lo, double f_hi, double step_hz = 1.0);

// Spectral centroid in Hz over the same direct DFT grid.
double SpectralCentroidHz(const std::vector<double>& samples, int sample_rate,
                          double f_lo, double f_hi, double step_hz = 20.0);

// Independent copy of the mel scale for locating filter centers.
double HzToMelRef(double hz);

}  // namespace ssaudio::oracles

#endif  // SSAUDIO_TESTS_TESTING_ORACLES_H_
