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

#ifndef SSAUDIO_LOSSES_LOSSES_H_
#define SSAUDIO_LOSSES_LOSSES_H_

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "core/tensor.h"
#include "losses/similarity.h"

namespace ssaudio {

// Weights of the combined objective L = L_clip + alpha L_frame + beta L_pitch.
struct LossWeights {
  double alpha = 1.0;
  double beta = 1.0;

  void Validate() const;
};

nlohmann::json LossWeightsToJson(const LossWeights& w);
LossWeights LossWeightsFromJson(const nlohmann::json& j);

// Numerically stable log(sum_i exp(v_i)); subtracts the max first.
double LogSumExp(const double* values, int64_t n);

// ----------------------------------------------------------------------
// Clip-level contrast. Row i of the logits matrix holds the similarities
// of anchor i against every candidate; the diagonal entry is its positive
// and the denominator runs over the full row (positive included).
// Value: mean_i -log softmax(S_i.)_i. d_logits may be null.
double LossClipFromLogits(const Tensor& logits, Tensor* d_logits);

struct ClipLossOut {
  double value = 0.0;
  Tensor d_anchor;    // (B, d)
  Tensor d_positive;  // (B, d)
  Tensor d_w;         // (d, d); zero in cosine mode
};

// z_anchor, z_positive: (B, d) paired rows; negatives for row i are all
// other rows of z_positive. Requires B >= 2.
ClipLossOut LossClip(const Tensor& z_anchor, const Tensor& z_positive,
                     const SimilarityMode& sim, const Tensor& w,
                     bool want_grads = true);

// ----------------------------------------------------------------------
// Frame-level contrast within one segment. For each anchor frame t the
// numerator sums exp-similarities over the neighborhood window T''(t) and
// the denominator over all frames; each anchor's term is divided by
// M(t) = |T''(t)| and the result is averaged over anchors.
double LossFrameFromLogits(const Tensor& logits, int64_t m, Tensor* d_logits);

// z: (d, T') frame representations of one sample. Gradients (if requested)
// are accumulated into *d_z / *d_w.
double LossFrameSingle(const Tensor& z, int64_t m, const SimilarityMode& sim,
                       const Tensor& w, Tensor* d_z = nullptr,
                       Tensor* d_w = nullptr);

struct FrameViewOut {
  double value = 0.0;
  Tensor d_z;  // (B, d, T')
  Tensor d_w;  // (d, d)
};

// Batch mean of LossFrameSingle over view z: (B, d, T').
FrameViewOut LossFrameView(const Tensor& z, int64_t m,
                           const SimilarityMode& sim, const Tensor& w,
                           bool want_grads = true);

struct FrameLossOut {
  double value = 0.0;
  Tensor d_anchor, d_positive, d_shifted;  // (B, d, T') each
  Tensor d_w;                              // (d, d)
};

// Mean of the three per-view losses (anchor, positive, pitch-shifted).
FrameLossOut LossFrame(const Tensor& z_anchor, const Tensor& z_positive,
                       const Tensor& z_shifted, int64_t m,
                       const SimilarityMode& sim, const Tensor& w,
                       bool want_grads = true);

// ----------------------------------------------------------------------
// Pitch-shift regression: mean over the batch of
// || z_pitch(shifted) - z_pitch(anchor) - a * 1 ||^2, a broadcast over T'.
struct PitchLossOut {
  double value = 0.0;
  Tensor d_shifted, d_anchor;   // (B, T')
  std::vector<double> d_shift;  // (B)
};

PitchLossOut LossPitch(const Tensor& z_pitch_shifted,
                       const Tensor& z_pitch_anchor,
                       const std::vector<double>& shift_params,
                       bool want_grads = true);

// ----------------------------------------------------------------------
// Combined objective with per-term breakdown. Zero-weighted terms are
// still evaluated (for logging) but contribute no gradient.
struct TotalLossInputs {
  Tensor z_clip_anchor, z_clip_positive;                    // (B, d)
  Tensor z_frame_anchor, z_frame_positive, z_frame_shifted; // (B, d, T')
  Tensor z_pitch_anchor, z_pitch_shifted;                   // (B, T')
  std::vector<double> shift_params;                         // (B)
  int64_t neighborhood_m = 0;
};

struct TotalLossOut {
  double total = 0.0, clip = 0.0, frame = 0.0, pitch = 0.0;
  Tensor d_z_clip_anchor, d_z_clip_positive;
  Tensor d_z_frame_anchor, d_z_frame_positive, d_z_frame_shifted;
  Tensor d_z_pitch_anchor, d_z_pitch_shifted;
  std::vector<double> d_shift;
  Tensor d_w_clip, d_w_frame;
};

TotalLossOut LossTotal(const TotalLossInputs& in, const LossWeights& weights,
                       const SimilarityMode& sim, const Tensor& w_clip,
                       const Tensor& w_frame, bool want_grads = true);

}  // namespace ssaudio

#endif  // SSAUDIO_LOSSES_LOSSES_H_
