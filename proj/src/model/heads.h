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

#ifndef SSAUDIO_MODEL_HEADS_H_
#define SSAUDIO_MODEL_HEADS_H_

#include <string>
#include <vector>

#include "core/tensor.h"
#include "nn/layers.h"

namespace ssaudio {

// Projections of one batch of embeddings:
//   z_clip  (B, d)      from the temporal mean of h
//   z_frame (B, d, T')  per frame
//   z_pitch (B, T')     per frame scalar
struct HeadOutputsBatch {
  Tensor z_clip;
  Tensor z_frame;
  Tensor z_pitch;
};

// Three shallow heads over the shared embedding: each is one hidden fully
// connected layer of width d with ReLU, then a linear output. The clip head
// reads the temporally pooled embedding; the frame and pitch heads run per
// frame.
class Heads {
 public:
  struct Cache {
    int64_t batch = 0, t_out = 0;
    Linear::Cache clip_hidden, clip_out;
    Tensor clip_relu;
    Linear::Cache frame_hidden, frame_out;
    Tensor frame_relu;
    Linear::Cache pitch_hidden, pitch_out;
    Tensor pitch_relu;
  };

  Heads() = default;
  Heads(int64_t d, uint64_t seed);

  // h: (B, d, T')
  HeadOutputsBatch Forward(const Tensor& h, Cache* cache) const;
  // Returns dL/dh given gradients for the three outputs (any may be empty
  // to skip that path). Accumulates parameter gradients.
  Tensor Backward(const Tensor& d_z_clip, const Tensor& d_z_frame,
                  const Tensor& d_z_pitch, const Cache& cache);

  std::vector<ParamRef> Params(const std::string& prefix = "heads");
  int64_t d() const { return d_; }

 private:
  int64_t d_ = 0;
  Linear clip_hidden_, clip_out_;
  Linear frame_hidden_, frame_out_;
  Linear pitch_hidden_, pitch_out_;
};

// Rows (b*T' + t, :) <-> tensor (B, d, T') reshuffles shared by encoder
// consumers.
Tensor FramesToRows(const Tensor& h);            // (B,d,T') -> (B*T', d)
Tensor RowsToFrames(const Tensor& rows, int64_t b, int64_t d, int64_t t);

}  // namespace ssaudio

#endif  // SSAUDIO_MODEL_HEADS_H_
