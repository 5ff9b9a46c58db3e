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

#ifndef SSAUDIO_MODEL_ENCODER_H_
#define SSAUDIO_MODEL_ENCODER_H_

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "core/tensor.h"
#include "nn/layers.h"

namespace ssaudio {

// Encoder topology. Both architectures are strided 3x3 conv stacks with a
// total time/frequency downsampling of 32; the remaining frequency rows are
// mean-pooled and a per-frame projection (fully connected -> layer norm ->
// tanh) produces the d-dimensional frame embeddings.
//
//   reference_cnn: 5 blocks, widths 12/24/48/96/192. Small enough to train
//                  on a workstation CPU.
//   b0_like:       stem + stage widths mirroring EfficientNet-B0
//                  (32,16,24,40,80,112,192,320 + 1280 head) with plain
//                  convolutions in place of MBConv blocks.
struct EncoderConfig {
  std::string architecture = "reference_cnn";
  int64_t d = 512;
  int64_t n_mels = 64;
  int64_t segment_frames = 96;

  static constexpr int64_t kDownsample = 32;

  int64_t OutFrames(int64_t t) const;  // T' for a T-frame input
  void Validate() const;
};

nlohmann::json EncoderConfigToJson(const EncoderConfig& cfg);
EncoderConfig EncoderConfigFromJson(const nlohmann::json& j);

// Frame-wise embedding h (d x T') plus its temporal mean.
struct Embedding {
  Tensor h;       // (d, T')
  Tensor pooled;  // (d)
};

// (B, d) mean over the last axis of a (B, d, T') tensor.
Tensor TemporalMean(const Tensor& h);

class Encoder {
 public:
  struct Cache {
    std::vector<Conv2d::Cache> conv;
    std::vector<Tensor> relu;
    std::vector<int64_t> pool_shape;  // (B, C, F, T') before frequency pooling
    Linear::Cache proj;
    LayerNorm::Cache norm;
    Tensor tanh;
  };

  Encoder(const EncoderConfig& cfg, uint64_t seed);

  // x: (B, n_mels, T) -> h: (B, d, T'). Pass cache = nullptr for frozen
  // inference; the pass is then pure and deterministic.
  Tensor Forward(const Tensor& x, Cache* cache) const;
  // Accumulates parameter gradients; input gradients are not needed.
  void Backward(const Tensor& grad_h, const Cache& cache);

  // Single-segment convenience for probing.
  Embedding Encode(const Tensor& segment) const;  // segment: (n_mels, T)

  std::vector<ParamRef> Params(const std::string& prefix = "encoder");
  const EncoderConfig& config() const { return cfg_; }

 private:
  EncoderConfig cfg_;
  std::vector<Conv2d> convs_;
  Linear proj_;
  LayerNorm norm_;
};

}  // namespace ssaudio

#endif  // SSAUDIO_MODEL_ENCODER_H_
