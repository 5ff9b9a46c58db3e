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

#ifndef SSAUDIO_MODEL_PRETRAIN_MODEL_H_
#define SSAUDIO_MODEL_PRETRAIN_MODEL_H_

#include <string>
#include <vector>

#include "model/encoder.h"
#include "model/heads.h"

namespace ssaudio {

// Everything the self-supervised objective trains: the shared encoder, the
// three heads, and the bilinear similarity parameters. w_clip and w_frame
// are distinct by default; with shared_bilinear only w_clip exists and is
// used for both similarities.
class PretrainModel {
 public:
  PretrainModel(const EncoderConfig& cfg, uint64_t seed,
                bool shared_bilinear = false);

  Encoder& encoder() { return encoder_; }
  const Encoder& encoder() const { return encoder_; }
  Heads& heads() { return heads_; }

  Tensor& w_clip() { return w_clip_; }
  Tensor& w_frame() { return shared_bilinear_ ? w_clip_ : w_frame_; }
  Tensor& grad_w_clip() { return grad_w_clip_; }
  Tensor& grad_w_frame() {
    return shared_bilinear_ ? grad_w_clip_ : grad_w_frame_;
  }
  bool shared_bilinear() const { return shared_bilinear_; }

  std::vector<ParamRef> Params();
  // Hash of the encoder parameters only (used by the frozen-probe checks).
  std::string EncoderParamHash();

 private:
  Encoder encoder_;
  Heads heads_;
  bool shared_bilinear_;
  Tensor w_clip_, w_frame_;
  Tensor grad_w_clip_, grad_w_frame_;
};

}  // namespace ssaudio

#endif  // SSAUDIO_MODEL_PRETRAIN_MODEL_H_
