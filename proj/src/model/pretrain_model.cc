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

#include "model/pretrain_model.h"

#include "core/hash.h"

namespace ssaudio {

namespace {

Tensor IdentityMatrix(int64_t d) {
  Tensor w({d, d});
  for (int64_t i = 0; i < d; ++i) w.at(i, i) = 1.0;
  return w;
}

}  // namespace

PretrainModel::PretrainModel(const EncoderConfig& cfg, uint64_t seed,
                             bool shared_bilinear)
    : encoder_(cfg, seed),
      heads_(cfg.d, DeriveSeed(seed, "heads")),
      shared_bilinear_(shared_bilinear),
      w_clip_(IdentityMatrix(cfg.d)),
      w_frame_(IdentityMatrix(cfg.d)),
      grad_w_clip_({cfg.d, cfg.d}),
      grad_w_frame_({cfg.d, cfg.d}) {}

std::vector<ParamRef> PretrainModel::Params() {
  std::vector<ParamRef> params = encoder_.Params("encoder");
  auto hp = heads_.Params("heads");
  params.insert(params.end(), hp.begin(), hp.end());
  params.push_back({"bilinear.w_clip", &w_clip_, &grad_w_clip_});
  if (!shared_bilinear_) {
    params.push_back({"bilinear.w_frame", &w_frame_, &grad_w_frame_});
  }
  return params;
}

std::string PretrainModel::EncoderParamHash() {
  uint64_t h = 0xcbf29ce484222325ull;
  for (const auto& p : encoder_.Params("encoder")) {
    h = Fnv1a64(p.name, h);
    h = Fnv1a64(p.value->data(),
                static_cast<size_t>(p.value->size()) * sizeof(double), h);
  }
  return HashToHex(h);
}

}  // namespace ssaudio
