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

#ifndef SSAUDIO_PRETRAIN_TRAIN_CONFIG_H_
#define SSAUDIO_PRETRAIN_TRAIN_CONFIG_H_

#include <string>

#include <nlohmann/json.hpp>

#include "dsp/mel.h"
#include "losses/losses.h"
#include "model/encoder.h"
#include "nn/adam.h"
#include "sampling/sampler.h"

namespace ssaudio {

// Full pretraining recipe. Struct defaults are the reference settings
// (250 epochs, batch 1024, Adam at 1e-4); desk-scale runs override epochs
// and batch size through config files. The effective config is written
// next to every run's outputs and hashed into every checkpoint.
struct TrainConfig {
  int64_t epochs = 250;
  int64_t batch_size = 1024;
  double learning_rate = 1e-4;
  AdamConfig adam;  // beta1/beta2/epsilon; learning_rate above wins
  LossWeights weights;
  SimilarityMode sim;
  int64_t neighborhood_m = 0;
  double shift_min = 0.8;
  double shift_max = 1.2;
  SamplerConfig::ShiftMode shift_mode = SamplerConfig::ShiftMode::kPerEpoch;
  uint64_t seed = 0;
  int64_t checkpoint_every = 10;
  bool deterministic = true;
  EncoderConfig encoder;
  MelConfig mel;

  void Validate() const;
  SamplerConfig MakeSamplerConfig() const;
  AdamConfig MakeAdamConfig() const;
};

nlohmann::json TrainConfigToJson(const TrainConfig& cfg);
TrainConfig TrainConfigFromJson(const nlohmann::json& j);
TrainConfig LoadTrainConfig(const std::string& path);

}  // namespace ssaudio

#endif  // SSAUDIO_PRETRAIN_TRAIN_CONFIG_H_
