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

#include "pretrain/train_config.h"

#include <fstream>

#include "core/common.h"
#include "sampling/neighborhood.h"

namespace ssaudio {

void TrainConfig::Validate() const {
  SSA_CHECK_CONFIG(epochs > 0) << "epochs";
  SSA_CHECK_CONFIG(batch_size >= 2) << "batch_size";
  SSA_CHECK_CONFIG(learning_rate > 0) << "learning_rate";
  SSA_CHECK_CONFIG(checkpoint_every > 0) << "checkpoint_every";
  SSA_CHECK_CONFIG(neighborhood_m >= 0) << "neighborhood_m";
  weights.Validate();
  sim.Validate();
  encoder.Validate();
  mel.Validate();
  MakeSamplerConfig().Validate();
  SSA_CHECK_CONFIG(mel.n_mels == encoder.n_mels &&
                   mel.segment_frames == encoder.segment_frames)
      << "mel and encoder front-end shapes disagree";
  ValidateNeighborhoodRadius(neighborhood_m,
                             encoder.OutFrames(encoder.segment_frames));
}

SamplerConfig TrainConfig::MakeSamplerConfig() const {
  SamplerConfig cfg;
  cfg.batch_size = batch_size;
  cfg.shift_min = shift_min;
  cfg.shift_max = shift_max;
  cfg.shift_mode = shift_mode;
  return cfg;
}

AdamConfig TrainConfig::MakeAdamConfig() const {
  AdamConfig cfg = adam;
  cfg.learning_rate = learning_rate;
  return cfg;
}

nlohmann::json TrainConfigToJson(const TrainConfig& cfg) {
  return nlohmann::json{
      {"epochs", cfg.epochs},
      {"batch_size", cfg.batch_size},
      {"learning_rate", cfg.learning_rate},
      {"optimizer",
       {{"beta1", cfg.adam.beta1},
        {"beta2", cfg.adam.beta2},
        {"epsilon", cfg.adam.epsilon}}},
      {"weights", LossWeightsToJson(cfg.weights)},
      {"sim", SimilarityModeToJson(cfg.sim)},
      {"neighborhood_m", cfg.neighborhood_m},
      {"shift",
       {{"min", cfg.shift_min},
        {"max", cfg.shift_max},
        {"mode", cfg.shift_mode == SamplerConfig::ShiftMode::kPerEpoch
                     ? "per_epoch"
                     : "per_batch"}}},
      {"seed", cfg.seed},
      {"checkpoint_every", cfg.checkpoint_every},
      {"deterministic", cfg.deterministic},
      {"encoder", EncoderConfigToJson(cfg.encoder)},
      {"mel", MelConfigToJson(cfg.mel)},
  };
}

TrainConfig TrainConfigFromJson(const nlohmann::json& j) {
  TrainConfig cfg;
  cfg.epochs = j.value("epochs", cfg.epochs);
  cfg.batch_size = j.value("batch_size", cfg.batch_size);
  cfg.learning_rate = j.value("learning_rate", cfg.learning_rate);
  if (j.contains("optimizer")) {
    const auto& o = j["optimizer"];
    cfg.adam.beta1 = o.value("beta1", cfg.adam.beta1);
    cfg.adam.beta2 = o.value("beta2", cfg.adam.beta2);
    cfg.adam.epsilon = o.value("epsilon", cfg.adam.epsilon);
  }
  if (j.contains("weights")) cfg.weights = LossWeightsFromJson(j["weights"]);
  if (j.contains("sim")) cfg.sim = SimilarityModeFromJson(j["sim"]);
  cfg.neighborhood_m = j.value("neighborhood_m", cfg.neighborhood_m);
  if (j.contains("shift")) {
    const auto& s = j["shift"];
    cfg.shift_min = s.value("min", cfg.shift_min);
    cfg.shift_max = s.value("max", cfg.shift_max);
    const std::string mode = s.value("mode", "per_epoch");
    if (mode == "per_epoch") {
      cfg.shift_mode = SamplerConfig::ShiftMode::kPerEpoch;
    } else if (mode == "per_batch") {
      cfg.shift_mode = SamplerConfig::ShiftMode::kPerBatch;
    } else {
      SSA_THROW(ConfigError) << "unknown shift mode '" << mode << "'";
    }
  }
  cfg.seed = j.value("seed", cfg.seed);
  cfg.checkpoint_every = j.value("checkpoint_every", cfg.checkpoint_every);
  cfg.deterministic = j.value("deterministic", cfg.deterministic);
  if (j.contains("encoder")) cfg.encoder = EncoderConfigFromJson(j["encoder"]);
  if (j.contains("mel")) cfg.mel = MelConfigFromJson(j["mel"]);
  cfg.Validate();
  return cfg;
}

TrainConfig LoadTrainConfig(const std::string& path) {
  std::ifstream in(path);
  SSA_CHECK_CONFIG(in.good()) << "cannot open config file: " << path;
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  SSA_CHECK_CONFIG(!j.is_discarded()) << "config file is not valid JSON: " << path;
  return TrainConfigFromJson(j);
}

}  // namespace ssaudio
