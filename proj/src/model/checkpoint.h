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

#ifndef SSAUDIO_MODEL_CHECKPOINT_H_
#define SSAUDIO_MODEL_CHECKPOINT_H_

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "core/archive.h"
#include "model/pretrain_model.h"
#include "nn/adam.h"

namespace ssaudio {

// Canonical hash of a JSON config (sorted-key dump, FNV-1a 64).
std::string ConfigHash(const nlohmann::json& config);

// Checkpoints are tensor archives: every named parameter tensor, optional
// optimizer state, and a metadata block {config, config_hash, epoch}.
void SaveCheckpoint(const std::string& path, PretrainModel* model,
                    const nlohmann::json& config, int epoch,
                    const AdamOptimizer* optimizer);

struct LoadedCheckpoint {
  TensorArchive archive;
  nlohmann::json config;
  std::string config_hash;
  int epoch = 0;

  EncoderConfig encoder_config() const;
  bool shared_bilinear() const;
};

LoadedCheckpoint LoadCheckpoint(const std::string& path);

// Copies parameter tensors from the archive into the model (shape checked).
// When `expect_hash` is set, the stored config hash must match unless
// allow_mismatch is true.
void RestoreModel(const LoadedCheckpoint& ckpt, PretrainModel* model,
                  const std::optional<std::string>& expect_hash = std::nullopt,
                  bool allow_mismatch = false);

// Rebuilds the model described by the checkpoint's own config and loads its
// parameters. Used by the frozen-encoder consumers.
PretrainModel LoadModelFromCheckpoint(const LoadedCheckpoint& ckpt);

}  // namespace ssaudio

#endif  // SSAUDIO_MODEL_CHECKPOINT_H_
