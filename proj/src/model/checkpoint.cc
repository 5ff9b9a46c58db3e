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

#include "model/checkpoint.h"

#include "core/common.h"
#include "core/hash.h"

namespace ssaudio {

std::string ConfigHash(const nlohmann::json& config) {
  return HashToHex(Fnv1a64(config.dump()));
}

void SaveCheckpoint(const std::string& path, PretrainModel* model,
                    const nlohmann::json& config, int epoch,
                    const AdamOptimizer* optimizer) {
  TensorArchive archive;
  for (const auto& p : model->Params()) archive.Put(p.name, *p.value);
  if (optimizer) optimizer->SaveState(&archive);
  archive.meta()["kind"] = "checkpoint";
  archive.meta()["config"] = config;
  archive.meta()["config_hash"] = ConfigHash(config);
  archive.meta()["epoch"] = epoch;
  archive.Save(path);
}

EncoderConfig LoadedCheckpoint::encoder_config() const {
  SSA_CHECK_DATA(config.contains("encoder"))
      << "checkpoint config has no encoder section";
  return EncoderConfigFromJson(config["encoder"]);
}

bool LoadedCheckpoint::shared_bilinear() const {
  if (config.contains("sim") && config["sim"].contains("shared_bilinear")) {
    return config["sim"]["shared_bilinear"].get<bool>();
  }
  return false;
}

LoadedCheckpoint LoadCheckpoint(const std::string& path) {
  LoadedCheckpoint out{TensorArchive::Load(path), {}, "", 0};
  const auto& meta = out.archive.meta();
  SSA_CHECK_DATA(meta.value("kind", "") == "checkpoint")
      << path << " is not a checkpoint";
  out.config = meta.value("config", nlohmann::json::object());
  out.config_hash = meta.value("config_hash", "");
  out.epoch = meta.value("epoch", 0);
  return out;
}

void RestoreModel(const LoadedCheckpoint& ckpt, PretrainModel* model,
                  const std::optional<std::string>& expect_hash,
                  bool allow_mismatch) {
  if (expect_hash && !allow_mismatch) {
    SSA_CHECK_CONFIG(*expect_hash == ckpt.config_hash)
        << "checkpoint config hash " << ckpt.config_hash
        << " does not match expected " << *expect_hash
        << " (pass the override flag to load anyway)";
  }
  for (const auto& p : model->Params()) {
    const Tensor& stored = ckpt.archive.Get(p.name);
    SSA_CHECK_DATA(stored.SameShape(*p.value))
        << "checkpoint tensor " << p.name << " has shape "
        << stored.ShapeString() << ", model expects "
        << p.value->ShapeString();
    *p.value = stored;
  }
}

PretrainModel LoadModelFromCheckpoint(const LoadedCheckpoint& ckpt) {
  PretrainModel model(ckpt.encoder_config(), /*seed=*/0,
                      ckpt.shared_bilinear());
  RestoreModel(ckpt, &model);
  return model;
}

}  // namespace ssaudio
