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

#ifndef SSAUDIO_PRETRAIN_TRAINER_H_
#define SSAUDIO_PRETRAIN_TRAINER_H_

#include <string>
#include <vector>

#include "dsp/manifest.h"
#include "pretrain/train_config.h"

namespace ssaudio {

struct TrainOutput {
  std::string checkpoint_path;            // final checkpoint
  std::string log_path;                   // JSONL step records
  std::vector<double> epoch_mean_total;   // epochs run by this call
};

// Runs the full self-supervised job: per epoch, sample batches of
// (anchor, same-clip positive, pitch-shifted anchor), push the three views
// through the shared encoder and heads, take one optimizer step on the
// combined objective. Writes step records, periodic checkpoints and the
// effective config into out_dir. Single-threaded and fully reproducible
// for a fixed seed. A non-finite loss aborts with the offending clip ids.
TrainOutput TrainPretrainModel(const Manifest& manifest, const TrainConfig& cfg,
                               const std::string& out_dir);

// Continues a checkpointed run up to cfg_overrides.epochs. Only epochs,
// learning_rate and checkpoint_every may differ from the stored config
// (unless force is set); every applied override is recorded in the log.
TrainOutput ResumeTraining(const std::string& checkpoint_path,
                           const Manifest& manifest,
                           const TrainConfig& cfg_overrides,
                           const std::string& out_dir, bool force = false);

}  // namespace ssaudio

#endif  // SSAUDIO_PRETRAIN_TRAINER_H_
