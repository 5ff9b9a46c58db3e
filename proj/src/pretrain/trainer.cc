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

#include "pretrain/trainer.h"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "core/common.h"
#include "model/checkpoint.h"
#include "model/pretrain_model.h"

namespace ssaudio {

namespace fs = std::filesystem;

namespace {

std::string CheckpointName(int64_t epoch) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "ckpt_epoch_%04lld.ckpt",
                static_cast<long long>(epoch));
  return buf;
}

std::string JoinIds(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

struct RunState {
  PretrainModel model;
  AdamOptimizer optimizer;
};

TrainOutput RunEpochs(const Manifest& manifest, const TrainConfig& cfg,
                      const std::string& out_dir, int64_t start_epoch,
                      RunState* state, std::ofstream* log) {
  CorpusCache corpus(manifest, cfg.mel);
  BatchSampler sampler(&corpus, cfg.MakeSamplerConfig(), cfg.seed);

  const nlohmann::json config_json = TrainConfigToJson(cfg);
  {
    std::ofstream cfg_out(fs::path(out_dir) / "effective_config.json");
    cfg_out << config_json.dump(2) << "\n";
  }

  TrainOutput out;
  out.log_path = (fs::path(out_dir) / "train_log.jsonl").string();
  const auto t0 = std::chrono::steady_clock::now();

  for (int64_t epoch = start_epoch; epoch < cfg.epochs; ++epoch) {
    sampler.BeginEpoch(epoch);
    double epoch_total = 0.0;
    int64_t steps = 0;
    while (sampler.HasNext()) {
      TrainingBatch batch = sampler.NextBatch();

      Encoder::Cache enc_a, enc_p, enc_s;
      Tensor h_a = state->model.encoder().Forward(batch.anchors, &enc_a);
      Tensor h_p = state->model.encoder().Forward(batch.positives, &enc_p);
      Tensor h_s = state->model.encoder().Forward(batch.shifted, &enc_s);

      Heads::Cache head_a, head_p, head_s;
      HeadOutputsBatch out_a = state->model.heads().Forward(h_a, &head_a);
      HeadOutputsBatch out_p = state->model.heads().Forward(h_p, &head_p);
      HeadOutputsBatch out_s = state->model.heads().Forward(h_s, &head_s);

      TotalLossInputs inputs;
      inputs.z_clip_anchor = std::move(out_a.z_clip);
      inputs.z_clip_positive = std::move(out_p.z_clip);
      inputs.z_frame_anchor = std::move(out_a.z_frame);
      inputs.z_frame_positive = std::move(out_p.z_frame);
      inputs.z_frame_shifted = std::move(out_s.z_frame);
      inputs.z_pitch_anchor = std::move(out_a.z_pitch);
      inputs.z_pitch_shifted = std::move(out_s.z_pitch);
      inputs.shift_params = batch.shift_params;
      inputs.neighborhood_m = cfg.neighborhood_m;

      TotalLossOut loss =
          LossTotal(inputs, cfg.weights, cfg.sim, state->model.w_clip(),
                    state->model.w_frame(), /*want_grads=*/true);
      if (!std::isfinite(loss.total)) {
        SSA_THROW(NumericError)
            << "non-finite loss at epoch " << epoch << " step " << steps
            << " (clip " << loss.clip << ", frame " << loss.frame
            << ", pitch " << loss.pitch << "); batch clips: "
            << JoinIds(batch.source_ids);
      }

      state->optimizer.ZeroGrads();
      const Tensor empty;
      Tensor dh_a = state->model.heads().Backward(
          loss.d_z_clip_anchor, loss.d_z_frame_anchor, loss.d_z_pitch_anchor,
          head_a);
      Tensor dh_p = state->model.heads().Backward(
          loss.d_z_clip_positive, loss.d_z_frame_positive, empty, head_p);
      Tensor dh_s = state->model.heads().Backward(
          empty, loss.d_z_frame_shifted, loss.d_z_pitch_shifted, head_s);
      state->model.encoder().Backward(dh_a, enc_a);
      state->model.encoder().Backward(dh_p, enc_p);
      state->model.encoder().Backward(dh_s, enc_s);
      state->model.grad_w_clip().Add(loss.d_w_clip);
      state->model.grad_w_frame().Add(loss.d_w_frame);
      state->optimizer.Step();

      const double wall =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      nlohmann::json rec{{"epoch", epoch},
                         {"step", steps},
                         {"total", loss.total},
                         {"clip", loss.clip},
                         {"frame", loss.frame},
                         {"pitch", loss.pitch},
                         {"shift", batch.shift_params.front()},
                         {"wall_time", wall}};
      (*log) << rec.dump() << "\n";
      log->flush();

      epoch_total += loss.total;
      ++steps;
    }
    SSA_CHECK_DATA(steps > 0) << "no full batch in epoch " << epoch;
    out.epoch_mean_total.push_back(epoch_total / static_cast<double>(steps));

    if ((epoch + 1) % cfg.checkpoint_every == 0 && epoch + 1 < cfg.epochs) {
      SaveCheckpoint((fs::path(out_dir) / CheckpointName(epoch + 1)).string(),
                     &state->model, config_json, static_cast<int>(epoch + 1),
                     &state->optimizer);
    }
  }

  out.checkpoint_path = (fs::path(out_dir) / "ckpt_final.ckpt").string();
  SaveCheckpoint(out.checkpoint_path, &state->model, config_json,
                 static_cast<int>(cfg.epochs), &state->optimizer);
  return out;
}

}  // namespace

TrainOutput TrainPretrainModel(const Manifest& manifest, const TrainConfig& cfg,
                               const std::string& out_dir) {
  cfg.Validate();
  fs::create_directories(out_dir);

  RunState state{
      PretrainModel(cfg.encoder, cfg.seed, cfg.sim.shared_bilinear),
      AdamOptimizer({}, {})};
  state.optimizer = AdamOptimizer(state.model.Params(), cfg.MakeAdamConfig());

  std::ofstream log(fs::path(out_dir) / "train_log.jsonl", std::ios::trunc);
  SSA_CHECK_DATA(log.good()) << "cannot open training log in " << out_dir;
  return RunEpochs(manifest, cfg, out_dir, /*start_epoch=*/0, &state, &log);
}

TrainOutput ResumeTraining(const std::string& checkpoint_path,
                           const Manifest& manifest,
                           const TrainConfig& cfg_overrides,
                           const std::string& out_dir, bool force) {
  LoadedCheckpoint ckpt = LoadCheckpoint(checkpoint_path);
  TrainConfig stored = TrainConfigFromJson(ckpt.config);

  // Only schedule-level fields may change across a resume.
  TrainConfig merged = stored;
  merged.epochs = cfg_overrides.epochs;
  merged.learning_rate = cfg_overrides.learning_rate;
  merged.checkpoint_every = cfg_overrides.checkpoint_every;
  if (!force) {
    nlohmann::json requested = TrainConfigToJson(cfg_overrides);
    nlohmann::json allowed = TrainConfigToJson(merged);
    for (const auto& key : {"epochs", "learning_rate", "checkpoint_every"}) {
      requested.erase(key);
      allowed.erase(key);
    }
    SSA_CHECK_CONFIG(requested == allowed)
        << "resume config differs from checkpoint in non-overridable fields "
        << "(only epochs, learning_rate, checkpoint_every may change; use "
        << "force to override)";
  } else {
    merged = cfg_overrides;
  }
  merged.Validate();
  SSA_CHECK_CONFIG(merged.epochs > ckpt.epoch)
      << "checkpoint already has " << ckpt.epoch << " epochs, requested "
      << merged.epochs;

  fs::create_directories(out_dir);
  RunState state{
      PretrainModel(merged.encoder, merged.seed, merged.sim.shared_bilinear),
      AdamOptimizer({}, {})};
  RestoreModel(ckpt, &state.model);
  state.optimizer = AdamOptimizer(state.model.Params(), merged.MakeAdamConfig());
  state.optimizer.LoadState(ckpt.archive);

  std::ofstream log(fs::path(out_dir) / "train_log.jsonl", std::ios::app);
  SSA_CHECK_DATA(log.good()) << "cannot open training log in " << out_dir;
  nlohmann::json resume_rec{{"resumed_from", checkpoint_path},
                            {"epoch", ckpt.epoch},
                            {"learning_rate", merged.learning_rate},
                            {"epochs", merged.epochs}};
  if (merged.learning_rate != stored.learning_rate) {
    resume_rec["override_learning_rate"] = {{"from", stored.learning_rate},
                                            {"to", merged.learning_rate}};
  }
  log << resume_rec.dump() << "\n";

  return RunEpochs(manifest, merged, out_dir, ckpt.epoch, &state, &log);
}

}  // namespace ssaudio
