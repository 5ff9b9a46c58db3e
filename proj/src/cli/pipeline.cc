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

#include "cli/pipeline.h"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "cli/table.h"
#include "core/hash.h"
#include "model/checkpoint.h"
#include "synthgen/synthgen.h"

namespace ssaudio {

namespace fs = std::filesystem;

void RunManifest::RecordStage(const std::string& stage,
                              const std::string& config_hash,
                              const std::vector<std::string>& outputs) {
  nlohmann::json entry{{"stage", stage}, {"config_hash", config_hash}};
  nlohmann::json outs = nlohmann::json::object();
  for (const auto& path : outputs) {
    const std::string hash = HashFileHex(path);
    outs[path] = hash;
    recorded_[path] = hash;
  }
  entry["outputs"] = std::move(outs);
  stages_.push_back(std::move(entry));
}

void RunManifest::VerifyArtifact(const std::string& path) const {
  auto it = recorded_.find(path);
  if (it == recorded_.end()) {
    throw AcceptanceFailure("pipeline integrity: artifact '" + path +
                            "' was never produced by a recorded stage");
  }
  const std::string now = HashFileHex(path);
  if (now != it->second) {
    throw AcceptanceFailure("pipeline integrity: artifact '" + path +
                            "' hash " + now + " does not match recorded " +
                            it->second);
  }
}

void RunManifest::Save(const std::string& path) const {
  std::ofstream out(path, std::ios::trunc);
  SSA_CHECK_DATA(out.good()) << "cannot write run manifest: " << path;
  out << nlohmann::json{{"stages", stages_}}.dump(2) << "\n";
}

DeskCorpora GenerateDeskCorpora(const std::string& dir, uint64_t seed,
                                const DeskScale& scale) {
  DeskCorpora out;

  // mixed pretraining corpus: tones across the keyboard plus textures
  {
    ToneBankSpec tones;
    tones.n_clips = scale.pretrain_tones;
    tones.duration_sec = 2.2;
    tones.seed = DeriveSeed(seed, "pretrain.tones");
    TextureSpec textures;
    textures.n_clips = scale.pretrain_textures;
    textures.duration_sec = 2.2;
    textures.seed = DeriveSeed(seed, "pretrain.textures");
    auto clips = GenToneBank(tones);
    auto tex = GenTextureClips(textures);
    for (auto& c : tex) {
      c.label = -1;  // unlabeled for pretraining
      clips.push_back(std::move(c));
    }
    for (auto& c : clips) c.label = -1;
    out.pretrain_manifest = WriteCorpus(clips, dir + "/pretrain_mix");
  }
  {
    ToneBankSpec tones;
    tones.n_clips = scale.probe_tones;
    tones.duration_sec = 1.6;
    tones.seed = DeriveSeed(seed, "probe.tones");
    out.tones_manifest = WriteCorpus(GenToneBank(tones), dir + "/tones");
  }
  {
    EventTrackSpec events;
    events.n_clips = scale.probe_events;
    events.duration_sec = 4.8;
    events.seed = DeriveSeed(seed, "probe.events");
    out.events_manifest = WriteCorpus(GenEventTrack(events), dir + "/events");
  }
  {
    TextureSpec textures;
    textures.n_clips = scale.probe_textures;
    textures.duration_sec = 2.2;
    textures.seed = DeriveSeed(seed, "probe.textures");
    out.textures_manifest =
        WriteCorpus(GenTextureClips(textures), dir + "/textures");
  }
  return out;
}

TrainConfig DeskTrainConfig(int64_t epochs, int64_t batch_size, uint64_t seed,
                            double alpha, double beta,
                            SimilarityMode::Kind sim_kind) {
  TrainConfig cfg;
  cfg.epochs = epochs;
  cfg.batch_size = batch_size;
  cfg.seed = seed;
  cfg.weights.alpha = alpha;
  cfg.weights.beta = beta;
  cfg.sim.kind = sim_kind;
  cfg.checkpoint_every = 10;
  cfg.Validate();
  return cfg;
}

std::string VariantName(const TrainConfig& cfg) {
  std::string name = "L_clip";
  if (cfg.weights.alpha > 0) name += "+L_frame";
  if (cfg.weights.beta > 0) name += "+L_pitch";
  if (cfg.sim.kind == SimilarityMode::Kind::kCosine) name += " (cosine)";
  return name;
}

TaskReports ProbeCheckpoint(const std::string& checkpoint_path,
                            const DeskCorpora& corpora,
                            const std::string& work_dir,
                            const std::string& variant, uint64_t probe_seed,
                            int64_t probe_epochs, RunManifest* manifest) {
  fs::create_directories(work_dir);
  if (manifest) manifest->VerifyArtifact(checkpoint_path);

  ProbeConfig probe_cfg;
  probe_cfg.epochs = probe_epochs;
  probe_cfg.seed = probe_seed;

  auto run = [&](const std::string& manifest_path, const char* task_name,
                 const char* tag) {
    const ProbeTask task = ProbeTask::FromName(
        task_name, task_name == std::string("pitch") ? 88
        : task_name == std::string("sed")            ? 4
                                                     : 4);
    const EmbedMode mode = task.RequiredMode();
    EmbeddingArchive archive =
        EmbedCorpus(ReadManifest(manifest_path), checkpoint_path, mode);
    const std::string archive_path =
        (fs::path(work_dir) / (std::string(tag) + ".emb")).string();
    archive.Save(archive_path);
    if (manifest) {
      manifest->RecordStage(std::string("embed:") + tag,
                            archive.checkpoint_hash, {archive_path});
      manifest->VerifyArtifact(archive_path);
    }
    ProbeReport report = RunProbe(archive, task, probe_cfg);
    report.variant = variant;
    const std::string report_path =
        (fs::path(work_dir) / (std::string("report_") + tag + ".json")).string();
    report.Save(report_path);
    if (manifest) {
      manifest->RecordStage(std::string("probe:") + tag, "", {report_path});
    }
    return report;
  };

  TaskReports reports;
  reports.pitch = run(corpora.tones_manifest, "pitch", "pitch");
  reports.sed = run(corpora.events_manifest, "sed", "sed");
  reports.clip = run(corpora.textures_manifest, "clip", "clip");
  return reports;
}

std::string WriteRandomInitCheckpoint(const std::string& dir,
                                      const TrainConfig& cfg) {
  fs::create_directories(dir);
  PretrainModel model(cfg.encoder, cfg.seed, cfg.sim.shared_bilinear);
  const std::string path = (fs::path(dir) / "ckpt_random.ckpt").string();
  SaveCheckpoint(path, &model, TrainConfigToJson(cfg), /*epoch=*/0,
                 /*optimizer=*/nullptr);
  return path;
}

void RunReproSuite(const ReproOptions& options) {
  SSA_CHECK_CONFIG(options.suite == "quick" || options.suite == "full-desk")
      << "unknown suite '" << options.suite << "'";
  const bool quick = options.suite == "quick";
  const std::string& out_dir = options.out_dir;
  fs::create_directories(out_dir);
  RunManifest manifest;

  DeskScale scale;
  if (quick) {
    scale = DeskScale{32, 32, 122, 24, 48};
  }
  std::cout << "[repro] generating corpora" << std::endl;
  const uint64_t corpus_seed = 17;
  DeskCorpora corpora =
      GenerateDeskCorpora(out_dir + "/corpora", corpus_seed, scale);
  manifest.RecordStage(
      "gen", HashToHex(Fnv1a64("corpora", corpus_seed)),
      {corpora.pretrain_manifest, corpora.tones_manifest,
       corpora.events_manifest, corpora.textures_manifest});

  const int64_t epochs = quick ? 8 : 20;
  const int64_t batch = quick ? 16 : 32;
  const int64_t probe_epochs = quick ? 80 : 150;
  const Manifest pretrain_manifest = ReadManifest(corpora.pretrain_manifest);

  struct Arm {
    std::string name;
    double alpha, beta;
    uint64_t seed;
  };
  std::vector<Arm> arms;
  if (quick) {
    arms.push_back({"full", 1.0, 1.0, 0});
  } else {
    for (uint64_t s = 0; s < 3; ++s) arms.push_back({"full", 1.0, 1.0, s});
    for (uint64_t s = 0; s < 3; ++s) arms.push_back({"clip_only", 0.0, 0.0, s});
  }

  std::vector<ProbeReport> all_reports;
  std::map<std::string, std::vector<TaskReports>> by_arm;
  for (const auto& arm : arms) {
    const std::string run_dir =
        out_dir + "/" + arm.name + "_seed" + std::to_string(arm.seed);
    TrainConfig cfg = DeskTrainConfig(epochs, batch, arm.seed, arm.alpha,
                                      arm.beta, SimilarityMode::Kind::kBilinear);
    std::cout << "[repro] pretraining " << arm.name << " seed " << arm.seed
              << " (" << epochs << " epochs)" << std::endl;
    manifest.VerifyArtifact(corpora.pretrain_manifest);
    TrainOutput train = TrainPretrainModel(pretrain_manifest, cfg, run_dir);
    manifest.RecordStage("pretrain:" + arm.name + ":" + std::to_string(arm.seed),
                         ConfigHash(TrainConfigToJson(cfg)),
                         {train.checkpoint_path});

    if (train.epoch_mean_total.back() >= train.epoch_mean_total.front()) {
      std::cout << "[repro] warning: no loss descent for " << arm.name
                << " seed " << arm.seed << std::endl;
    }

    std::cout << "[repro] probing " << arm.name << " seed " << arm.seed
              << std::endl;
    TaskReports reports = ProbeCheckpoint(
        train.checkpoint_path, corpora, run_dir + "/probe",
        VariantName(cfg), /*probe_seed=*/arm.seed, probe_epochs, &manifest);
    by_arm[arm.name].push_back(reports);
    if (arm.seed == 0) {
      all_reports.push_back(reports.pitch);
      all_reports.push_back(reports.sed);
      all_reports.push_back(reports.clip);
    }
  }

  // frozen random-baseline row
  {
    TrainConfig cfg = DeskTrainConfig(epochs, batch, /*seed=*/0, 1.0, 1.0,
                                      SimilarityMode::Kind::kBilinear);
    const std::string rnd_ckpt =
        WriteRandomInitCheckpoint(out_dir + "/random_init", cfg);
    manifest.RecordStage("random_init", ConfigHash(TrainConfigToJson(cfg)),
                         {rnd_ckpt});
    TaskReports reports =
        ProbeCheckpoint(rnd_ckpt, corpora, out_dir + "/random_init/probe",
                        "random_init", /*probe_seed=*/0, probe_epochs,
                        &manifest);
    by_arm["random_init"].push_back(reports);
    all_reports.push_back(reports.pitch);
    all_reports.push_back(reports.sed);
    all_reports.push_back(reports.clip);
  }

  ComparisonTable table = BuildComparisonTable(all_reports);
  {
    std::ofstream txt(fs::path(out_dir) / "table.txt");
    txt << table.ToText(/*include_reference_row=*/false);
    std::ofstream csv(fs::path(out_dir) / "table.csv");
    csv << table.ToCsv(false);
    std::ofstream js(fs::path(out_dir) / "table.json");
    js << table.ToJson(false).dump(2) << "\n";
  }
  manifest.Save((fs::path(out_dir) / "run_manifest.json").string());

  // mechanism checks
  auto mean_metric = [&](const std::string& arm, auto select) {
    const auto& runs = by_arm[arm];
    double acc = 0.0;
    for (const auto& r : runs) acc += select(r);
    return acc / static_cast<double>(runs.size());
  };
  auto pitch_acc = [](const TaskReports& r) {
    return r.pitch.metrics.at("pitch_accuracy");
  };
  auto frame_f1 = [](const TaskReports& r) {
    return r.sed.metrics.at("frame_f1");
  };

  for (const auto& [arm, runs] : by_arm) {
    for (const auto& r : runs) {
      if (r.pitch.metrics.at("chroma_accuracy") <
          r.pitch.metrics.at("pitch_accuracy")) {
        throw AcceptanceFailure("chroma accuracy below pitch accuracy for " +
                                arm);
      }
    }
  }
  if (!quick) {
    const double full_pitch = mean_metric("full", pitch_acc);
    const double clip_pitch = mean_metric("clip_only", pitch_acc);
    const double rnd_pitch = mean_metric("random_init", pitch_acc);
    const double full_f1 = mean_metric("full", frame_f1);
    const double clip_f1 = mean_metric("clip_only", frame_f1);
    std::cout << "[repro] pitch accuracy: full " << full_pitch << ", clip-only "
              << clip_pitch << ", random " << rnd_pitch << std::endl;
    std::cout << "[repro] frame F1: full " << full_f1 << ", clip-only "
              << clip_f1 << std::endl;
    if (!(full_pitch > clip_pitch && clip_pitch > rnd_pitch &&
          full_pitch > rnd_pitch)) {
      throw AcceptanceFailure("pitch-probe ordering (full > clip-only > random) "
                              "did not hold");
    }
    if (!(full_f1 > clip_f1)) {
      throw AcceptanceFailure("frame-F1 ordering (with frame loss > clip-only) "
                              "did not hold");
    }
  }
  std::cout << "[repro] suite '" << options.suite << "' completed, artifacts in "
            << out_dir << std::endl;
}

}  // namespace ssaudio
