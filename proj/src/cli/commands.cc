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

#include "cli/commands.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli/pipeline.h"
#include "cli/table.h"
#include "core/common.h"
#include "model/checkpoint.h"
#include "synthgen/synthgen.h"

namespace ssaudio {

namespace fs = std::filesystem;

namespace {

// Relative output paths resolve under SSAUDIO_WORK_DIR when it is set.
std::string ResolveOut(const std::string& path) {
  const char* base = std::getenv("SSAUDIO_WORK_DIR");
  if (!base || *base == '\0' || fs::path(path).is_absolute()) return path;
  return (fs::path(base) / path).string();
}

struct GenArgs {
  std::string kind = "tone_bank";
  std::string out = "corpus";
  int n_clips = 64;
  double duration = 2.2;
  uint64_t seed = 0;
  int classes = 4;
  int midi_min = 36, midi_max = 96;
};

int CmdGen(const GenArgs& a) {
  const std::string out = ResolveOut(a.out);
  std::vector<GeneratedClip> clips;
  if (a.kind == "tone_bank") {
    ToneBankSpec spec;
    spec.n_clips = a.n_clips;
    spec.duration_sec = a.duration;
    spec.seed = a.seed;
    spec.midi_min = a.midi_min;
    spec.midi_max = a.midi_max;
    clips = GenToneBank(spec);
  } else if (a.kind == "event_track") {
    EventTrackSpec spec;
    spec.n_clips = a.n_clips;
    spec.duration_sec = a.duration;
    spec.seed = a.seed;
    spec.n_classes = a.classes;
    clips = GenEventTrack(spec);
  } else if (a.kind == "texture_clips") {
    TextureSpec spec;
    spec.n_clips = a.n_clips;
    spec.duration_sec = a.duration;
    spec.seed = a.seed;
    spec.n_classes = a.classes;
    clips = GenTextureClips(spec);
  } else if (a.kind == "mixed") {
    ToneBankSpec tones;
    tones.n_clips = a.n_clips / 2;
    tones.duration_sec = a.duration;
    tones.seed = DeriveSeed(a.seed, "mixed.tones");
    TextureSpec textures;
    textures.n_clips = a.n_clips - a.n_clips / 2;
    textures.duration_sec = a.duration;
    textures.seed = DeriveSeed(a.seed, "mixed.textures");
    clips = GenToneBank(tones);
    auto tex = GenTextureClips(textures);
    clips.insert(clips.end(), std::make_move_iterator(tex.begin()),
                 std::make_move_iterator(tex.end()));
    for (auto& c : clips) c.label = -1;
  } else {
    SSA_THROW(ConfigError) << "unknown corpus kind '" << a.kind << "'";
  }
  const std::string manifest = WriteCorpus(clips, out);
  std::cout << "wrote " << clips.size() << " clips, manifest: " << manifest
            << std::endl;
  return kExitOk;
}

struct PretrainArgs {
  std::string manifest_path;
  std::string config_path;
  std::string out = "pretrain_out";
  std::string resume;
  bool force = false;
  // optional CLI overrides; negative/empty means "not given"
  double learning_rate = -1;
  long long epochs = -1, batch_size = -1, seed = -1;
  double alpha = -1, beta = -1;
  std::string sim;
  bool deterministic = false;
};

int CmdPretrain(const PretrainArgs& a) {
  TrainConfig cfg;
  if (!a.config_path.empty()) {
    cfg = LoadTrainConfig(a.config_path);
  }
  if (a.epochs >= 0) cfg.epochs = a.epochs;
  if (a.batch_size >= 0) cfg.batch_size = a.batch_size;
  if (a.learning_rate >= 0) cfg.learning_rate = a.learning_rate;
  if (a.seed >= 0) cfg.seed = static_cast<uint64_t>(a.seed);
  if (a.alpha >= 0) cfg.weights.alpha = a.alpha;
  if (a.beta >= 0) cfg.weights.beta = a.beta;
  if (a.deterministic) cfg.deterministic = true;
  if (!a.sim.empty()) {
    cfg.sim = SimilarityModeFromJson({{"mode", a.sim}});
  }
  cfg.Validate();

  const Manifest manifest = ReadManifest(a.manifest_path);
  const std::string out = ResolveOut(a.out);
  TrainOutput result;
  if (a.resume.empty()) {
    result = TrainPretrainModel(manifest, cfg, out);
  } else {
    result = ResumeTraining(a.resume, manifest, cfg, out, a.force);
  }
  std::cout << "final checkpoint: " << result.checkpoint_path << std::endl;
  std::cout << "training log:     " << result.log_path << std::endl;
  if (!result.epoch_mean_total.empty()) {
    std::cout << "epoch mean loss:  " << result.epoch_mean_total.front()
              << " -> " << result.epoch_mean_total.back() << std::endl;
  }
  return kExitOk;
}

struct EmbedArgs {
  std::string ckpt, manifest_path, mode = "pooled", out = "embeddings.emb";
};

int CmdEmbed(const EmbedArgs& a) {
  SSA_CHECK_CONFIG(a.mode == "pooled" || a.mode == "framewise")
      << "mode must be pooled or framewise";
  const EmbedMode mode =
      a.mode == "pooled" ? EmbedMode::kPooled : EmbedMode::kFramewise;
  EmbeddingArchive archive =
      EmbedCorpus(ReadManifest(a.manifest_path), a.ckpt, mode);
  const std::string out = ResolveOut(a.out);
  archive.Save(out);
  std::cout << "embedded " << archive.clips.size() << " clips (" << a.mode
            << ", d=" << archive.d << ") -> " << out << std::endl;
  return kExitOk;
}

struct ProbeArgs {
  std::string archive, task = "clip", out = "report.json", variant;
  int classes = 0;
  long long epochs = 150, seed = 0;
};

int CmdProbe(const ProbeArgs& a) {
  const ProbeTask task = ProbeTask::FromName(
      a.task, a.classes > 0 ? a.classes : (a.task == "pitch" ? 88 : 4));
  ProbeConfig cfg;
  cfg.epochs = a.epochs;
  cfg.seed = static_cast<uint64_t>(a.seed);
  EmbeddingArchive archive = EmbeddingArchive::Load(a.archive);
  ProbeReport report = RunProbe(archive, task, cfg);
  report.variant = a.variant;
  const std::string out = ResolveOut(a.out);
  report.Save(out);
  std::cout << report.ToJson().dump(2) << std::endl;
  return kExitOk;
}

struct ReportArgs {
  std::string glob;
  std::string out, csv, json_out;
  bool paper_values = false;
};

int CmdReport(const ReportArgs& a) {
  const auto paths = ExpandGlob(a.glob);
  SSA_CHECK_DATA(!paths.empty()) << "no reports match '" << a.glob << "'";
  std::vector<ProbeReport> reports;
  for (const auto& p : paths) reports.push_back(ProbeReport::Load(p));
  ComparisonTable table = BuildComparisonTable(reports);

  const std::string text = table.ToText(a.paper_values);
  std::cout << text;
  if (!a.out.empty()) {
    std::ofstream f(ResolveOut(a.out), std::ios::trunc);
    f << text;
  }
  if (!a.csv.empty()) {
    std::ofstream f(ResolveOut(a.csv), std::ios::trunc);
    f << table.ToCsv(a.paper_values);
  }
  if (!a.json_out.empty()) {
    std::ofstream f(ResolveOut(a.json_out), std::ios::trunc);
    f << table.ToJson(a.paper_values).dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args) {
  CLI::App app{"self-supervised audio representations: multi-strategy "
               "contrastive pretraining, frozen-encoder probing, synthetic "
               "desk corpora"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* cmd_gen = app.add_subcommand("gen", "generate a synthetic corpus");
  cmd_gen->add_option("--kind", gen.kind,
                      "tone_bank | event_track | texture_clips | mixed");
  cmd_gen->add_option("--out", gen.out, "output directory");
  cmd_gen->add_option("--n-clips", gen.n_clips);
  cmd_gen->add_option("--duration", gen.duration, "clip seconds");
  cmd_gen->add_option("--seed", gen.seed);
  cmd_gen->add_option("--classes", gen.classes, "event/texture classes");
  cmd_gen->add_option("--midi-min", gen.midi_min);
  cmd_gen->add_option("--midi-max", gen.midi_max);

  PretrainArgs pre;
  auto* cmd_pre = app.add_subcommand("pretrain", "run self-supervised training");
  cmd_pre->add_option("--manifest", pre.manifest_path)->required();
  cmd_pre->add_option("--config", pre.config_path, "JSON config file");
  cmd_pre->add_option("--out", pre.out);
  cmd_pre->add_option("--resume", pre.resume, "checkpoint to continue from");
  cmd_pre->add_flag("--force", pre.force, "allow config mismatch on resume");
  cmd_pre->add_option("--epochs", pre.epochs);
  cmd_pre->add_option("--batch-size", pre.batch_size);
  cmd_pre->add_option("--learning-rate", pre.learning_rate);
  cmd_pre->add_option("--seed", pre.seed);
  cmd_pre->add_option("--alpha", pre.alpha, "frame-loss weight");
  cmd_pre->add_option("--beta", pre.beta, "pitch-loss weight");
  cmd_pre->add_option("--sim", pre.sim, "bilinear | cosine");
  cmd_pre->add_flag("--deterministic", pre.deterministic);

  EmbedArgs emb;
  auto* cmd_emb = app.add_subcommand("embed", "embed a corpus with a frozen "
                                              "checkpoint");
  cmd_emb->add_option("--ckpt", emb.ckpt)->required();
  cmd_emb->add_option("--manifest", emb.manifest_path)->required();
  cmd_emb->add_option("--mode", emb.mode, "pooled | framewise");
  cmd_emb->add_option("--out", emb.out);

  ProbeArgs prb;
  auto* cmd_prb = app.add_subcommand("probe", "train + evaluate a linear probe");
  cmd_prb->add_option("--archive", prb.archive)->required();
  cmd_prb->add_option("--task", prb.task, "clip | sed | pitch");
  cmd_prb->add_option("--out", prb.out);
  cmd_prb->add_option("--classes", prb.classes);
  cmd_prb->add_option("--epochs", prb.epochs);
  cmd_prb->add_option("--seed", prb.seed);
  cmd_prb->add_option("--variant", prb.variant, "table row label");

  ReportArgs rep;
  auto* cmd_rep = app.add_subcommand("report", "tabulate probe reports");
  cmd_rep->add_option("--glob", rep.glob, "e.g. 'out/report_*.json'")->required();
  cmd_rep->add_option("--out", rep.out, "write the text table here too");
  cmd_rep->add_option("--csv", rep.csv);
  cmd_rep->add_option("--json", rep.json_out);
  cmd_rep->add_flag("--paper-values", rep.paper_values,
                    "include the published reference row");

  ReproOptions repro;
  auto* cmd_repro = app.add_subcommand("repro", "end-to-end desk pipeline");
  cmd_repro->add_option("--suite", repro.suite, "quick | full-desk");
  cmd_repro->add_option("--out", repro.out_dir);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (cmd_gen->parsed()) return CmdGen(gen);
    if (cmd_pre->parsed()) return CmdPretrain(pre);
    if (cmd_emb->parsed()) return CmdEmbed(emb);
    if (cmd_prb->parsed()) return CmdProbe(prb);
    if (cmd_rep->parsed()) return CmdReport(rep);
    if (cmd_repro->parsed()) {
      repro.out_dir = ResolveOut(repro.out_dir);
      RunReproSuite(repro);
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << std::endl;
    return kExitConfig;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << std::endl;
    return kExitData;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << std::endl;
    return kExitNumeric;
  } catch (const AcceptanceFailure& e) {
    std::cerr << "acceptance failure: " << e.what() << std::endl;
    return kExitAcceptance;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitError;
  }
  return kExitConfig;
}

}  // namespace ssaudio
