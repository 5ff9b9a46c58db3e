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

#include "probe/embed.h"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "core/archive.h"
#include "core/common.h"
#include "core/hash.h"
#include "dsp/logmel.h"
#include "model/checkpoint.h"

namespace ssaudio {

void EmbeddingArchive::Save(const std::string& path) const {
  TensorArchive archive;
  archive.meta()["kind"] = "embedding_archive";
  archive.meta()["mode"] = mode;
  archive.meta()["d"] = d;
  archive.meta()["checkpoint_hash"] = checkpoint_hash;
  archive.meta()["frame_duration_sec"] = frame_duration_sec;

  nlohmann::json ids = nlohmann::json::array();
  nlohmann::json labels = nlohmann::json::array();
  nlohmann::json frame_labels = nlohmann::json::array();
  for (size_t i = 0; i < clips.size(); ++i) {
    ids.push_back(clips[i].id);
    labels.push_back(clips[i].label);
    frame_labels.push_back(clips[i].frame_labels);
    char name[32];
    std::snprintf(name, sizeof(name), "emb/%06zu", i);
    archive.Put(name, clips[i].embeddings);
  }
  archive.meta()["ids"] = std::move(ids);
  archive.meta()["labels"] = std::move(labels);
  archive.meta()["frame_labels"] = std::move(frame_labels);
  archive.Save(path);
}

EmbeddingArchive EmbeddingArchive::Load(const std::string& path) {
  TensorArchive archive = TensorArchive::Load(path);
  const auto& meta = archive.meta();
  SSA_CHECK_DATA(meta.value("kind", "") == "embedding_archive")
      << path << " is not an embedding archive";

  EmbeddingArchive out;
  out.mode = meta.value("mode", "pooled");
  out.d = meta.value("d", 0);
  out.checkpoint_hash = meta.value("checkpoint_hash", "");
  out.frame_duration_sec = meta.value("frame_duration_sec", 0.0);
  const auto& ids = meta.at("ids");
  const auto& labels = meta.at("labels");
  const auto& frame_labels = meta.at("frame_labels");
  for (size_t i = 0; i < ids.size(); ++i) {
    EmbeddedClip clip;
    clip.id = ids[i].get<std::string>();
    clip.label = labels[i].get<int>();
    clip.frame_labels = frame_labels[i].get<std::vector<int>>();
    char name[32];
    std::snprintf(name, sizeof(name), "emb/%06zu", i);
    clip.embeddings = archive.Get(name);
    out.clips.push_back(std::move(clip));
  }
  return out;
}

std::vector<int> MapFrameLabels(const std::vector<int>& hop_labels,
                                int64_t seg_start, int64_t stride,
                                int64_t t_out) {
  std::vector<int> out(static_cast<size_t>(t_out), 0);
  for (int64_t t = 0; t < t_out; ++t) {
    const int64_t lo = seg_start + t * stride;
    const int64_t hi =
        std::min<int64_t>(lo + stride, static_cast<int64_t>(hop_labels.size()));
    SSA_CHECK_DATA(lo < hi) << "frame label track too short: need frames ["
                            << lo << ", " << lo + stride << ")";
    std::map<int, int64_t> counts;
    for (int64_t i = lo; i < hi; ++i) ++counts[hop_labels[static_cast<size_t>(i)]];
    int best = 0;
    int64_t best_count = -1;
    for (const auto& [cls, count] : counts) {
      if (count > best_count) {  // map order resolves ties toward smaller id
        best = cls;
        best_count = count;
      }
    }
    out[static_cast<size_t>(t)] = best;
  }
  return out;
}

EmbeddingArchive EmbedCorpus(const Manifest& manifest,
                             const std::string& checkpoint_path,
                             EmbedMode mode) {
  LoadedCheckpoint ckpt = LoadCheckpoint(checkpoint_path);
  PretrainModel model = LoadModelFromCheckpoint(ckpt);
  SSA_CHECK_DATA(ckpt.config.contains("mel"))
      << "checkpoint config has no mel section";
  const MelConfig mel = MelConfigFromJson(ckpt.config["mel"]);
  const EncoderConfig& enc_cfg = model.encoder().config();
  const int64_t t_seg = mel.segment_frames;
  const int64_t t_out = enc_cfg.OutFrames(t_seg);
  const int64_t stride = EncoderConfig::kDownsample;

  EmbeddingArchive out;
  out.mode = mode == EmbedMode::kPooled ? "pooled" : "framewise";
  out.d = enc_cfg.d;
  out.checkpoint_hash = HashFileHex(checkpoint_path);
  out.frame_duration_sec = stride * mel.hop_ms / 1000.0;

  for (const auto& entry : manifest.entries) {
    Waveform audio = LoadClipAudio(manifest.ResolvePath(entry.path),
                                   mel.sample_rate);
    Tensor features = ExtractLogMel(audio, mel);
    const int64_t n_segments = features.dim(1) / t_seg;
    SSA_CHECK_DATA(n_segments >= 1)
        << "clip '" << entry.clip_id << "' is shorter than one segment";

    std::vector<int> hop_labels;
    if (entry.frame_labels) {
      hop_labels = ReadFrameLabels(manifest.ResolvePath(*entry.frame_labels));
    }

    EmbeddedClip clip;
    clip.id = entry.clip_id;
    clip.label = entry.label.value_or(-1);

    if (mode == EmbedMode::kPooled) {
      clip.embeddings = Tensor({enc_cfg.d});
      for (int64_t s = 0; s < n_segments; ++s) {
        FeatureSegment seg =
            SliceSegment(features, s * t_seg, mel, entry.clip_id);
        Embedding emb = model.encoder().Encode(seg.values);
        clip.embeddings.AddScaled(emb.pooled, 1.0 / static_cast<double>(n_segments));
      }
    } else {
      clip.embeddings = Tensor({n_segments * t_out, enc_cfg.d});
      for (int64_t s = 0; s < n_segments; ++s) {
        FeatureSegment seg =
            SliceSegment(features, s * t_seg, mel, entry.clip_id);
        Embedding emb = model.encoder().Encode(seg.values);
        for (int64_t t = 0; t < t_out; ++t) {
          for (int64_t k = 0; k < enc_cfg.d; ++k) {
            clip.embeddings.at(s * t_out + t, k) = emb.h.at(k, t);
          }
        }
        std::vector<int> mapped;
        if (!hop_labels.empty()) {
          mapped = MapFrameLabels(hop_labels, s * t_seg, stride, t_out);
        } else {
          mapped.assign(static_cast<size_t>(t_out), -1);
        }
        clip.frame_labels.insert(clip.frame_labels.end(), mapped.begin(),
                                 mapped.end());
      }
    }
    out.clips.push_back(std::move(clip));
  }
  return out;
}

}  // namespace ssaudio
