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

#include "sampling/sampler.h"

#include <cstring>

#include <nlohmann/json.hpp>

#include "core/common.h"
#include "core/hash.h"
#include "dsp/pitch_shift.h"

namespace ssaudio {

void SamplerConfig::Validate() const {
  SSA_CHECK_CONFIG(batch_size >= 2) << "batch_size must be at least 2";
  SSA_CHECK_CONFIG(0 < shift_min && shift_min <= shift_max)
      << "shift range [" << shift_min << ", " << shift_max << "]";
}

nlohmann::json SamplerConfigToJson(const SamplerConfig& cfg) {
  return nlohmann::json{
      {"batch_size", cfg.batch_size},
      {"shift_min", cfg.shift_min},
      {"shift_max", cfg.shift_max},
      {"shift_mode",
       cfg.shift_mode == SamplerConfig::ShiftMode::kPerEpoch ? "per_epoch"
                                                             : "per_batch"}};
}

SamplerConfig SamplerConfigFromJson(const nlohmann::json& j) {
  SamplerConfig cfg;
  cfg.batch_size = j.value("batch_size", cfg.batch_size);
  cfg.shift_min = j.value("shift_min", cfg.shift_min);
  cfg.shift_max = j.value("shift_max", cfg.shift_max);
  const std::string mode = j.value("shift_mode", "per_epoch");
  if (mode == "per_epoch") {
    cfg.shift_mode = SamplerConfig::ShiftMode::kPerEpoch;
  } else if (mode == "per_batch") {
    cfg.shift_mode = SamplerConfig::ShiftMode::kPerBatch;
  } else {
    SSA_THROW(ConfigError) << "unknown shift_mode '" << mode << "'";
  }
  cfg.Validate();
  return cfg;
}

double DrawShift(Rng* rng, const SamplerConfig& cfg) {
  return rng->Uniform(cfg.shift_min, cfg.shift_max);
}

CorpusCache::CorpusCache(const Manifest& manifest, const MelConfig& mel)
    : mel_(mel) {
  mel_.Validate();
  const int64_t min_frames = mel_.segment_frames + 1;  // two distinct starts
  for (const auto& entry : manifest.entries) {
    Waveform audio =
        LoadClipAudio(manifest.ResolvePath(entry.path), mel_.sample_rate);
    Tensor features = ExtractLogMel(audio, mel_);
    SSA_CHECK_DATA(features.dim(1) >= min_frames)
        << "clip '" << entry.clip_id << "' has only " << features.dim(1)
        << " frames; sampling two distinct " << mel_.segment_frames
        << "-frame segments needs at least " << min_frames;
    ids_.push_back(entry.clip_id);
    audio_.push_back(std::move(audio));
    features_.push_back(std::move(features));
  }
}

Tensor CorpusCache::ShiftedFeatures(int64_t i, double a) const {
  const Waveform shifted = PitchShift(Audio(i), a);
  return ExtractLogMel(shifted, mel_);
}

BatchSampler::BatchSampler(const CorpusCache* corpus, const SamplerConfig& cfg,
                           uint64_t seed)
    : corpus_(corpus), cfg_(cfg), seed_(seed) {
  cfg_.Validate();
  SSA_CHECK_DATA(corpus_->NumClips() >= cfg_.batch_size)
      << "corpus has " << corpus_->NumClips() << " clips but batches need "
      << cfg_.batch_size << " distinct clips";
  BeginEpoch(0);
}

void BatchSampler::BeginEpoch(int64_t epoch) {
  epoch_ = epoch;
  next_batch_ = 0;
  epoch_rng_ = Rng(DeriveSeed(seed_, "sampler.epoch", static_cast<uint64_t>(epoch)));
  order_.resize(static_cast<size_t>(corpus_->NumClips()));
  for (int64_t i = 0; i < corpus_->NumClips(); ++i) order_[static_cast<size_t>(i)] = i;
  epoch_rng_.Shuffle(&order_);
  epoch_shift_ = DrawShift(&epoch_rng_, cfg_);
  shifted_cache_.clear();
}

int64_t BatchSampler::NumBatches() const {
  return corpus_->NumClips() / cfg_.batch_size;
}

TrainingBatch BatchSampler::NextBatch() {
  SSA_CHECK(HasNext()) << "epoch " << epoch_ << " is exhausted";
  const int64_t b = cfg_.batch_size;
  const MelConfig& mel = corpus_->mel();
  const int64_t n_mels = mel.n_mels;
  const int64_t t_seg = mel.segment_frames;

  double batch_shift = epoch_shift_;
  if (cfg_.shift_mode == SamplerConfig::ShiftMode::kPerBatch) {
    batch_shift = DrawShift(&epoch_rng_, cfg_);
  }

  TrainingBatch batch;
  batch.anchors = Tensor({b, n_mels, t_seg});
  batch.positives = Tensor({b, n_mels, t_seg});
  batch.shifted = Tensor({b, n_mels, t_seg});

  uint64_t shift_bits = 0;
  static_assert(sizeof(shift_bits) == sizeof(batch_shift));
  std::memcpy(&shift_bits, &batch_shift, sizeof(shift_bits));

  for (int64_t slot = 0; slot < b; ++slot) {
    const int64_t clip =
        order_[static_cast<size_t>(next_batch_ * b + slot)];
    const Tensor& features = corpus_->Features(clip);
    const int64_t n_starts = features.dim(1) - t_seg + 1;

    // two distinct starts, uniform without replacement
    const int64_t start_a = epoch_rng_.UniformInt(n_starts);
    int64_t start_p = epoch_rng_.UniformInt(n_starts - 1);
    if (start_p >= start_a) ++start_p;

    const auto key = std::make_pair(clip, shift_bits);
    auto it = shifted_cache_.find(key);
    if (it == shifted_cache_.end()) {
      it = shifted_cache_
               .emplace(key, corpus_->ShiftedFeatures(clip, batch_shift))
               .first;
    }
    const Tensor& shifted_features = it->second;

    for (int64_t m = 0; m < n_mels; ++m) {
      for (int64_t t = 0; t < t_seg; ++t) {
        batch.anchors.at(slot, m, t) = features.at(m, start_a + t);
        batch.positives.at(slot, m, t) = features.at(m, start_p + t);
        batch.shifted.at(slot, m, t) = shifted_features.at(m, start_a + t);
      }
    }
    batch.shift_params.push_back(batch_shift);
    batch.source_ids.push_back(corpus_->ClipId(clip));
    batch.anchor_starts.push_back(start_a);
    batch.positive_starts.push_back(start_p);
  }
  ++next_batch_;
  return batch;
}

}  // namespace ssaudio
