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

#ifndef SSAUDIO_SAMPLING_SAMPLER_H_
#define SSAUDIO_SAMPLING_SAMPLER_H_

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "core/rng.h"
#include "core/tensor.h"
#include "dsp/logmel.h"
#include "dsp/manifest.h"

namespace ssaudio {

// One optimization step's worth of views:
//   anchors[i] and positives[i] are segments of the same clip at different
//   start frames, clips are pairwise distinct across the batch (in-batch
//   negatives are cross-clip), and shifted[i] is the pitch-shifted clip
//   sliced at the anchor's own start frame.
struct TrainingBatch {
  Tensor anchors, positives, shifted;  // (B, n_mels, segment_frames)
  std::vector<double> shift_params;
  std::vector<std::string> source_ids;
  std::vector<int64_t> anchor_starts, positive_starts;
};

struct SamplerConfig {
  int64_t batch_size = 32;
  double shift_min = 0.8;
  double shift_max = 1.2;
  // kPerEpoch redraws the shift width once per epoch (all batches in the
  // epoch share it); kPerBatch redraws per batch.
  enum class ShiftMode { kPerEpoch, kPerBatch };
  ShiftMode shift_mode = ShiftMode::kPerEpoch;

  void Validate() const;
};

nlohmann::json SamplerConfigToJson(const SamplerConfig& cfg);
SamplerConfig SamplerConfigFromJson(const nlohmann::json& j);

// Uniform draw from [shift_min, shift_max].
double DrawShift(Rng* rng, const SamplerConfig& cfg);

// Loads every manifest clip once (audio + log-mel features) and validates
// that each clip supports two distinct segment starts.
class CorpusCache {
 public:
  CorpusCache(const Manifest& manifest, const MelConfig& mel);

  int64_t NumClips() const { return static_cast<int64_t>(ids_.size()); }
  const std::string& ClipId(int64_t i) const { return ids_[static_cast<size_t>(i)]; }
  const Tensor& Features(int64_t i) const { return features_[static_cast<size_t>(i)]; }
  const Waveform& Audio(int64_t i) const { return audio_[static_cast<size_t>(i)]; }
  const MelConfig& mel() const { return mel_; }

  // Features of the pitch-shifted clip; same frame count as Features(i).
  Tensor ShiftedFeatures(int64_t i, double a) const;

 private:
  MelConfig mel_;
  std::vector<std::string> ids_;
  std::vector<Waveform> audio_;
  std::vector<Tensor> features_;
};

// Epoch-driven batch source. All randomness for epoch e derives from
// (seed, e), so replaying an epoch, or resuming at it, regenerates the
// identical batch stream.
class BatchSampler {
 public:
  BatchSampler(const CorpusCache* corpus, const SamplerConfig& cfg,
               uint64_t seed);

  void BeginEpoch(int64_t epoch);
  int64_t NumBatches() const;
  bool HasNext() const { return next_batch_ < NumBatches(); }
  TrainingBatch NextBatch();

  double epoch_shift() const { return epoch_shift_; }

 private:
  const CorpusCache* corpus_;
  SamplerConfig cfg_;
  uint64_t seed_;
  int64_t epoch_ = -1;
  int64_t next_batch_ = 0;
  double epoch_shift_ = 1.0;
  std::vector<int64_t> order_;
  Rng epoch_rng_{0};
  // shifted-feature cache for the current shift width, keyed by
  // (clip index, bit pattern of a)
  mutable std::map<std::pair<int64_t, uint64_t>, Tensor> shifted_cache_;
};

}  // namespace ssaudio

#endif  // SSAUDIO_SAMPLING_SAMPLER_H_
