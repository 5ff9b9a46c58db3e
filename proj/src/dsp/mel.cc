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

#include "dsp/mel.h"

#include <cmath>

#include <nlohmann/json.hpp>

#include "core/common.h"

namespace ssaudio {

int MelConfig::WindowSamples() const {
  return static_cast<int>(std::lround(window_ms * sample_rate / 1000.0));
}

int MelConfig::HopSamples() const {
  return static_cast<int>(std::lround(hop_ms * sample_rate / 1000.0));
}

void MelConfig::Validate() const {
  SSA_CHECK_CONFIG(sample_rate > 0) << "sample_rate";
  SSA_CHECK_CONFIG(window_ms > hop_ms && hop_ms > 0) << "window/hop";
  SSA_CHECK_CONFIG(n_mels > 0) << "n_mels";
  SSA_CHECK_CONFIG(fmin_hz > 0 && fmin_hz < fmax_hz &&
                   fmax_hz < sample_rate / 2.0)
      << "mel frequency range " << fmin_hz << "-" << fmax_hz << " at rate "
      << sample_rate;
  SSA_CHECK_CONFIG(segment_frames > 0) << "segment_frames";
  SSA_CHECK_CONFIG(log_floor > 0) << "log_floor";
  SSA_CHECK_CONFIG(n_fft >= WindowSamples()) << "n_fft below window size";
}

nlohmann::json MelConfigToJson(const MelConfig& cfg) {
  return nlohmann::json{
      {"sample_rate", cfg.sample_rate},
      {"window_ms", cfg.window_ms},
      {"hop_ms", cfg.hop_ms},
      {"n_mels", cfg.n_mels},
      {"fmin_hz", cfg.fmin_hz},
      {"fmax_hz", cfg.fmax_hz},
      {"segment_frames", cfg.segment_frames},
      {"log_floor", cfg.log_floor},
      {"n_fft", cfg.n_fft},
      {"padding", cfg.padding == MelConfig::Padding::kCenter ? "center" : "none"},
  };
}

MelConfig MelConfigFromJson(const nlohmann::json& j) {
  MelConfig cfg;
  cfg.sample_rate = j.value("sample_rate", cfg.sample_rate);
  cfg.window_ms = j.value("window_ms", cfg.window_ms);
  cfg.hop_ms = j.value("hop_ms", cfg.hop_ms);
  cfg.n_mels = j.value("n_mels", cfg.n_mels);
  cfg.fmin_hz = j.value("fmin_hz", cfg.fmin_hz);
  cfg.fmax_hz = j.value("fmax_hz", cfg.fmax_hz);
  cfg.segment_frames = j.value("segment_frames", cfg.segment_frames);
  cfg.log_floor = j.value("log_floor", cfg.log_floor);
  cfg.n_fft = j.value("n_fft", cfg.n_fft);
  const std::string pad = j.value("padding", "center");
  if (pad == "center") {
    cfg.padding = MelConfig::Padding::kCenter;
  } else if (pad == "none") {
    cfg.padding = MelConfig::Padding::kNone;
  } else {
    SSA_THROW(ConfigError) << "unknown padding mode '" << pad << "'";
  }
  cfg.Validate();
  return cfg;
}

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double MelToHz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

MelFilterbank::MelFilterbank(const MelConfig& cfg)
    : n_mels_(cfg.n_mels), num_bins_(cfg.n_fft / 2 + 1) {
  cfg.Validate();
  const double mel_lo = HzToMel(cfg.fmin_hz);
  const double mel_hi = HzToMel(cfg.fmax_hz);
  edges_hz_.resize(static_cast<size_t>(n_mels_) + 2);
  for (int m = 0; m < n_mels_ + 2; ++m) {
    const double mel = mel_lo + (mel_hi - mel_lo) * m / (n_mels_ + 1);
    edges_hz_[static_cast<size_t>(m)] = MelToHz(mel);
  }
  centers_hz_.assign(edges_hz_.begin() + 1, edges_hz_.end() - 1);

  weights_.assign(static_cast<size_t>(n_mels_) * num_bins_, 0.0);
  const double bin_hz = static_cast<double>(cfg.sample_rate) / cfg.n_fft;
  for (int m = 0; m < n_mels_; ++m) {
    const double lo = edges_hz_[static_cast<size_t>(m)];
    const double center = edges_hz_[static_cast<size_t>(m) + 1];
    const double hi = edges_hz_[static_cast<size_t>(m) + 2];
    for (int k = 0; k < num_bins_; ++k) {
      const double f = k * bin_hz;
      double w = 0.0;
      if (f > lo && f < hi) {
        w = f <= center ? (f - lo) / (center - lo) : (hi - f) / (hi - center);
      }
      weights_[static_cast<size_t>(m) * num_bins_ + k] = w;
    }
  }
}

void MelFilterbank::Apply(const double* power, double* mel) const {
  for (int m = 0; m < n_mels_; ++m) {
    const double* row = &weights_[static_cast<size_t>(m) * num_bins_];
    double acc = 0.0;
    for (int k = 0; k < num_bins_; ++k) acc += row[k] * power[k];
    mel[m] = acc;
  }
}

}  // namespace ssaudio
