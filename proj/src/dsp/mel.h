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

#ifndef SSAUDIO_DSP_MEL_H_
#define SSAUDIO_DSP_MEL_H_

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "core/tensor.h"

namespace ssaudio {

// Log-mel front end settings. The canonical pipeline is 16 kHz audio,
// 25 ms Hann windows with a 10 ms hop, 64 mel bins spanning 60-7800 Hz,
// natural-log compression with an absolute energy floor, and centered
// framing so a 960 ms clip yields exactly 96 frames.
struct MelConfig {
  enum class Padding { kCenter, kNone };

  int sample_rate = 16000;
  double window_ms = 25.0;
  double hop_ms = 10.0;
  int n_mels = 64;
  double fmin_hz = 60.0;
  double fmax_hz = 7800.0;
  int segment_frames = 96;
  double log_floor = 1e-6;
  int n_fft = 1024;
  Padding padding = Padding::kCenter;

  int WindowSamples() const;
  int HopSamples() const;

  // Throws ConfigError if the invariants do not hold
  // (0 < hop < window, 0 < fmin < fmax < sample_rate / 2, ...).
  void Validate() const;
};

nlohmann::json MelConfigToJson(const MelConfig& cfg);
MelConfig MelConfigFromJson(const nlohmann::json& j);

double HzToMel(double hz);
double MelToHz(double mel);

// Triangular filterbank on the HTK mel scale.
class MelFilterbank {
 public:
  MelFilterbank(const MelConfig& cfg);

  int num_filters() const { return n_mels_; }
  int num_bins() const { return num_bins_; }
  // Center frequency of each filter in Hz, strictly increasing.
  const std::vector<double>& center_frequencies_hz() const { return centers_hz_; }
  // Support of filter m: [lower, upper] in Hz.
  double lower_edge_hz(int m) const { return edges_hz_[static_cast<size_t>(m)]; }
  double upper_edge_hz(int m) const { return edges_hz_[static_cast<size_t>(m) + 2]; }

  // power: n_fft/2+1 spectral powers -> mel: n_mels energies.
  void Apply(const double* power, double* mel) const;

 private:
  int n_mels_;
  int num_bins_;
  std::vector<double> centers_hz_;
  std::vector<double> edges_hz_;   // n_mels + 2 band edges
  std::vector<double> weights_;    // n_mels x num_bins, row-major
};

}  // namespace ssaudio

#endif  // SSAUDIO_DSP_MEL_H_
