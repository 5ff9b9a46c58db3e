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

#include "dsp/logmel.h"

#include <cmath>
#include <complex>
#include <vector>

#include "core/common.h"
#include "dsp/fft.h"

namespace ssaudio {

Tensor ExtractLogMel(const Waveform& w, const MelConfig& cfg) {
  cfg.Validate();
  ValidateWaveform(w);
  SSA_CHECK_DATA(w.sample_rate == cfg.sample_rate)
      << "waveform rate " << w.sample_rate << " != config rate "
      << cfg.sample_rate << "; resample on ingestion";

  const int window = cfg.WindowSamples();
  const int hop = cfg.HopSamples();
  const int64_t len = w.NumSamples();
  SSA_CHECK_DATA(len >= window)
      << "waveform of " << len << " samples is shorter than one analysis "
      << "window (" << window << " samples)";

  const bool centered = cfg.padding == MelConfig::Padding::kCenter;
  const int64_t n_frames =
      centered ? len / hop : (len - window) / hop + 1;
  // Left offset of frame t relative to t*hop; centers each frame on the
  // middle of its hop interval.
  const int64_t offset = centered ? (window - hop) / 2 : 0;

  MelFilterbank bank(cfg);
  RealFft fft(cfg.n_fft);
  std::vector<double> hann(static_cast<size_t>(window));
  for (int i = 0; i < window; ++i) {
    hann[static_cast<size_t>(i)] =
        0.5 - 0.5 * std::cos(2.0 * M_PI * i / (window - 1));
  }

  std::vector<double> frame(static_cast<size_t>(cfg.n_fft), 0.0);
  std::vector<std::complex<double>> spec(static_cast<size_t>(fft.num_bins()));
  std::vector<double> power(static_cast<size_t>(fft.num_bins()));
  std::vector<double> mel(static_cast<size_t>(cfg.n_mels));

  Tensor out({cfg.n_mels, n_frames});
  for (int64_t t = 0; t < n_frames; ++t) {
    const int64_t start = t * hop - offset;
    for (int i = 0; i < window; ++i) {
      const int64_t s = start + i;
      const double v = (s >= 0 && s < len) ? w.samples[static_cast<size_t>(s)] : 0.0;
      frame[static_cast<size_t>(i)] = v * hann[static_cast<size_t>(i)];
    }
    std::fill(frame.begin() + window, frame.end(), 0.0);
    fft.Forward(frame.data(), spec.data());
    for (int k = 0; k < fft.num_bins(); ++k) {
      power[static_cast<size_t>(k)] = std::norm(spec[static_cast<size_t>(k)]);
    }
    bank.Apply(power.data(), mel.data());
    for (int m = 0; m < cfg.n_mels; ++m) {
      out.at(m, t) = std::log(mel[static_cast<size_t>(m)] + cfg.log_floor);
    }
  }
  return out;
}

FeatureSegment SliceSegment(const Tensor& features, int64_t start_frame,
                            const MelConfig& cfg,
                            const std::string& source_id) {
  SSA_CHECK(features.ndim() == 2) << "features must be 2-D";
  const int64_t n_mels = features.dim(0);
  const int64_t t_total = features.dim(1);
  const int64_t t_seg = cfg.segment_frames;
  SSA_CHECK_DATA(start_frame >= 0 && start_frame + t_seg <= t_total)
      << "segment [" << start_frame << ", " << start_frame + t_seg
      << ") out of range for " << t_total << " frames of '" << source_id << "'";

  FeatureSegment seg;
  seg.values = Tensor({n_mels, t_seg});
  seg.source_id = source_id;
  seg.start_frame = start_frame;
  for (int64_t m = 0; m < n_mels; ++m) {
    for (int64_t t = 0; t < t_seg; ++t) {
      seg.values.at(m, t) = features.at(m, start_frame + t);
    }
  }
  return seg;
}

}  // namespace ssaudio
