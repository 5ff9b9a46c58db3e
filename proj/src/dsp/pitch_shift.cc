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

#include "dsp/pitch_shift.h"

#include <cmath>
#include <complex>
#include <vector>

#include "core/common.h"
#include "dsp/fft.h"
#include "dsp/resample.h"

namespace ssaudio {
namespace {

constexpr int kFftSize = 1024;
constexpr int kSynthesisHop = 256;

inline double PrincipalAngle(double phase) {
  phase = std::fmod(phase + M_PI, 2.0 * M_PI);
  if (phase < 0) phase += 2.0 * M_PI;
  return phase - M_PI;
}

}  // namespace

std::vector<double> TimeStretch(const std::vector<double>& input,
                                int64_t target_len) {
  const auto in_len = static_cast<int64_t>(input.size());
  SSA_CHECK(in_len > 0 && target_len > 0) << "empty stretch input";

  const double stretch = static_cast<double>(target_len) / in_len;
  const double analysis_hop = kSynthesisHop / stretch;
  const int bins = kFftSize / 2 + 1;

  // Periodic Hann, used for both analysis and synthesis; the overlap-add is
  // renormalized by the accumulated squared window below.
  std::vector<double> window(kFftSize);
  for (int i = 0; i < kFftSize; ++i) {
    window[static_cast<size_t>(i)] =
        0.5 - 0.5 * std::cos(2.0 * M_PI * i / kFftSize);
  }

  auto input_at = [&](int64_t idx) {
    return (idx >= 0 && idx < in_len) ? input[static_cast<size_t>(idx)] : 0.0;
  };

  RealFft fft(kFftSize);
  std::vector<double> frame(kFftSize);
  std::vector<std::complex<double>> spec(static_cast<size_t>(bins));
  std::vector<double> prev_phase(static_cast<size_t>(bins), 0.0);
  std::vector<double> out_phase(static_cast<size_t>(bins), 0.0);

  std::vector<double> accum(static_cast<size_t>(target_len), 0.0);
  std::vector<double> weight(static_cast<size_t>(target_len), 0.0);

  // Frames at negative offsets give the first samples full window coverage.
  const int64_t k_min = -(kFftSize / kSynthesisHop - 1);
  const int64_t k_max = (target_len - 1) / kSynthesisHop;
  int64_t prev_pos = 0;
  for (int64_t k = k_min; k <= k_max; ++k) {
    const int64_t pos = llround(k * analysis_hop);
    for (int i = 0; i < kFftSize; ++i) {
      frame[static_cast<size_t>(i)] =
          input_at(pos + i) * window[static_cast<size_t>(i)];
    }
    fft.Forward(frame.data(), spec.data());

    if (k == k_min) {
      for (int b = 0; b < bins; ++b) {
        prev_phase[static_cast<size_t>(b)] = std::arg(spec[static_cast<size_t>(b)]);
        out_phase[static_cast<size_t>(b)] = prev_phase[static_cast<size_t>(b)];
      }
    } else {
      const auto dt = static_cast<double>(pos - prev_pos);
      for (int b = 0; b < bins; ++b) {
        const double omega = 2.0 * M_PI * b / kFftSize;  // rad per sample
        const double phase = std::arg(spec[static_cast<size_t>(b)]);
        const double deviation =
            PrincipalAngle(phase - prev_phase[static_cast<size_t>(b)] -
                           omega * dt);
        const double inst_freq = omega + (dt > 0 ? deviation / dt : 0.0);
        out_phase[static_cast<size_t>(b)] =
            PrincipalAngle(out_phase[static_cast<size_t>(b)] +
                           inst_freq * kSynthesisHop);
        prev_phase[static_cast<size_t>(b)] = phase;
      }
    }
    prev_pos = pos;

    for (int b = 0; b < bins; ++b) {
      const double mag = std::abs(spec[static_cast<size_t>(b)]);
      spec[static_cast<size_t>(b)] =
          std::polar(mag, out_phase[static_cast<size_t>(b)]);
    }
    fft.Inverse(spec.data(), frame.data());

    const int64_t out_pos = k * kSynthesisHop;
    for (int i = 0; i < kFftSize; ++i) {
      const int64_t o = out_pos + i;
      if (o < 0 || o >= target_len) continue;
      const double w = window[static_cast<size_t>(i)];
      accum[static_cast<size_t>(o)] += w * frame[static_cast<size_t>(i)];
      weight[static_cast<size_t>(o)] += w * w;
    }
  }

  for (int64_t i = 0; i < target_len; ++i) {
    const double w = weight[static_cast<size_t>(i)];
    accum[static_cast<size_t>(i)] = w > 1e-9 ? accum[static_cast<size_t>(i)] / w : 0.0;
  }
  return accum;
}

Waveform PitchShift(const Waveform& w, double a) {
  SSA_CHECK_CONFIG(a > 0) << "pitch shift factor must be positive, got " << a;
  ValidateWaveform(w);
  SSA_CHECK_DATA(!w.samples.empty()) << "cannot pitch-shift empty waveform";

  // Reading at step a scales frequencies by a and duration by 1/a; the
  // stretch restores the original number of samples at unchanged pitch.
  std::vector<double> resampled = ResampleByStep(w.samples, a);
  Waveform out;
  out.sample_rate = w.sample_rate;
  out.samples = TimeStretch(resampled, w.NumSamples());
  return out;
}

}  // namespace ssaudio
