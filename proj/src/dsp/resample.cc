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

#include "dsp/resample.h"

#include <cmath>

#include "core/common.h"

namespace ssaudio {
namespace {

inline double CatmullRom(double p0, double p1, double p2, double p3, double t) {
  const double t2 = t * t;
  const double t3 = t2 * t;
  return 0.5 * ((2.0 * p1) + (-p0 + p2) * t +
                (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) * t2 +
                (-p0 + 3.0 * p1 - 3.0 * p2 + p3) * t3);
}

}  // namespace

std::vector<double> ResampleByStep(const std::vector<double>& input,
                                   double step) {
  SSA_CHECK(step > 0) << "resample step must be positive, got " << step;
  const auto len = static_cast<int64_t>(input.size());
  if (len == 0) return {};
  const int64_t out_len =
      static_cast<int64_t>(std::floor((len - 1) / step)) + 1;

  auto sample_at = [&](int64_t idx) {
    if (idx < 0) idx = 0;
    if (idx >= len) idx = len - 1;
    return input[static_cast<size_t>(idx)];
  };

  std::vector<double> out(static_cast<size_t>(out_len));
  for (int64_t i = 0; i < out_len; ++i) {
    const double pos = i * step;
    const auto i1 = static_cast<int64_t>(std::floor(pos));
    const double t = pos - i1;
    out[static_cast<size_t>(i)] =
        CatmullRom(sample_at(i1 - 1), sample_at(i1), sample_at(i1 + 1),
                   sample_at(i1 + 2), t);
  }
  return out;
}

Waveform ResampleToRate(const Waveform& w, int target_rate) {
  SSA_CHECK_CONFIG(target_rate > 0) << "target rate";
  if (w.sample_rate == target_rate) return w;
  Waveform out;
  out.sample_rate = target_rate;
  out.samples = ResampleByStep(
      w.samples, static_cast<double>(w.sample_rate) / target_rate);
  return out;
}

}  // namespace ssaudio
