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

#ifndef SSAUDIO_PROBE_METRICS_H_
#define SSAUDIO_PROBE_METRICS_H_

#include <cstdint>
#include <vector>

namespace ssaudio {

double Accuracy(const std::vector<int>& predictions,
                const std::vector<int>& references);

// Pitch over an 88-key label space; chroma folds the key index modulo 12.
double PitchAccuracy(const std::vector<int>& predictions,
                     const std::vector<int>& references);
double ChromaAccuracy(const std::vector<int>& predictions,
                      const std::vector<int>& references);

// Maximal run of one non-background class in a frame-label track.
struct EventRun {
  int cls = 0;
  int64_t start_frame = 0;
  int64_t end_frame = 0;  // exclusive
};

std::vector<EventRun> ExtractRuns(const std::vector<int>& track);

struct SedMetrics {
  double frame_f1 = 0.0;
  double onset_f1 = 0.0;
};

// Frame F1: micro-F1 over non-background classes. Onset F1: events are runs
// of one class; a predicted onset matches an unmatched reference onset of
// the same class within the collar (greedy, in time order). Tracks are
// evaluated per clip and counts pooled.
SedMetrics EvaluateSed(const std::vector<std::vector<int>>& references,
                       const std::vector<std::vector<int>>& predictions,
                       double frame_duration_sec,
                       double onset_collar_sec = 0.2);

}  // namespace ssaudio

#endif  // SSAUDIO_PROBE_METRICS_H_
