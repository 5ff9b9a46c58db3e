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

#include "probe/metrics.h"

#include <cmath>

#include "core/common.h"

namespace ssaudio {

double Accuracy(const std::vector<int>& predictions,
                const std::vector<int>& references) {
  SSA_CHECK(predictions.size() == references.size() && !references.empty())
      << "accuracy over mismatched or empty label lists";
  int64_t hits = 0;
  for (size_t i = 0; i < references.size(); ++i) {
    if (predictions[i] == references[i]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(references.size());
}

double PitchAccuracy(const std::vector<int>& predictions,
                     const std::vector<int>& references) {
  return Accuracy(predictions, references);
}

double ChromaAccuracy(const std::vector<int>& predictions,
                      const std::vector<int>& references) {
  SSA_CHECK(predictions.size() == references.size() && !references.empty())
      << "chroma accuracy over mismatched or empty label lists";
  int64_t hits = 0;
  for (size_t i = 0; i < references.size(); ++i) {
    if (predictions[i] % 12 == references[i] % 12) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(references.size());
}

std::vector<EventRun> ExtractRuns(const std::vector<int>& track) {
  std::vector<EventRun> runs;
  const auto n = static_cast<int64_t>(track.size());
  int64_t i = 0;
  while (i < n) {
    if (track[static_cast<size_t>(i)] <= 0) {
      ++i;
      continue;
    }
    const int cls = track[static_cast<size_t>(i)];
    int64_t j = i + 1;
    while (j < n && track[static_cast<size_t>(j)] == cls) ++j;
    runs.push_back({cls, i, j});
    i = j;
  }
  return runs;
}

SedMetrics EvaluateSed(const std::vector<std::vector<int>>& references,
                       const std::vector<std::vector<int>>& predictions,
                       double frame_duration_sec, double onset_collar_sec) {
  SSA_CHECK(references.size() == predictions.size() && !references.empty())
      << "SED track count mismatch";
  SSA_CHECK(frame_duration_sec > 0) << "frame duration";

  int64_t frame_tp = 0, frame_fp = 0, frame_fn = 0;
  int64_t onset_tp = 0, onset_fp = 0, onset_fn = 0;

  for (size_t c = 0; c < references.size(); ++c) {
    const auto& ref = references[c];
    const auto& pred = predictions[c];
    SSA_CHECK(ref.size() == pred.size()) << "SED track length mismatch";

    for (size_t i = 0; i < ref.size(); ++i) {
      const bool ref_event = ref[i] > 0;
      const bool pred_event = pred[i] > 0;
      if (pred_event && ref_event && pred[i] == ref[i]) {
        ++frame_tp;
      } else {
        if (pred_event) ++frame_fp;
        if (ref_event) ++frame_fn;
      }
    }

    auto ref_runs = ExtractRuns(ref);
    auto pred_runs = ExtractRuns(pred);
    std::vector<bool> ref_matched(ref_runs.size(), false);
    for (const auto& p : pred_runs) {
      const double p_onset = static_cast<double>(p.start_frame) * frame_duration_sec;
      bool matched = false;
      for (size_t r = 0; r < ref_runs.size(); ++r) {
        if (ref_matched[r] || ref_runs[r].cls != p.cls) continue;
        const double r_onset =
            static_cast<double>(ref_runs[r].start_frame) * frame_duration_sec;
        if (std::fabs(p_onset - r_onset) <= onset_collar_sec) {
          ref_matched[r] = true;
          matched = true;
          break;
        }
      }
      if (matched) {
        ++onset_tp;
      } else {
        ++onset_fp;
      }
    }
    for (size_t r = 0; r < ref_runs.size(); ++r) {
      if (!ref_matched[r]) ++onset_fn;
    }
  }

  SedMetrics out;
  const double frame_den = static_cast<double>(2 * frame_tp + frame_fp + frame_fn);
  out.frame_f1 = frame_den > 0 ? 2.0 * frame_tp / frame_den : 0.0;
  const double onset_den = static_cast<double>(2 * onset_tp + onset_fp + onset_fn);
  out.onset_f1 = onset_den > 0 ? 2.0 * onset_tp / onset_den : 0.0;
  return out;
}

}  // namespace ssaudio
