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

#ifndef SSAUDIO_SYNTHGEN_SYNTHGEN_H_
#define SSAUDIO_SYNTHGEN_SYNTHGEN_H_

#include <cstdint>
#include <string>
#include <vector>

#include "dsp/manifest.h"
#include "dsp/waveform.h"

namespace ssaudio {

// Deterministic synthetic corpora: same spec + seed give bit-identical
// audio, labels and manifests.

double MidiToHz(int midi);

// Harmonic tones on an 88-key grid (MIDI 21..108 -> labels 0..87), four
// harmonics with 1/k rolloff, random phase, attack/decay envelope.
struct ToneBankSpec {
  int n_clips = 88;
  double duration_sec = 1.6;
  uint64_t seed = 0;
  int midi_min = 36;
  int midi_max = 96;
  int harmonics = 4;
  // Fundamentals must stay inside the front end's analysis band.
  double fmin_hz = 60.0;
  double fmax_hz = 7800.0;
  int sample_rate = 16000;
};

// Noise-bed clips with inserted labeled events (distinct spectral
// templates). Frame labels at the 10 ms hop, onset list alongside.
struct EventTrackSpec {
  int n_clips = 32;
  double duration_sec = 4.8;
  uint64_t seed = 0;
  int n_classes = 3;          // event classes; frame label 0 is background
  double events_per_clip = 3.0;
  double event_min_sec = 0.3;
  double event_max_sec = 0.7;
  int max_polyphony = 1;      // only 1 is supported
  double noise_level = 0.05;
  int sample_rate = 16000;
  double hop_ms = 10.0;
};

// Clip-classification textures: per-class disjoint noise passbands with
// amplitude modulation. Labels are balanced over classes.
struct TextureSpec {
  int n_clips = 64;
  double duration_sec = 2.2;
  uint64_t seed = 0;
  int n_classes = 4;
  double am_depth = 0.5;
  int sample_rate = 16000;
};

struct GeneratedClip {
  Waveform audio;
  std::string clip_id;
  int label = -1;
  std::vector<int> frame_labels;            // event tracks only
  std::vector<std::pair<double, int>> onsets;  // (seconds, class)
};

std::vector<GeneratedClip> GenToneBank(const ToneBankSpec& spec);
std::vector<GeneratedClip> GenEventTrack(const EventTrackSpec& spec);
std::vector<GeneratedClip> GenTextureClips(const TextureSpec& spec);

// Writes WAVs plus manifest.jsonl (and frame-label/onset files for event
// tracks) into out_dir. Returns the manifest path.
std::string WriteCorpus(const std::vector<GeneratedClip>& clips,
                        const std::string& out_dir);

}  // namespace ssaudio

#endif  // SSAUDIO_SYNTHGEN_SYNTHGEN_H_
