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

#include "synthgen/synthgen.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>

#include "core/common.h"
#include "core/hash.h"
#include "core/rng.h"
#include "dsp/fft.h"
#include "dsp/wav_io.h"

namespace ssaudio {

namespace fs = std::filesystem;

namespace {

// Raised-cosine attack/decay envelope; keeps clip energy time-varying so
// frame-level contrast has structure to latch onto.
double Envelope(double t, double duration, double attack, double release) {
  if (t < attack) return 0.5 - 0.5 * std::cos(M_PI * t / attack);
  const double tail = duration - release;
  if (t > tail) return 0.5 + 0.5 * std::cos(M_PI * (t - tail) / release);
  return 1.0;
}

int NextPow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

// White noise filtered to [lo_hz, hi_hz] via FFT masking.
std::vector<double> BandNoise(Rng* rng, int n, int sample_rate, double lo_hz,
                              double hi_hz) {
  const int nfft = NextPow2(n);
  std::vector<double> buf(static_cast<size_t>(nfft), 0.0);
  for (int i = 0; i < n; ++i) buf[static_cast<size_t>(i)] = rng->Normal();

  RealFft fft(nfft);
  std::vector<std::complex<double>> spec(static_cast<size_t>(fft.num_bins()));
  fft.Forward(buf.data(), spec.data());
  const double bin_hz = static_cast<double>(sample_rate) / nfft;
  for (int k = 0; k < fft.num_bins(); ++k) {
    const double f = k * bin_hz;
    if (f < lo_hz || f > hi_hz) spec[static_cast<size_t>(k)] = 0.0;
  }
  fft.Inverse(spec.data(), buf.data());
  buf.resize(static_cast<size_t>(n));

  double peak = 1e-12;
  for (double v : buf) peak = std::max(peak, std::fabs(v));
  for (double& v : buf) v /= peak;
  return buf;
}

std::string ClipId(const char* prefix, uint64_t seed, int index) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s_%04x_%04d", prefix,
                static_cast<unsigned>(seed & 0xffff), index);
  return buf;
}

struct EventTemplate {
  // Renders one event of `n` samples into out (additively, pre-windowed).
  void Render(Rng* rng, int cls, int n, int sample_rate,
              std::vector<double>* out) const {
    const double dt = 1.0 / sample_rate;
    switch (cls) {
      case 1: {  // amplitude-modulated tone
        const double f = 900.0;
        double phase = rng->Uniform(0, 2 * M_PI);
        for (int i = 0; i < n; ++i) {
          const double t = i * dt;
          (*out)[static_cast<size_t>(i)] =
              (0.7 + 0.3 * std::sin(2 * M_PI * 8.0 * t)) *
              std::sin(2 * M_PI * f * t + phase);
        }
        break;
      }
      case 2: {  // mid band noise burst
        auto noise = BandNoise(rng, n, sample_rate, 2000.0, 3000.0);
        std::copy(noise.begin(), noise.end(), out->begin());
        break;
      }
      case 3: {  // descending chirp
        const double f0 = 5200.0, f1 = 3200.0;
        const double phase0 = rng->Uniform(0, 2 * M_PI);
        for (int i = 0; i < n; ++i) {
          const double t = i * dt;
          const double dur = n * dt;
          const double f = f0 + (f1 - f0) * t / dur;
          (*out)[static_cast<size_t>(i)] =
              std::sin(2 * M_PI * (f0 * t + 0.5 * (f1 - f0) * t * t / dur) +
                       phase0 + 0.0 * f);
        }
        break;
      }
      case 4: {  // odd-harmonic stack
        const double f = 500.0;
        double phase = rng->Uniform(0, 2 * M_PI);
        for (int i = 0; i < n; ++i) {
          const double t = i * dt;
          double v = 0.0;
          for (int k = 1; k <= 5; k += 2) {
            v += std::sin(2 * M_PI * f * k * t + phase * k) / k;
          }
          (*out)[static_cast<size_t>(i)] = v / 1.53;
        }
        break;
      }
      case 5: {  // high band noise burst
        auto noise = BandNoise(rng, n, sample_rate, 5000.0, 6500.0);
        std::copy(noise.begin(), noise.end(), out->begin());
        break;
      }
      default:
        SSA_THROW(ConfigError) << "no event template for class " << cls;
    }
  }
};

}  // namespace

double MidiToHz(int midi) {
  return 440.0 * std::pow(2.0, (midi - 69) / 12.0);
}

std::vector<GeneratedClip> GenToneBank(const ToneBankSpec& spec) {
  SSA_CHECK_CONFIG(spec.n_clips > 0 && spec.duration_sec > 0) << "tone bank size";
  SSA_CHECK_CONFIG(spec.midi_min >= 21 && spec.midi_max <= 108 &&
                   spec.midi_min <= spec.midi_max)
      << "midi range " << spec.midi_min << ".." << spec.midi_max;
  SSA_CHECK_CONFIG(MidiToHz(spec.midi_min) >= spec.fmin_hz &&
                   MidiToHz(spec.midi_max) <= spec.fmax_hz)
      << "fundamental range " << MidiToHz(spec.midi_min) << "-"
      << MidiToHz(spec.midi_max) << " Hz outside analysis band ["
      << spec.fmin_hz << ", " << spec.fmax_hz << "]";

  const int span = spec.midi_max - spec.midi_min + 1;
  const int n = static_cast<int>(spec.duration_sec * spec.sample_rate);
  const double nyquist = spec.sample_rate / 2.0;

  std::vector<GeneratedClip> clips;
  clips.reserve(static_cast<size_t>(spec.n_clips));
  for (int i = 0; i < spec.n_clips; ++i) {
    Rng rng(DeriveSeed(spec.seed, "tone_bank", static_cast<uint64_t>(i)));
    const int midi = spec.midi_min + i % span;
    const double f0 = MidiToHz(midi);

    GeneratedClip clip;
    clip.clip_id = ClipId("tone", spec.seed, i);
    clip.label = midi - 21;  // 88-key index, 0 = A0
    clip.audio.sample_rate = spec.sample_rate;
    clip.audio.samples.assign(static_cast<size_t>(n), 0.0);

    std::vector<double> phases(static_cast<size_t>(spec.harmonics));
    for (auto& p : phases) p = rng.Uniform(0, 2 * M_PI);
    const double attack = rng.Uniform(0.02, 0.08);
    const double release = rng.Uniform(0.1, 0.3);
    const double tremolo_rate = rng.Uniform(3.0, 7.0);
    const double tremolo_depth = rng.Uniform(0.05, 0.2);

    for (int s = 0; s < n; ++s) {
      const double t = static_cast<double>(s) / spec.sample_rate;
      double v = 0.0;
      for (int k = 1; k <= spec.harmonics; ++k) {
        const double fk = f0 * k;
        if (fk >= nyquist) break;
        v += std::sin(2 * M_PI * fk * t + phases[static_cast<size_t>(k - 1)]) / k;
      }
      v *= Envelope(t, spec.duration_sec, attack, release);
      v *= 1.0 + tremolo_depth * std::sin(2 * M_PI * tremolo_rate * t);
      clip.audio.samples[static_cast<size_t>(s)] = 0.45 * v;
    }
    clips.push_back(std::move(clip));
  }
  return clips;
}

std::vector<GeneratedClip> GenEventTrack(const EventTrackSpec& spec) {
  SSA_CHECK_CONFIG(spec.n_classes >= 2 && spec.n_classes <= 5)
      << "event classes must be in [2, 5], got " << spec.n_classes;
  SSA_CHECK_CONFIG(spec.max_polyphony == 1)
      << "overlapping events are unsupported (max_polyphony "
      << spec.max_polyphony << " > 1)";
  SSA_CHECK_CONFIG(spec.events_per_clip >= 0) << "event density";
  SSA_CHECK_CONFIG(spec.events_per_clip * spec.event_max_sec <=
                   0.8 * spec.duration_sec)
      << "event density " << spec.events_per_clip
      << " cannot be scheduled without overlap in " << spec.duration_sec
      << " s clips";

  const int n = static_cast<int>(spec.duration_sec * spec.sample_rate);
  const double hop_s = spec.hop_ms / 1000.0;
  const int hop = static_cast<int>(std::lround(hop_s * spec.sample_rate));
  const int n_frames = n / hop;
  EventTemplate templates;

  std::vector<GeneratedClip> clips;
  clips.reserve(static_cast<size_t>(spec.n_clips));
  for (int i = 0; i < spec.n_clips; ++i) {
    Rng rng(DeriveSeed(spec.seed, "event_track", static_cast<uint64_t>(i)));

    GeneratedClip clip;
    clip.clip_id = ClipId("event", spec.seed, i);
    clip.label = -1;
    clip.audio.sample_rate = spec.sample_rate;
    clip.audio.samples.assign(static_cast<size_t>(n), 0.0);
    clip.frame_labels.assign(static_cast<size_t>(n_frames), 0);
    for (auto& s : clip.audio.samples) s = spec.noise_level * rng.Normal();

    const double frac = spec.events_per_clip - std::floor(spec.events_per_clip);
    int n_events = static_cast<int>(std::floor(spec.events_per_clip)) +
                   (rng.Uniform(0, 1) < frac ? 1 : 0);

    // Event boundaries live on the label-frame grid so the emitted onset
    // list and the first labeled frame of each run agree exactly.
    std::vector<std::pair<int, int>> placed;  // (start_frame, end_frame)
    for (int e = 0; e < n_events; ++e) {
      const int dur_frames = static_cast<int>(
          rng.Uniform(spec.event_min_sec, spec.event_max_sec) / hop_s);
      bool ok = false;
      for (int attempt = 0; attempt < 100 && !ok; ++attempt) {
        const int start =
            static_cast<int>(rng.UniformInt(std::max(1, n_frames - dur_frames)));
        const int end = start + dur_frames;
        ok = true;
        for (const auto& [ps, pe] : placed) {
          if (start < pe + 2 && ps < end + 2) {  // 1-frame guard band
            ok = false;
            break;
          }
        }
        if (ok) {
          const int cls = 1 + static_cast<int>(rng.UniformInt(spec.n_classes));
          placed.emplace_back(start, end);
          for (int fidx = start; fidx < end && fidx < n_frames; ++fidx) {
            clip.frame_labels[static_cast<size_t>(fidx)] = cls;
          }
          clip.onsets.emplace_back(start * hop_s, cls);

          const int s0 = start * hop;
          const int ns = std::min(end * hop, n) - s0;
          std::vector<double> event(static_cast<size_t>(ns), 0.0);
          templates.Render(&rng, cls, ns, spec.sample_rate, &event);
          const int edge = std::min(ns / 4, hop);
          for (int s = 0; s < ns; ++s) {
            double w = 1.0;
            if (s < edge) w = static_cast<double>(s) / edge;
            if (s >= ns - edge) w = static_cast<double>(ns - 1 - s) / edge;
            clip.audio.samples[static_cast<size_t>(s0 + s)] +=
                0.5 * w * event[static_cast<size_t>(s)];
          }
        }
      }
    }
    std::sort(clip.onsets.begin(), clip.onsets.end());
    clips.push_back(std::move(clip));
  }
  return clips;
}

std::vector<GeneratedClip> GenTextureClips(const TextureSpec& spec) {
  SSA_CHECK_CONFIG(spec.n_classes >= 2 && spec.n_classes <= 5)
      << "texture classes must be in [2, 5], got " << spec.n_classes;
  SSA_CHECK_CONFIG(spec.n_clips > 0 && spec.duration_sec > 0) << "texture size";

  static const double kBands[5][2] = {
      {100, 400}, {700, 1300}, {1800, 3000}, {3800, 5600}, {6200, 7600}};
  const int n = static_cast<int>(spec.duration_sec * spec.sample_rate);

  std::vector<GeneratedClip> clips;
  clips.reserve(static_cast<size_t>(spec.n_clips));
  for (int i = 0; i < spec.n_clips; ++i) {
    Rng rng(DeriveSeed(spec.seed, "texture", static_cast<uint64_t>(i)));
    const int cls = i % spec.n_classes;

    GeneratedClip clip;
    clip.clip_id = ClipId("texture", spec.seed, i);
    clip.label = cls;
    clip.audio.sample_rate = spec.sample_rate;
    clip.audio.samples =
        BandNoise(&rng, n, spec.sample_rate, kBands[cls][0], kBands[cls][1]);

    const double am_rate = rng.Uniform(2.0, 8.0);
    const double am_phase = rng.Uniform(0, 2 * M_PI);
    for (int s = 0; s < n; ++s) {
      const double t = static_cast<double>(s) / spec.sample_rate;
      clip.audio.samples[static_cast<size_t>(s)] *=
          0.9 * (1.0 - spec.am_depth * 0.5 +
                 spec.am_depth * 0.5 *
                     std::sin(2 * M_PI * am_rate * t + am_phase)) *
          Envelope(t, spec.duration_sec, 0.05, 0.1);
    }
    clips.push_back(std::move(clip));
  }
  return clips;
}

std::string WriteCorpus(const std::vector<GeneratedClip>& clips,
                        const std::string& out_dir) {
  SSA_CHECK_DATA(!clips.empty()) << "no clips to write";
  fs::create_directories(out_dir);

  std::vector<ManifestEntry> entries;
  entries.reserve(clips.size());
  for (const auto& clip : clips) {
    const std::string wav_name = clip.clip_id + ".wav";
    WriteWav((fs::path(out_dir) / wav_name).string(), clip.audio);

    ManifestEntry e;
    e.path = wav_name;
    e.clip_id = clip.clip_id;
    if (clip.label >= 0) e.label = clip.label;
    if (!clip.frame_labels.empty()) {
      const std::string label_name = clip.clip_id + "_frames.tsv";
      WriteFrameLabels((fs::path(out_dir) / label_name).string(),
                       clip.frame_labels);
      e.frame_labels = label_name;

      std::ofstream onset_out(fs::path(out_dir) / (clip.clip_id + "_onsets.tsv"));
      for (const auto& [t, cls] : clip.onsets) {
        onset_out << t << "\t" << cls << "\n";
      }
    }
    entries.push_back(std::move(e));
  }

  const std::string manifest_path =
      (fs::path(out_dir) / "manifest.jsonl").string();
  WriteManifest(manifest_path, entries);
  return manifest_path;
}

}  // namespace ssaudio
