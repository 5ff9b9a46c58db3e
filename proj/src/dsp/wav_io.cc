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

#include "dsp/wav_io.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "core/common.h"

namespace ssaudio {
namespace {

uint32_t ReadU32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
         (static_cast<uint32_t>(b[2]) << 16) |
         (static_cast<uint32_t>(b[3]) << 24);
}

uint16_t ReadU16(std::istream& in) {
  unsigned char b[2];
  in.read(reinterpret_cast<char*>(b), 2);
  return static_cast<uint16_t>(b[0] | (b[1] << 8));
}

void WriteU32(std::ostream& out, uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
               static_cast<char>((v >> 16) & 0xff),
               static_cast<char>((v >> 24) & 0xff)};
  out.write(b, 4);
}

void WriteU16(std::ostream& out, uint16_t v) {
  char b[2] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff)};
  out.write(b, 2);
}

}  // namespace

Waveform ReadWav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  SSA_CHECK_DATA(in.good()) << "cannot open wav file: " << path;

  char riff[4], wave[4];
  in.read(riff, 4);
  ReadU32(in);  // total size, unused
  in.read(wave, 4);
  SSA_CHECK_DATA(in.good() && std::memcmp(riff, "RIFF", 4) == 0 &&
                 std::memcmp(wave, "WAVE", 4) == 0)
      << "not a RIFF/WAVE file: " << path;

  uint16_t channels = 0, bits = 0, format = 0;
  uint32_t rate = 0;
  bool have_fmt = false;
  std::vector<int16_t> pcm;

  while (in.good()) {
    char chunk_id[4];
    in.read(chunk_id, 4);
    if (!in.good()) break;
    uint32_t chunk_size = ReadU32(in);
    if (std::memcmp(chunk_id, "fmt ", 4) == 0) {
      format = ReadU16(in);
      channels = ReadU16(in);
      rate = ReadU32(in);
      ReadU32(in);  // byte rate
      ReadU16(in);  // block align
      bits = ReadU16(in);
      if (chunk_size > 16) in.seekg(chunk_size - 16, std::ios::cur);
      have_fmt = true;
    } else if (std::memcmp(chunk_id, "data", 4) == 0) {
      SSA_CHECK_DATA(have_fmt) << "wav data chunk before fmt chunk: " << path;
      SSA_CHECK_DATA(format == 1 && bits == 16)
          << "only 16-bit PCM wav is supported: " << path;
      SSA_CHECK_DATA(channels == 1 || channels == 2)
          << "only mono or stereo wav is supported: " << path;
      pcm.resize(chunk_size / 2);
      in.read(reinterpret_cast<char*>(pcm.data()), chunk_size & ~1u);
      SSA_CHECK_DATA(in.good()) << "truncated wav data: " << path;
      break;
    } else {
      // skip unknown chunk (chunks are word-aligned)
      in.seekg(chunk_size + (chunk_size & 1), std::ios::cur);
    }
  }
  SSA_CHECK_DATA(have_fmt && !pcm.empty()) << "no audio data in wav: " << path;

  Waveform w;
  w.sample_rate = static_cast<int>(rate);
  const double scale = 1.0 / 32768.0;
  if (channels == 1) {
    w.samples.resize(pcm.size());
    for (size_t i = 0; i < pcm.size(); ++i) w.samples[i] = pcm[i] * scale;
  } else {
    const size_t frames = pcm.size() / 2;
    w.samples.resize(frames);
    for (size_t i = 0; i < frames; ++i) {
      w.samples[i] = 0.5 * (pcm[2 * i] + pcm[2 * i + 1]) * scale;
    }
  }
  return w;
}

void WriteWav(const std::string& path, const Waveform& w) {
  SSA_CHECK_DATA(w.sample_rate > 0) << "invalid sample rate for " << path;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  SSA_CHECK_DATA(out.good()) << "cannot write wav file: " << path;

  const uint32_t n = static_cast<uint32_t>(w.samples.size());
  const uint32_t data_bytes = n * 2;
  out.write("RIFF", 4);
  WriteU32(out, 36 + data_bytes);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  WriteU32(out, 16);
  WriteU16(out, 1);  // PCM
  WriteU16(out, 1);  // mono
  WriteU32(out, static_cast<uint32_t>(w.sample_rate));
  WriteU32(out, static_cast<uint32_t>(w.sample_rate) * 2);
  WriteU16(out, 2);
  WriteU16(out, 16);
  out.write("data", 4);
  WriteU32(out, data_bytes);
  for (uint32_t i = 0; i < n; ++i) {
    double v = std::clamp(w.samples[i], -1.0, 1.0);
    auto q = static_cast<int16_t>(std::lrint(v * 32767.0));
    char b[2] = {static_cast<char>(q & 0xff), static_cast<char>((q >> 8) & 0xff)};
    out.write(b, 2);
  }
  SSA_CHECK_DATA(out.good()) << "write failed: " << path;
}

}  // namespace ssaudio
