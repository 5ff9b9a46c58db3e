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

#ifndef SSAUDIO_DSP_WAV_IO_H_
#define SSAUDIO_DSP_WAV_IO_H_

#include <string>

#include "dsp/waveform.h"

namespace ssaudio {

// Reads a 16-bit PCM RIFF/WAVE file. Stereo is downmixed by averaging the
// two channels; other channel counts or sample formats raise DataError.
Waveform ReadWav(const std::string& path);

// Writes mono 16-bit PCM. Samples are clamped to [-1, 1].
void WriteWav(const std::string& path, const Waveform& w);

}  // namespace ssaudio

#endif  // SSAUDIO_DSP_WAV_IO_H_
