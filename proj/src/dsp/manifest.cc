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

#include "dsp/manifest.h"

#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "core/common.h"
#include "dsp/resample.h"
#include "dsp/wav_io.h"

namespace ssaudio {

namespace fs = std::filesystem;

std::string Manifest::ResolvePath(const std::string& relative) const {
  fs::path p(relative);
  if (p.is_absolute()) return relative;
  return (fs::path(base_dir) / p).string();
}

Manifest ReadManifest(const std::string& path) {
  std::ifstream in(path);
  SSA_CHECK_DATA(in.good()) << "cannot open manifest: " << path;

  Manifest manifest;
  manifest.base_dir = fs::path(path).parent_path().string();
  if (manifest.base_dir.empty()) manifest.base_dir = ".";

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    SSA_CHECK_DATA(j.is_object())
        << "manifest " << path << " line " << line_no << ": not a JSON object";
    SSA_CHECK_DATA(j.contains("path") && j.contains("clip_id"))
        << "manifest " << path << " line " << line_no
        << ": 'path' and 'clip_id' are required";
    ManifestEntry e;
    e.path = j["path"].get<std::string>();
    e.clip_id = j["clip_id"].get<std::string>();
    if (j.contains("label") && !j["label"].is_null()) {
      e.label = j["label"].get<int>();
    }
    if (j.contains("frame_labels") && !j["frame_labels"].is_null()) {
      e.frame_labels = j["frame_labels"].get<std::string>();
    }
    manifest.entries.push_back(std::move(e));
  }
  SSA_CHECK_DATA(!manifest.entries.empty()) << "empty manifest: " << path;
  return manifest;
}

void WriteManifest(const std::string& path,
                   const std::vector<ManifestEntry>& entries) {
  std::ofstream out(path, std::ios::trunc);
  SSA_CHECK_DATA(out.good()) << "cannot write manifest: " << path;
  for (const auto& e : entries) {
    nlohmann::json j{{"path", e.path}, {"clip_id", e.clip_id}};
    if (e.label) j["label"] = *e.label;
    if (e.frame_labels) j["frame_labels"] = *e.frame_labels;
    out << j.dump() << "\n";
  }
}

std::vector<int> ReadFrameLabels(const std::string& path) {
  std::ifstream in(path);
  SSA_CHECK_DATA(in.good()) << "cannot open frame labels: " << path;
  std::vector<int> labels;
  int64_t index = 0, value = 0;
  while (in >> index >> value) {
    SSA_CHECK_DATA(index == static_cast<int64_t>(labels.size()))
        << "non-contiguous frame index " << index << " in " << path;
    labels.push_back(static_cast<int>(value));
  }
  return labels;
}

void WriteFrameLabels(const std::string& path, const std::vector<int>& labels) {
  std::ofstream out(path, std::ios::trunc);
  SSA_CHECK_DATA(out.good()) << "cannot write frame labels: " << path;
  for (size_t i = 0; i < labels.size(); ++i) {
    out << i << "\t" << labels[i] << "\n";
  }
}

Waveform LoadClipAudio(const std::string& path, int target_rate) {
  Waveform w = ReadWav(path);
  w = ResampleToRate(w, target_rate);
  return PeakNormalize(std::move(w));
}

}  // namespace ssaudio
