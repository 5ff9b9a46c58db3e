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

#ifndef SSAUDIO_CORE_ARCHIVE_H_
#define SSAUDIO_CORE_ARCHIVE_H_

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "core/tensor.h"

namespace ssaudio {

// Versioned container of named f64 tensors plus a JSON metadata block.
// Checkpoints and embedding archives are both stored in this format:
//
//   magic "SSATNSR1" | u32 meta_len | meta JSON bytes | u32 n_tensors |
//   per tensor: u32 name_len, name, u32 ndim, i64 dims..., f64 data...
//
// All integers little-endian. Round-trips are bit-exact.
class TensorArchive {
 public:
  static constexpr int kFormatVersion = 1;

  TensorArchive();
  ~TensorArchive();
  TensorArchive(TensorArchive&&) noexcept;
  TensorArchive& operator=(TensorArchive&&) noexcept;
  TensorArchive(const TensorArchive&) = delete;
  TensorArchive& operator=(const TensorArchive&) = delete;

  void Put(const std::string& name, Tensor tensor);
  bool Contains(const std::string& name) const;
  const Tensor& Get(const std::string& name) const;  // throws DataError if absent
  std::vector<std::string> Names() const;
  size_t NumTensors() const;

  nlohmann::json& meta();
  const nlohmann::json& meta() const;

  void Save(const std::string& path) const;
  static TensorArchive Load(const std::string& path);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ssaudio

#endif  // SSAUDIO_CORE_ARCHIVE_H_
