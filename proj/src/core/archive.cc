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

#include "core/archive.h"

#include <cstring>
#include <fstream>
#include <memory>

#include <nlohmann/json.hpp>

#include "core/common.h"

namespace ssaudio {
namespace {

constexpr char kMagic[8] = {'S', 'S', 'A', 'T', 'N', 'S', 'R', '1'};

void WriteU32(std::ostream& out, uint32_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

void WriteI64(std::ostream& out, int64_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

uint32_t ReadU32(std::istream& in) {
  uint32_t v = 0;
  in.read(reinterpret_cast<char*>(&v), sizeof(v));
  SSA_CHECK_DATA(in.good()) << "truncated archive";
  return v;
}

int64_t ReadI64(std::istream& in) {
  int64_t v = 0;
  in.read(reinterpret_cast<char*>(&v), sizeof(v));
  SSA_CHECK_DATA(in.good()) << "truncated archive";
  return v;
}

}  // namespace

struct TensorArchive::Impl {
  std::map<std::string, Tensor> tensors;
  nlohmann::json meta = nlohmann::json::object();
};

TensorArchive::TensorArchive() : impl_(std::make_unique<Impl>()) {}
TensorArchive::~TensorArchive() = default;
TensorArchive::TensorArchive(TensorArchive&&) noexcept = default;
TensorArchive& TensorArchive::operator=(TensorArchive&&) noexcept = default;

void TensorArchive::Put(const std::string& name, Tensor tensor) {
  impl_->tensors[name] = std::move(tensor);
}

bool TensorArchive::Contains(const std::string& name) const {
  return impl_->tensors.count(name) > 0;
}

const Tensor& TensorArchive::Get(const std::string& name) const {
  auto it = impl_->tensors.find(name);
  SSA_CHECK_DATA(it != impl_->tensors.end())
      << "archive is missing tensor '" << name << "'";
  return it->second;
}

std::vector<std::string> TensorArchive::Names() const {
  std::vector<std::string> names;
  names.reserve(impl_->tensors.size());
  for (const auto& kv : impl_->tensors) names.push_back(kv.first);
  return names;
}

size_t TensorArchive::NumTensors() const { return impl_->tensors.size(); }

nlohmann::json& TensorArchive::meta() { return impl_->meta; }
const nlohmann::json& TensorArchive::meta() const { return impl_->meta; }

void TensorArchive::Save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  SSA_CHECK_DATA(out.good()) << "cannot write archive: " << path;
  out.write(kMagic, sizeof(kMagic));

  nlohmann::json header = impl_->meta;
  header["format_version"] = kFormatVersion;
  const std::string meta_str = header.dump();
  WriteU32(out, static_cast<uint32_t>(meta_str.size()));
  out.write(meta_str.data(), static_cast<std::streamsize>(meta_str.size()));

  WriteU32(out, static_cast<uint32_t>(impl_->tensors.size()));
  for (const auto& [name, tensor] : impl_->tensors) {
    WriteU32(out, static_cast<uint32_t>(name.size()));
    out.write(name.data(), static_cast<std::streamsize>(name.size()));
    WriteU32(out, static_cast<uint32_t>(tensor.ndim()));
    for (int64_t d : tensor.shape()) WriteI64(out, d);
    out.write(reinterpret_cast<const char*>(tensor.data()),
              static_cast<std::streamsize>(tensor.size() * sizeof(double)));
  }
  SSA_CHECK_DATA(out.good()) << "write failed: " << path;
}

TensorArchive TensorArchive::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  SSA_CHECK_DATA(in.good()) << "cannot open archive: " << path;

  char magic[8];
  in.read(magic, sizeof(magic));
  SSA_CHECK_DATA(in.good() && std::memcmp(magic, kMagic, sizeof(kMagic)) == 0)
      << "not a tensor archive: " << path;

  const uint32_t meta_len = ReadU32(in);
  std::string meta_str(meta_len, '\0');
  in.read(meta_str.data(), meta_len);
  SSA_CHECK_DATA(in.good()) << "truncated archive header: " << path;

  TensorArchive archive;
  archive.impl_->meta = nlohmann::json::parse(meta_str, nullptr, false);
  SSA_CHECK_DATA(!archive.impl_->meta.is_discarded())
      << "corrupt archive metadata: " << path;
  const int version = archive.impl_->meta.value("format_version", -1);
  SSA_CHECK_DATA(version == kFormatVersion)
      << "unsupported archive version " << version << " in " << path;

  const uint32_t count = ReadU32(in);
  for (uint32_t i = 0; i < count; ++i) {
    const uint32_t name_len = ReadU32(in);
    std::string name(name_len, '\0');
    in.read(name.data(), name_len);
    const uint32_t ndim = ReadU32(in);
    std::vector<int64_t> shape(ndim);
    for (uint32_t d = 0; d < ndim; ++d) shape[d] = ReadI64(in);
    Tensor tensor(shape);
    in.read(reinterpret_cast<char*>(tensor.data()),
            static_cast<std::streamsize>(tensor.size() * sizeof(double)));
    SSA_CHECK_DATA(in.good()) << "truncated tensor '" << name << "' in " << path;
    archive.impl_->tensors[name] = std::move(tensor);
  }
  return archive;
}

}  // namespace ssaudio
