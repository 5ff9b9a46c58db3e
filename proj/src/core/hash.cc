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

#include "core/hash.h"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "core/common.h"
#include "core/rng.h"

namespace ssaudio {

uint64_t Fnv1a64(const void* data, size_t len, uint64_t state) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  uint64_t h = state;
  for (size_t i = 0; i < len; ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

uint64_t Fnv1a64(const std::string& text, uint64_t state) {
  return Fnv1a64(text.data(), text.size(), state);
}

std::string HashToHex(uint64_t hash) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << hash;
  return os.str();
}

std::string HashFileHex(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  SSA_CHECK_DATA(in.good()) << "cannot open file for hashing: " << path;
  uint64_t h = 0xcbf29ce484222325ull;
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    std::streamsize got = in.gcount();
    if (got > 0) h = Fnv1a64(buf.data(), static_cast<size_t>(got), h);
  }
  return HashToHex(h);
}

uint64_t DeriveSeed(uint64_t base, std::string_view tag, uint64_t index) {
  uint64_t h = Fnv1a64(&base, sizeof(base));
  h = Fnv1a64(tag.data(), tag.size(), h);
  h = Fnv1a64(&index, sizeof(index), h);
  // splitmix-style finalizer to spread low-entropy indices
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebull;
  h ^= h >> 31;
  return h;
}

}  // namespace ssaudio
