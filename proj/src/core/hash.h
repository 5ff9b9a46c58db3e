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

#ifndef SSAUDIO_CORE_HASH_H_
#define SSAUDIO_CORE_HASH_H_

#include <cstdint>
#include <string>

namespace ssaudio {

// FNV-1a. Used for config hashes, artifact integrity and frozen-parameter
// comparisons; not a cryptographic hash.
uint64_t Fnv1a64(const void* data, size_t len, uint64_t state = 0xcbf29ce484222325ull);
uint64_t Fnv1a64(const std::string& text, uint64_t state = 0xcbf29ce484222325ull);

std::string HashToHex(uint64_t hash);

// Hash of a whole file's bytes. Throws DataError if unreadable.
std::string HashFileHex(const std::string& path);

}  // namespace ssaudio

#endif  // SSAUDIO_CORE_HASH_H_
