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

#ifndef SSAUDIO_CORE_COMMON_H_
#define SSAUDIO_CORE_COMMON_H_

#include <sstream>
#include <stdexcept>
#include <string>

namespace ssaudio {

// Error taxonomy used for CLI exit codes: config (2), data (3), numeric (4).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace internal {

// Collects a streamed message and throws on destruction.
template <typename Error>
class ThrowStream {
 public:
  ThrowStream(const char* file, int line) {
    stream_ << file << ":" << line << ": ";
  }
  [[noreturn]] ~ThrowStream() noexcept(false) { throw Error(stream_.str()); }
  template <typename T>
  ThrowStream& operator<<(const T& value) {
    stream_ << value;
    return *this;
  }

 private:
  std::ostringstream stream_;
};

}  // namespace internal
}  // namespace ssaudio

#define SSA_THROW(ErrorType) \
  ::ssaudio::internal::ThrowStream<ErrorType>(__FILE__, __LINE__)

#define SSA_CHECK(cond)                                    \
  if (cond) {                                              \
  } else                                                   \
    SSA_THROW(::std::runtime_error) << "check failed: (" #cond ") "

#define SSA_CHECK_CONFIG(cond)                             \
  if (cond) {                                              \
  } else                                                   \
    SSA_THROW(::ssaudio::ConfigError) << "invalid config: (" #cond ") "

#define SSA_CHECK_DATA(cond)                               \
  if (cond) {                                              \
  } else                                                   \
    SSA_THROW(::ssaudio::DataError) << "bad data: (" #cond ") "

#endif  // SSAUDIO_CORE_COMMON_H_
