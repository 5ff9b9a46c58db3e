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

#ifndef SSAUDIO_CORE_RNG_H_
#define SSAUDIO_CORE_RNG_H_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace ssaudio {

// Seeded random source. Every stochastic component takes one of these;
// sub-streams are derived with DeriveSeed so that epoch-level replay does
// not depend on consumption order elsewhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  double Uniform(double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(engine_);
  }

  double Normal(double mean = 0.0, double stddev = 1.0) {
    std::normal_distribution<double> dist(mean, stddev);
    return dist(engine_);
  }

  // Uniform integer in [0, n).
  int64_t UniformInt(int64_t n) {
    std::uniform_int_distribution<int64_t> dist(0, n - 1);
    return dist(engine_);
  }

  bool Bernoulli(double p) {
    std::bernoulli_distribution dist(p);
    return dist(engine_);
  }

  template <typename T>
  void Shuffle(std::vector<T>* values) {
    std::shuffle(values->begin(), values->end(), engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Stable seed derivation: mixes a base seed with a tag and an index so that
// independent streams (init, per-epoch sampling, dropout, ...) never collide.
uint64_t DeriveSeed(uint64_t base, std::string_view tag, uint64_t index = 0);

}  // namespace ssaudio

#endif  // SSAUDIO_CORE_RNG_H_
