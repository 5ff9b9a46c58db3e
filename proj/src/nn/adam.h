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

#ifndef SSAUDIO_NN_ADAM_H_
#define SSAUDIO_NN_ADAM_H_

#include <vector>

#include "core/archive.h"
#include "nn/param.h"

namespace ssaudio {

struct AdamConfig {
  double learning_rate = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  // No weight decay and no schedule; the rate stays constant.
};

// Adaptive-moment optimizer over a fixed parameter list. Moment state can
// round-trip through a TensorArchive so interrupted runs resume exactly.
class AdamOptimizer {
 public:
  AdamOptimizer(std::vector<ParamRef> params, const AdamConfig& cfg);

  void Step();
  void ZeroGrads();

  void set_learning_rate(double lr) { cfg_.learning_rate = lr; }
  double learning_rate() const { return cfg_.learning_rate; }
  int64_t step_count() const { return step_; }

  void SaveState(TensorArchive* archive) const;
  void LoadState(const TensorArchive& archive);

 private:
  std::vector<ParamRef> params_;
  AdamConfig cfg_;
  int64_t step_ = 0;
  std::vector<Tensor> m_, v_;
};

}  // namespace ssaudio

#endif  // SSAUDIO_NN_ADAM_H_
