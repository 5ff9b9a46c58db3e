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

#ifndef SSAUDIO_NN_PARAM_H_
#define SSAUDIO_NN_PARAM_H_

#include <string>
#include <vector>

#include "core/tensor.h"

namespace ssaudio {

// Named view of one trainable tensor and its gradient accumulator.
// Optimizers and checkpoints enumerate models through lists of these.
struct ParamRef {
  std::string name;
  Tensor* value = nullptr;
  Tensor* grad = nullptr;
};

inline void ZeroGrads(const std::vector<ParamRef>& params) {
  for (const auto& p : params) p.grad->SetZero();
}

inline int64_t CountParams(const std::vector<ParamRef>& params) {
  int64_t total = 0;
  for (const auto& p : params) total += p.value->size();
  return total;
}

}  // namespace ssaudio

#endif  // SSAUDIO_NN_PARAM_H_
