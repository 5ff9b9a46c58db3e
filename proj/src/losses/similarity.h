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

#ifndef SSAUDIO_LOSSES_SIMILARITY_H_
#define SSAUDIO_LOSSES_SIMILARITY_H_

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "core/tensor.h"

namespace ssaudio {

// Which pairwise similarity the contrastive losses use. The bilinear form
// u'Wv with a learned W is the default; the cosine variant divides the
// cosine by a fixed temperature (0.2) and ignores W.
struct SimilarityMode {
  enum class Kind { kBilinear, kCosine };
  Kind kind = Kind::kBilinear;
  double cosine_temperature = 0.2;
  bool shared_bilinear = false;

  void Validate() const;
};

nlohmann::json SimilarityModeToJson(const SimilarityMode& mode);
SimilarityMode SimilarityModeFromJson(const nlohmann::json& j);

// u'Wv for vectors u, v of length d and W of shape (d, d).
double SimBilinear(const Tensor& u, const Tensor& v, const Tensor& w);

// cos(u, v) / temperature. Throws NumericError on zero-norm input.
double SimCosine(const Tensor& u, const Tensor& v, double temperature);

}  // namespace ssaudio

#endif  // SSAUDIO_LOSSES_SIMILARITY_H_
