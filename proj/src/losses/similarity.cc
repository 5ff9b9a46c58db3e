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

#include "losses/similarity.h"

#include <cmath>

#include <nlohmann/json.hpp>

#include "core/common.h"

namespace ssaudio {

void SimilarityMode::Validate() const {
  SSA_CHECK_CONFIG(cosine_temperature > 0) << "cosine temperature";
}

nlohmann::json SimilarityModeToJson(const SimilarityMode& mode) {
  return nlohmann::json{
      {"mode", mode.kind == SimilarityMode::Kind::kBilinear ? "bilinear"
                                                            : "cosine"},
      {"cosine_temperature", mode.cosine_temperature},
      {"shared_bilinear", mode.shared_bilinear},
  };
}

SimilarityMode SimilarityModeFromJson(const nlohmann::json& j) {
  SimilarityMode mode;
  const std::string kind = j.value("mode", "bilinear");
  if (kind == "bilinear") {
    mode.kind = SimilarityMode::Kind::kBilinear;
  } else if (kind == "cosine") {
    mode.kind = SimilarityMode::Kind::kCosine;
  } else {
    SSA_THROW(ConfigError) << "unknown similarity mode '" << kind << "'";
  }
  mode.cosine_temperature = j.value("cosine_temperature", 0.2);
  mode.shared_bilinear = j.value("shared_bilinear", false);
  mode.Validate();
  return mode;
}

double SimBilinear(const Tensor& u, const Tensor& v, const Tensor& w) {
  const int64_t d = u.size();
  SSA_CHECK(v.size() == d && w.ndim() == 2 && w.dim(0) == d && w.dim(1) == d)
      << "bilinear similarity shapes: u " << u.ShapeString() << ", v "
      << v.ShapeString() << ", W " << w.ShapeString();
  double acc = 0.0;
  for (int64_t i = 0; i < d; ++i) {
    double row = 0.0;
    for (int64_t j = 0; j < d; ++j) row += w.at(i, j) * v[j];
    acc += u[i] * row;
  }
  return acc;
}

double SimCosine(const Tensor& u, const Tensor& v, double temperature) {
  SSA_CHECK_CONFIG(temperature > 0) << "cosine temperature";
  SSA_CHECK(u.size() == v.size()) << "cosine similarity shapes";
  double uu = 0.0, vv = 0.0, uv = 0.0;
  for (int64_t i = 0; i < u.size(); ++i) {
    uu += u[i] * u[i];
    vv += v[i] * v[i];
    uv += u[i] * v[i];
  }
  if (uu <= 0.0 || vv <= 0.0) {
    SSA_THROW(NumericError) << "cosine similarity of a zero-norm vector";
  }
  return uv / (std::sqrt(uu) * std::sqrt(vv) * temperature);
}

}  // namespace ssaudio
