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

#include "nn/adam.h"

#include <cmath>

#include <nlohmann/json.hpp>

#include "core/common.h"

namespace ssaudio {

AdamOptimizer::AdamOptimizer(std::vector<ParamRef> params,
                             const AdamConfig& cfg)
    : params_(std::move(params)), cfg_(cfg) {
  m_.reserve(params_.size());
  v_.reserve(params_.size());
  for (const auto& p : params_) {
    m_.emplace_back(p.value->shape());
    v_.emplace_back(p.value->shape());
  }
}

void AdamOptimizer::Step() {
  ++step_;
  const double bc1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(step_));
  const double bc2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(step_));
  for (size_t i = 0; i < params_.size(); ++i) {
    Tensor& value = *params_[i].value;
    const Tensor& grad = *params_[i].grad;
    Tensor& m = m_[i];
    Tensor& v = v_[i];
    for (int64_t j = 0; j < value.size(); ++j) {
      const double g = grad[j];
      m[j] = cfg_.beta1 * m[j] + (1.0 - cfg_.beta1) * g;
      v[j] = cfg_.beta2 * v[j] + (1.0 - cfg_.beta2) * g * g;
      const double mhat = m[j] / bc1;
      const double vhat = v[j] / bc2;
      value[j] -= cfg_.learning_rate * mhat / (std::sqrt(vhat) + cfg_.epsilon);
    }
  }
}

void AdamOptimizer::ZeroGrads() { ::ssaudio::ZeroGrads(params_); }

void AdamOptimizer::SaveState(TensorArchive* archive) const {
  for (size_t i = 0; i < params_.size(); ++i) {
    archive->Put("adam.m." + params_[i].name, m_[i]);
    archive->Put("adam.v." + params_[i].name, v_[i]);
  }
  archive->meta()["adam_step"] = step_;
}

void AdamOptimizer::LoadState(const TensorArchive& archive) {
  for (size_t i = 0; i < params_.size(); ++i) {
    const Tensor& m = archive.Get("adam.m." + params_[i].name);
    const Tensor& v = archive.Get("adam.v." + params_[i].name);
    SSA_CHECK_DATA(m.SameShape(*params_[i].value) &&
                   v.SameShape(*params_[i].value))
        << "optimizer state shape mismatch for " << params_[i].name;
    m_[i] = m;
    v_[i] = v;
  }
  SSA_CHECK_DATA(archive.meta().contains("adam_step"))
      << "archive has no optimizer step count";
  step_ = archive.meta()["adam_step"].get<int64_t>();
}

}  // namespace ssaudio
