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

#ifndef SSAUDIO_NN_LAYERS_H_
#define SSAUDIO_NN_LAYERS_H_

#include <string>
#include <vector>

#include "core/rng.h"
#include "core/tensor.h"
#include "nn/param.h"

namespace ssaudio {

// Layers follow a forward/backward pair convention: Forward optionally
// fills a per-call cache (pass nullptr for inference), Backward consumes
// the cache, accumulates parameter gradients in place and returns the
// gradient with respect to the layer input. Parameters and caches are
// separate so several activation records can coexist (one per view) while
// gradients accumulate into shared parameters.

class Linear {
 public:
  struct Cache {
    Tensor input;  // (rows, in)
  };

  Linear() = default;
  Linear(int64_t in_features, int64_t out_features);

  void InitHe(Rng* rng);
  // x: (rows, in) -> (rows, out)
  Tensor Forward(const Tensor& x, Cache* cache) const;
  Tensor Backward(const Tensor& grad_out, const Cache& cache);

  std::vector<ParamRef> Params(const std::string& prefix);

  int64_t in_features() const { return weight_.dim(1); }
  int64_t out_features() const { return weight_.dim(0); }

 private:
  Tensor weight_;  // (out, in)
  Tensor bias_;    // (out)
  Tensor grad_weight_, grad_bias_;
};

class Conv2d {
 public:
  struct Cache {
    Tensor cols;  // im2col matrix (C*k*k, B*H_out*W_out), reused in backward
    std::vector<int64_t> in_shape;
  };

  Conv2d() = default;
  Conv2d(int64_t in_channels, int64_t out_channels, int kernel, int stride,
         int pad);

  void InitHe(Rng* rng);
  // x: (B, C, H, W) -> (B, C_out, H_out, W_out)
  Tensor Forward(const Tensor& x, Cache* cache) const;
  Tensor Backward(const Tensor& grad_out, const Cache& cache);

  std::vector<ParamRef> Params(const std::string& prefix);

  int64_t OutSize(int64_t in) const {
    return (in + 2 * pad_ - kernel_) / stride_ + 1;
  }
  int64_t out_channels() const { return weight_.dim(0); }
  int64_t in_channels() const { return in_channels_; }

 private:
  Tensor Im2Col(const Tensor& x) const;

  int64_t in_channels_ = 0;
  int kernel_ = 3, stride_ = 1, pad_ = 1;
  Tensor weight_;  // (C_out, C_in * k * k)
  Tensor bias_;    // (C_out)
  Tensor grad_weight_, grad_bias_;
};

// Normalizes over the last dimension with learned gain and bias.
class LayerNorm {
 public:
  struct Cache {
    Tensor xhat;     // (rows, dim)
    Tensor inv_std;  // (rows)
  };

  LayerNorm() = default;
  explicit LayerNorm(int64_t dim);

  Tensor Forward(const Tensor& x, Cache* cache) const;
  Tensor Backward(const Tensor& grad_out, const Cache& cache);

  std::vector<ParamRef> Params(const std::string& prefix);

 private:
  static constexpr double kEpsilon = 1e-5;
  Tensor gain_, bias_;
  Tensor grad_gain_, grad_bias_;
};

// Elementwise activations. The cache is the forward input (ReLU) or
// output (tanh).
Tensor ReluForward(const Tensor& x, Tensor* cache);
Tensor ReluBackward(const Tensor& grad_out, const Tensor& cache);
Tensor TanhForward(const Tensor& x, Tensor* cache);
Tensor TanhBackward(const Tensor& grad_out, const Tensor& cache);

}  // namespace ssaudio

#endif  // SSAUDIO_NN_LAYERS_H_
