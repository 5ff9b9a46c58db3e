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

#include "nn/layers.h"

#include <cmath>

namespace ssaudio {

// ---------------------------------------------------------------- Linear

Linear::Linear(int64_t in_features, int64_t out_features)
    : weight_({out_features, in_features}),
      bias_({out_features}),
      grad_weight_({out_features, in_features}),
      grad_bias_({out_features}) {}

void Linear::InitHe(Rng* rng) {
  const double std = std::sqrt(2.0 / static_cast<double>(weight_.dim(1)));
  for (int64_t i = 0; i < weight_.size(); ++i) weight_[i] = std * rng->Normal();
  bias_.SetZero();
}

Tensor Linear::Forward(const Tensor& x, Cache* cache) const {
  const int64_t rows = x.size() / weight_.dim(1);
  SSA_CHECK(rows * weight_.dim(1) == x.size())
      << "linear input " << x.ShapeString() << " does not match in_features "
      << weight_.dim(1);
  Tensor y({rows, weight_.dim(0)});
  y.AsMatrix(rows, weight_.dim(0)).noalias() =
      x.AsMatrix(rows, weight_.dim(1)) *
      weight_.AsMatrix(weight_.dim(0), weight_.dim(1)).transpose();
  auto ym = y.AsMatrix(rows, weight_.dim(0));
  for (int64_t r = 0; r < rows; ++r) {
    for (int64_t c = 0; c < weight_.dim(0); ++c) ym(r, c) += bias_[c];
  }
  if (cache) cache->input = x;
  return y;
}

Tensor Linear::Backward(const Tensor& grad_out, const Cache& cache) {
  const int64_t out = weight_.dim(0);
  const int64_t in = weight_.dim(1);
  const int64_t rows = grad_out.size() / out;
  auto dy = grad_out.AsMatrix(rows, out);
  auto x = cache.input.AsMatrix(rows, in);

  grad_weight_.AsMatrix(out, in).noalias() += dy.transpose() * x;
  auto db = grad_bias_.AsVector();
  db.noalias() += dy.colwise().sum().transpose();

  Tensor dx(cache.input.shape());
  dx.AsMatrix(rows, in).noalias() = dy * weight_.AsMatrix(out, in);
  return dx;
}

std::vector<ParamRef> Linear::Params(const std::string& prefix) {
  return {{prefix + ".weight", &weight_, &grad_weight_},
          {prefix + ".bias", &bias_, &grad_bias_}};
}

// ---------------------------------------------------------------- Conv2d

Conv2d::Conv2d(int64_t in_channels, int64_t out_channels, int kernel,
               int stride, int pad)
    : in_channels_(in_channels),
      kernel_(kernel),
      stride_(stride),
      pad_(pad),
      weight_({out_channels, in_channels * kernel * kernel}),
      bias_({out_channels}),
      grad_weight_({out_channels, in_channels * kernel * kernel}),
      grad_bias_({out_channels}) {}

void Conv2d::InitHe(Rng* rng) {
  const double std = std::sqrt(2.0 / static_cast<double>(weight_.dim(1)));
  for (int64_t i = 0; i < weight_.size(); ++i) weight_[i] = std * rng->Normal();
  bias_.SetZero();
}

Tensor Conv2d::Im2Col(const Tensor& x) const {
  const int64_t b = x.dim(0), c = x.dim(1), h = x.dim(2), w = x.dim(3);
  const int64_t oh = OutSize(h), ow = OutSize(w);
  Tensor cols({c * kernel_ * kernel_, b * oh * ow});
  for (int64_t ci = 0; ci < c; ++ci) {
    for (int ki = 0; ki < kernel_; ++ki) {
      for (int kj = 0; kj < kernel_; ++kj) {
        const int64_t row = (ci * kernel_ + ki) * kernel_ + kj;
        double* dst = cols.data() + row * (b * oh * ow);
        for (int64_t bi = 0; bi < b; ++bi) {
          const double* plane = x.data() + (bi * c + ci) * h * w;
          for (int64_t i = 0; i < oh; ++i) {
            const int64_t src_i = i * stride_ - pad_ + ki;
            double* out = dst + (bi * oh + i) * ow;
            if (src_i < 0 || src_i >= h) {
              for (int64_t j = 0; j < ow; ++j) out[j] = 0.0;
              continue;
            }
            const double* src = plane + src_i * w;
            for (int64_t j = 0; j < ow; ++j) {
              const int64_t src_j = j * stride_ - pad_ + kj;
              out[j] = (src_j >= 0 && src_j < w) ? src[src_j] : 0.0;
            }
          }
        }
      }
    }
  }
  return cols;
}

Tensor Conv2d::Forward(const Tensor& x, Cache* cache) const {
  SSA_CHECK(x.ndim() == 4 && x.dim(1) == in_channels_)
      << "conv input " << x.ShapeString() << ", expected channels "
      << in_channels_;
  const int64_t b = x.dim(0), h = x.dim(2), w = x.dim(3);
  const int64_t oh = OutSize(h), ow = OutSize(w);
  const int64_t co = weight_.dim(0);
  const int64_t patch = weight_.dim(1);

  Tensor cols = Im2Col(x);
  Tensor result({co, b * oh * ow});
  result.AsMatrix(co, b * oh * ow).noalias() =
      weight_.AsMatrix(co, patch) * cols.AsMatrix(patch, b * oh * ow);

  // scatter (C_out, B*OH*OW) -> (B, C_out, OH, OW)
  Tensor y({b, co, oh, ow});
  const int64_t hw = oh * ow;
  for (int64_t bi = 0; bi < b; ++bi) {
    for (int64_t c = 0; c < co; ++c) {
      const double bias = bias_[c];
      const double* src = result.data() + c * (b * hw) + bi * hw;
      double* dst = y.data() + (bi * co + c) * hw;
      for (int64_t p = 0; p < hw; ++p) dst[p] = src[p] + bias;
    }
  }
  if (cache) {
    cache->cols = std::move(cols);
    cache->in_shape = x.shape();
  }
  return y;
}

Tensor Conv2d::Backward(const Tensor& grad_out, const Cache& cache) {
  const int64_t b = cache.in_shape[0], c = cache.in_shape[1];
  const int64_t h = cache.in_shape[2], w = cache.in_shape[3];
  const int64_t oh = OutSize(h), ow = OutSize(w);
  const int64_t co = weight_.dim(0);
  const int64_t patch = weight_.dim(1);
  const int64_t hw = oh * ow;

  // gather dY into (C_out, B*OH*OW) to match the forward GEMM layout
  Tensor dy_mat({co, b * oh * ow});
  for (int64_t bi = 0; bi < b; ++bi) {
    for (int64_t ci = 0; ci < co; ++ci) {
      const double* src = grad_out.data() + (bi * co + ci) * hw;
      double* dst = dy_mat.data() + ci * (b * hw) + bi * hw;
      for (int64_t p = 0; p < hw; ++p) dst[p] = src[p];
    }
  }

  const Tensor& cols = cache.cols;
  grad_weight_.AsMatrix(co, patch).noalias() +=
      dy_mat.AsMatrix(co, b * oh * ow) *
      cols.AsMatrix(patch, b * oh * ow).transpose();
  auto db = grad_bias_.AsVector();
  db.noalias() += dy_mat.AsMatrix(co, b * oh * ow).rowwise().sum();

  Tensor dcols({patch, b * oh * ow});
  dcols.AsMatrix(patch, b * oh * ow).noalias() =
      weight_.AsMatrix(co, patch).transpose() *
      dy_mat.AsMatrix(co, b * oh * ow);

  // col2im accumulate
  Tensor dx({b, c, h, w});
  for (int64_t ci = 0; ci < c; ++ci) {
    for (int ki = 0; ki < kernel_; ++ki) {
      for (int kj = 0; kj < kernel_; ++kj) {
        const int64_t row = (ci * kernel_ + ki) * kernel_ + kj;
        const double* src = dcols.data() + row * (b * oh * ow);
        for (int64_t bi = 0; bi < b; ++bi) {
          double* plane = dx.data() + (bi * c + ci) * h * w;
          for (int64_t i = 0; i < oh; ++i) {
            const int64_t dst_i = i * stride_ - pad_ + ki;
            if (dst_i < 0 || dst_i >= h) continue;
            const double* in = src + (bi * oh + i) * ow;
            double* out = plane + dst_i * w;
            for (int64_t j = 0; j < ow; ++j) {
              const int64_t dst_j = j * stride_ - pad_ + kj;
              if (dst_j >= 0 && dst_j < w) out[dst_j] += in[j];
            }
          }
        }
      }
    }
  }
  return dx;
}

std::vector<ParamRef> Conv2d::Params(const std::string& prefix) {
  return {{prefix + ".weight", &weight_, &grad_weight_},
          {prefix + ".bias", &bias_, &grad_bias_}};
}

// ------------------------------------------------------------- LayerNorm

LayerNorm::LayerNorm(int64_t dim)
    : gain_(Tensor::Full({dim}, 1.0)),
      bias_({dim}),
      grad_gain_({dim}),
      grad_bias_({dim}) {}

Tensor LayerNorm::Forward(const Tensor& x, Cache* cache) const {
  const int64_t dim = gain_.dim(0);
  const int64_t rows = x.size() / dim;
  SSA_CHECK(rows * dim == x.size()) << "layernorm input " << x.ShapeString();

  Tensor y(x.shape());
  Tensor xhat({rows, dim});
  Tensor inv_std({rows});
  for (int64_t r = 0; r < rows; ++r) {
    const double* xr = x.data() + r * dim;
    double mean = 0.0;
    for (int64_t i = 0; i < dim; ++i) mean += xr[i];
    mean /= static_cast<double>(dim);
    double var = 0.0;
    for (int64_t i = 0; i < dim; ++i) var += (xr[i] - mean) * (xr[i] - mean);
    var /= static_cast<double>(dim);
    const double is = 1.0 / std::sqrt(var + kEpsilon);
    inv_std[r] = is;
    double* yr = y.data() + r * dim;
    double* hr = xhat.data() + r * dim;
    for (int64_t i = 0; i < dim; ++i) {
      hr[i] = (xr[i] - mean) * is;
      yr[i] = gain_[i] * hr[i] + bias_[i];
    }
  }
  if (cache) {
    cache->xhat = std::move(xhat);
    cache->inv_std = std::move(inv_std);
  }
  return y;
}

Tensor LayerNorm::Backward(const Tensor& grad_out, const Cache& cache) {
  const int64_t dim = gain_.dim(0);
  const int64_t rows = grad_out.size() / dim;

  Tensor dx(grad_out.shape());
  for (int64_t r = 0; r < rows; ++r) {
    const double* dy = grad_out.data() + r * dim;
    const double* hr = cache.xhat.data() + r * dim;
    double* dxr = dx.data() + r * dim;
    double sum_g = 0.0, sum_gh = 0.0;
    for (int64_t i = 0; i < dim; ++i) {
      const double g = dy[i] * gain_[i];
      sum_g += g;
      sum_gh += g * hr[i];
      grad_gain_[i] += dy[i] * hr[i];
      grad_bias_[i] += dy[i];
    }
    const double mean_g = sum_g / static_cast<double>(dim);
    const double mean_gh = sum_gh / static_cast<double>(dim);
    const double is = cache.inv_std[r];
    for (int64_t i = 0; i < dim; ++i) {
      const double g = dy[i] * gain_[i];
      dxr[i] = is * (g - mean_g - hr[i] * mean_gh);
    }
  }
  return dx;
}

std::vector<ParamRef> LayerNorm::Params(const std::string& prefix) {
  return {{prefix + ".gain", &gain_, &grad_gain_},
          {prefix + ".bias", &bias_, &grad_bias_}};
}

// ------------------------------------------------------------ Activations

Tensor ReluForward(const Tensor& x, Tensor* cache) {
  Tensor y(x.shape());
  for (int64_t i = 0; i < x.size(); ++i) y[i] = x[i] > 0 ? x[i] : 0.0;
  if (cache) *cache = x;
  return y;
}

Tensor ReluBackward(const Tensor& grad_out, const Tensor& cache) {
  Tensor dx(grad_out.shape());
  for (int64_t i = 0; i < grad_out.size(); ++i) {
    dx[i] = cache[i] > 0 ? grad_out[i] : 0.0;
  }
  return dx;
}

Tensor TanhForward(const Tensor& x, Tensor* cache) {
  Tensor y(x.shape());
  for (int64_t i = 0; i < x.size(); ++i) y[i] = std::tanh(x[i]);
  if (cache) *cache = y;
  return y;
}

Tensor TanhBackward(const Tensor& grad_out, const Tensor& cache) {
  Tensor dx(grad_out.shape());
  for (int64_t i = 0; i < grad_out.size(); ++i) {
    dx[i] = grad_out[i] * (1.0 - cache[i] * cache[i]);
  }
  return dx;
}

}  // namespace ssaudio
