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

#ifndef SSAUDIO_CORE_TENSOR_H_
#define SSAUDIO_CORE_TENSOR_H_

#include <Eigen/Core>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "core/common.h"

namespace ssaudio {

using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MatrixMap = Eigen::Map<RowMatrix>;
using ConstMatrixMap = Eigen::Map<const RowMatrix>;
using VectorMap = Eigen::Map<Eigen::VectorXd>;
using ConstVectorMap = Eigen::Map<const Eigen::VectorXd>;

// Dense row-major double tensor. All model parameters, activations and
// features use this type; Eigen maps provide matrix views for GEMM.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int64_t> shape);
  Tensor(std::initializer_list<int64_t> shape)
      : Tensor(std::vector<int64_t>(shape)) {}

  static Tensor Zeros(std::vector<int64_t> shape) { return Tensor(shape); }
  static Tensor Full(std::vector<int64_t> shape, double value);

  const std::vector<int64_t>& shape() const { return shape_; }
  int64_t ndim() const { return static_cast<int64_t>(shape_.size()); }
  int64_t dim(int i) const;
  int64_t size() const { return static_cast<int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

  double& at(int64_t i, int64_t j);
  double at(int64_t i, int64_t j) const;
  double& at(int64_t i, int64_t j, int64_t k);
  double at(int64_t i, int64_t j, int64_t k) const;
  double& at(int64_t i, int64_t j, int64_t k, int64_t l);
  double at(int64_t i, int64_t j, int64_t k, int64_t l) const;

  void Fill(double value);
  void SetZero() { Fill(0.0); }
  bool AllFinite() const;
  bool SameShape(const Tensor& other) const { return shape_ == other.shape_; }
  std::string ShapeString() const;

  // Flat views. The product of rows*cols must equal size().
  MatrixMap AsMatrix(int64_t rows, int64_t cols);
  ConstMatrixMap AsMatrix(int64_t rows, int64_t cols) const;
  VectorMap AsVector();
  ConstVectorMap AsVector() const;

  // In-place elementwise helpers.
  void Add(const Tensor& other);             // this += other
  void AddScaled(const Tensor& other, double scale);
  void Scale(double factor);

 private:
  std::vector<int64_t> shape_;
  std::vector<double> data_;
};

}  // namespace ssaudio

#endif  // SSAUDIO_CORE_TENSOR_H_
