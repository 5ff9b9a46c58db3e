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

#include "core/tensor.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ssaudio {

Tensor::Tensor(std::vector<int64_t> shape) : shape_(std::move(shape)) {
  int64_t total = 1;
  for (int64_t d : shape_) {
    SSA_CHECK(d >= 0) << "negative tensor dimension";
    total *= d;
  }
  data_.assign(static_cast<size_t>(total), 0.0);
}

Tensor Tensor::Full(std::vector<int64_t> shape, double value) {
  Tensor t(std::move(shape));
  t.Fill(value);
  return t;
}

int64_t Tensor::dim(int i) const {
  SSA_CHECK(i >= 0 && i < static_cast<int>(shape_.size()))
      << "dim " << i << " out of range for " << ShapeString();
  return shape_[static_cast<size_t>(i)];
}

double& Tensor::at(int64_t i, int64_t j) {
  return data_[static_cast<size_t>(i * shape_[1] + j)];
}
double Tensor::at(int64_t i, int64_t j) const {
  return data_[static_cast<size_t>(i * shape_[1] + j)];
}
double& Tensor::at(int64_t i, int64_t j, int64_t k) {
  return data_[static_cast<size_t>((i * shape_[1] + j) * shape_[2] + k)];
}
double Tensor::at(int64_t i, int64_t j, int64_t k) const {
  return data_[static_cast<size_t>((i * shape_[1] + j) * shape_[2] + k)];
}
double& Tensor::at(int64_t i, int64_t j, int64_t k, int64_t l) {
  return data_[static_cast<size_t>(
      ((i * shape_[1] + j) * shape_[2] + k) * shape_[3] + l)];
}
double Tensor::at(int64_t i, int64_t j, int64_t k, int64_t l) const {
  return data_[static_cast<size_t>(
      ((i * shape_[1] + j) * shape_[2] + k) * shape_[3] + l)];
}

void Tensor::Fill(double value) {
  std::fill(data_.begin(), data_.end(), value);
}

bool Tensor::AllFinite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

std::string Tensor::ShapeString() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < shape_.size(); ++i) {
    if (i) os << ",";
    os << shape_[i];
  }
  os << ")";
  return os.str();
}

MatrixMap Tensor::AsMatrix(int64_t rows, int64_t cols) {
  SSA_CHECK(rows * cols == size())
      << "matrix view " << rows << "x" << cols << " of " << ShapeString();
  return MatrixMap(data(), rows, cols);
}

ConstMatrixMap Tensor::AsMatrix(int64_t rows, int64_t cols) const {
  SSA_CHECK(rows * cols == size())
      << "matrix view " << rows << "x" << cols << " of " << ShapeString();
  return ConstMatrixMap(data(), rows, cols);
}

VectorMap Tensor::AsVector() { return VectorMap(data(), size()); }
ConstVectorMap Tensor::AsVector() const {
  return ConstVectorMap(data(), size());
}

void Tensor::Add(const Tensor& other) {
  SSA_CHECK(SameShape(other)) << "shape mismatch in Add: " << ShapeString()
                              << " vs " << other.ShapeString();
  for (int64_t i = 0; i < size(); ++i) data_[static_cast<size_t>(i)] += other[i];
}

void Tensor::AddScaled(const Tensor& other, double scale) {
  SSA_CHECK(SameShape(other)) << "shape mismatch in AddScaled";
  for (int64_t i = 0; i < size(); ++i) {
    data_[static_cast<size_t>(i)] += scale * other[i];
  }
}

void Tensor::Scale(double factor) {
  for (double& v : data_) v *= factor;
}

}  // namespace ssaudio
