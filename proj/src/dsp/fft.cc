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

#include "dsp/fft.h"

#include <fftw3.h>

#include <cstring>

#include "core/common.h"

namespace ssaudio {

struct RealFft::Plans {
  double* real = nullptr;
  fftw_complex* spec = nullptr;
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
};

RealFft::RealFft(int size) : size_(size), plans_(new Plans) {
  SSA_CHECK(size > 1 && (size & (size - 1)) == 0)
      << "fft size must be a power of two, got " << size;
  plans_->real = fftw_alloc_real(static_cast<size_t>(size_));
  plans_->spec = fftw_alloc_complex(static_cast<size_t>(num_bins()));
  plans_->forward = fftw_plan_dft_r2c_1d(size_, plans_->real, plans_->spec,
                                         FFTW_ESTIMATE);
  plans_->inverse = fftw_plan_dft_c2r_1d(size_, plans_->spec, plans_->real,
                                         FFTW_ESTIMATE);
  SSA_CHECK(plans_->forward != nullptr && plans_->inverse != nullptr)
      << "fftw plan creation failed";
}

RealFft::~RealFft() {
  fftw_destroy_plan(plans_->forward);
  fftw_destroy_plan(plans_->inverse);
  fftw_free(plans_->real);
  fftw_free(plans_->spec);
  delete plans_;
}

void RealFft::Forward(const double* in, std::complex<double>* out) {
  std::memcpy(plans_->real, in, sizeof(double) * static_cast<size_t>(size_));
  fftw_execute(plans_->forward);
  for (int i = 0; i < num_bins(); ++i) {
    out[i] = {plans_->spec[i][0], plans_->spec[i][1]};
  }
}

void RealFft::Inverse(const std::complex<double>* in, double* out) {
  for (int i = 0; i < num_bins(); ++i) {
    plans_->spec[i][0] = in[i].real();
    plans_->spec[i][1] = in[i].imag();
  }
  fftw_execute(plans_->inverse);
  const double scale = 1.0 / size_;
  for (int i = 0; i < size_; ++i) out[i] = plans_->real[i] * scale;
}

}  // namespace ssaudio
