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

#ifndef SSAUDIO_DSP_FFT_H_
#define SSAUDIO_DSP_FFT_H_

#include <complex>
#include <vector>

namespace ssaudio {

// Real-input FFT of fixed size backed by FFTW (FFTW_ESTIMATE plans, so
// results are reproducible run to run). Not thread-safe; create one
// instance per thread.
class RealFft {
 public:
  explicit RealFft(int size);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  int size() const { return size_; }
  int num_bins() const { return size_ / 2 + 1; }

  // in: size() reals; out: size()/2+1 complex bins.
  void Forward(const double* in, std::complex<double>* out);
  // in: size()/2+1 complex bins; out: size() reals, scaled by 1/size().
  void Inverse(const std::complex<double>* in, double* out);

 private:
  struct Plans;
  int size_;
  Plans* plans_;
};

}  // namespace ssaudio

#endif  // SSAUDIO_DSP_FFT_H_
