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

#include "testing/oracles.h"

#include <cmath>

namespace ssaudio::oracles {

double BilinearTripleLoop(const Tensor& u, const Tensor& v, const Tensor& w) {
  const int64_t d = u.size();
  double acc = 0.0;
  for (int64_t i = 0; i < d; ++i) {
    for (int64_t j = 0; j < d; ++j) {
      acc += u[i] * w.at(i, j) * v[j];
    }
  }
  return acc;
}

double CosineNaive(const Tensor& u, const Tensor& v, double temperature) {
  double uu = 0, vv = 0, uv = 0;
  for (int64_t i = 0; i < u.size(); ++i) {
    uu += u[i] * u[i];
    vv += v[i] * v[i];
    uv += u[i] * v[i];
  }
  return uv / (std::sqrt(uu) * std::sqrt(vv)) / temperature;
}

namespace {

Tensor Row(const Tensor& z, int64_t i) {
  const int64_t d = z.dim(1);
  Tensor out({d});
  for (int64_t k = 0; k < d; ++k) out[k] = z.at(i, k);
  return out;
}

Tensor FrameColumn(const Tensor& z, int64_t t) {
  const int64_t d = z.dim(0);
  Tensor out({d});
  for (int64_t k = 0; k < d; ++k) out[k] = z.at(k, t);
  return out;
}

}  // namespace

double RowSimilarity(const Tensor& za, int64_t i, const Tensor& zp, int64_t j,
                     const SimilarityMode& sim, const Tensor& w) {
  const Tensor u = Row(za, i);
  const Tensor v = Row(zp, j);
  if (sim.kind == SimilarityMode::Kind::kBilinear) {
    return BilinearTripleLoop(u, v, w);
  }
  return CosineNaive(u, v, sim.cosine_temperature);
}

double ClipLossNaive(const Tensor& z_anchor, const Tensor& z_positive,
                     const SimilarityMode& sim, const Tensor& w) {
  const int64_t b = z_anchor.dim(0);
  double total = 0.0;
  for (int64_t i = 0; i < b; ++i) {
    double denom = 0.0;
    for (int64_t j = 0; j < b; ++j) {
      denom += std::exp(RowSimilarity(z_anchor, i, z_positive, j, sim, w));
    }
    const double pos =
        std::exp(RowSimilarity(z_anchor, i, z_positive, i, sim, w));
    total += -std::log(pos / denom);
  }
  return total / static_cast<double>(b);
}

double FrameLossSingleNaive(const Tensor& z, int64_t m,
                            const SimilarityMode& sim, const Tensor& w) {
  const int64_t t_total = z.dim(1);
  auto frame_sim = [&](int64_t ti, int64_t tj) {
    const Tensor u = FrameColumn(z, ti);
    const Tensor v = FrameColumn(z, tj);
    return sim.kind == SimilarityMode::Kind::kBilinear
               ? BilinearTripleLoop(u, v, w)
               : CosineNaive(u, v, sim.cosine_temperature);
  };

  double total = 0.0;
  for (int64_t t = 0; t < t_total; ++t) {
    double numer = 0.0;
    int64_t count = 0;
    for (int64_t tau = t - m; tau <= t + m; ++tau) {
      if (tau < 0 || tau >= t_total) continue;
      numer += std::exp(frame_sim(t, tau));
      ++count;
    }
    double denom = 0.0;
    for (int64_t i = 0; i < t_total; ++i) denom += std::exp(frame_sim(t, i));
    total += -std::log(numer / denom) / static_cast<double>(count);
  }
  return total / static_cast<double>(t_total);
}

double FrameLossViewNaive(const Tensor& z, int64_t m, const SimilarityMode& sim,
                          const Tensor& w) {
  const int64_t b = z.dim(0), d = z.dim(1), t = z.dim(2);
  double total = 0.0;
  for (int64_t bi = 0; bi < b; ++bi) {
    Tensor sample({d, t});
    for (int64_t k = 0; k < d; ++k) {
      for (int64_t ti = 0; ti < t; ++ti) sample.at(k, ti) = z.at(bi, k, ti);
    }
    total += FrameLossSingleNaive(sample, m, sim, w);
  }
  return total / static_cast<double>(b);
}

double FrameLossNaive(const Tensor& za, const Tensor& zp, const Tensor& zs,
                      int64_t m, const SimilarityMode& sim, const Tensor& w) {
  return (FrameLossViewNaive(za, m, sim, w) + FrameLossViewNaive(zp, m, sim, w) +
          FrameLossViewNaive(zs, m, sim, w)) /
         3.0;
}

double PitchLossNaive(const Tensor& z_shifted, const Tensor& z_anchor,
                      const std::vector<double>& a) {
  const int64_t b = z_shifted.dim(0), t = z_shifted.dim(1);
  double total = 0.0;
  for (int64_t i = 0; i < b; ++i) {
    double norm2 = 0.0;
    for (int64_t ti = 0; ti < t; ++ti) {
      const double diff = z_shifted.at(i, ti) - z_anchor.at(i, ti) -
                          a[static_cast<size_t>(i)];
      norm2 += diff * diff;
    }
    total += norm2;
  }
  return total / static_cast<double>(b);
}

namespace {

double GridPower(const std::vector<double>& samples, int sample_rate,
                 double freq) {
  // direct correlation with a Hann-windowed complex exponential
  const auto n = static_cast<int64_t>(samples.size());
  double re = 0.0, im = 0.0;
  for (int64_t i = 0; i < n; ++i) {
    const double window =
        0.5 - 0.5 * std::cos(2.0 * M_PI * i / static_cast<double>(n - 1));
    const double phase = 2.0 * M_PI * freq * i / sample_rate;
    re += samples[static_cast<size_t>(i)] * window * std::cos(phase);
    im -= samples[static_cast<size_t>(i)] * window * std::sin(phase);
  }
  return re * re + im * im;
}

}  // namespace

double DominantFrequencyHz(const std::vector<double>& samples, int sample_rate,
                           double f_lo, double f_hi, double step_hz) {
  // Cap the correlation length; 4096 samples give < 4 Hz leakage width.
  std::vector<double> snippet(
      samples.begin(),
      samples.begin() + std::min<size_t>(samples.size(), 8192));
  double best_f = f_lo, best_p = -1.0;
  for (double f = f_lo; f <= f_hi; f += step_hz) {
    const double p = GridPower(snippet, sample_rate, f);
    if (p > best_p) {
      best_p = p;
      best_f = f;
    }
  }
  // refine around the best grid point
  for (double f = best_f - step_hz; f <= best_f + step_hz; f += step_hz / 10) {
    const double p = GridPower(snippet, sample_rate, f);
    if (p > best_p) {
      best_p = p;
      best_f = f;
    }
  }
  return best_f;
}

double SpectralCentroidHz(const std::vector<double>& samples, int sample_rate,
                          double f_lo, double f_hi, double step_hz) {
  std::vector<double> snippet(
      samples.begin(),
      samples.begin() + std::min<size_t>(samples.size(), 8192));
  double num = 0.0, den = 0.0;
  for (double f = f_lo; f <= f_hi; f += step_hz) {
    const double p = GridPower(snippet, sample_rate, f);
    num += f * p;
    den += p;
  }
  return den > 0 ? num / den : 0.0;
}

double HzToMelRef(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

}  // namespace ssaudio::oracles
