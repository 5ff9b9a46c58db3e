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

#include "losses/losses.h"

#include <cmath>

#include <nlohmann/json.hpp>

#include "core/common.h"
#include "sampling/neighborhood.h"

namespace ssaudio {

void LossWeights::Validate() const {
  SSA_CHECK_CONFIG(alpha >= 0 && beta >= 0) << "loss weights";
}

nlohmann::json LossWeightsToJson(const LossWeights& w) {
  return nlohmann::json{{"alpha", w.alpha}, {"beta", w.beta}};
}

LossWeights LossWeightsFromJson(const nlohmann::json& j) {
  LossWeights w;
  w.alpha = j.value("alpha", 1.0);
  w.beta = j.value("beta", 1.0);
  w.Validate();
  return w;
}

double LogSumExp(const double* values, int64_t n) {
  SSA_CHECK(n > 0) << "empty logsumexp";
  double mx = values[0];
  for (int64_t i = 1; i < n; ++i) mx = std::max(mx, values[i]);
  double acc = 0.0;
  for (int64_t i = 0; i < n; ++i) acc += std::exp(values[i] - mx);
  return mx + std::log(acc);
}

namespace {

// Row-normalizes (B, d); throws NumericError on a zero row.
Tensor NormalizeRows(const Tensor& z, std::vector<double>* norms) {
  const int64_t b = z.dim(0), d = z.dim(1);
  Tensor out({b, d});
  norms->resize(static_cast<size_t>(b));
  for (int64_t i = 0; i < b; ++i) {
    double nn = 0.0;
    for (int64_t k = 0; k < d; ++k) nn += z.at(i, k) * z.at(i, k);
    if (nn <= 0.0) {
      SSA_THROW(NumericError) << "cosine similarity of a zero-norm vector "
                              << "(row " << i << ")";
    }
    const double norm = std::sqrt(nn);
    (*norms)[static_cast<size_t>(i)] = norm;
    for (int64_t k = 0; k < d; ++k) out.at(i, k) = z.at(i, k) / norm;
  }
  return out;
}

// d_unit -> d_z for row-normalized vectors: the gradient is projected onto
// the tangent space and scaled by 1/norm.
void NormalizeRowsBackward(const Tensor& unit, const std::vector<double>& norms,
                           const Tensor& d_unit, Tensor* d_z) {
  const int64_t b = unit.dim(0), d = unit.dim(1);
  for (int64_t i = 0; i < b; ++i) {
    double dot = 0.0;
    for (int64_t k = 0; k < d; ++k) dot += d_unit.at(i, k) * unit.at(i, k);
    const double inv = 1.0 / norms[static_cast<size_t>(i)];
    for (int64_t k = 0; k < d; ++k) {
      d_z->at(i, k) += (d_unit.at(i, k) - dot * unit.at(i, k)) * inv;
    }
  }
}

}  // namespace

double LossClipFromLogits(const Tensor& logits, Tensor* d_logits) {
  SSA_CHECK(logits.ndim() == 2 && logits.dim(0) == logits.dim(1))
      << "clip logits must be square, got " << logits.ShapeString();
  const int64_t b = logits.dim(0);
  SSA_CHECK_DATA(b >= 2) << "clip loss needs a batch of at least 2 "
                         << "(no negatives otherwise)";
  double value = 0.0;
  for (int64_t i = 0; i < b; ++i) {
    const double* row = logits.data() + i * b;
    const double lse = LogSumExp(row, b);
    value += lse - row[i];
    if (d_logits) {
      for (int64_t j = 0; j < b; ++j) {
        double p = std::exp(row[j] - lse);
        if (j == i) p -= 1.0;
        d_logits->at(i, j) = p / static_cast<double>(b);
      }
    }
  }
  return value / static_cast<double>(b);
}

ClipLossOut LossClip(const Tensor& z_anchor, const Tensor& z_positive,
                     const SimilarityMode& sim, const Tensor& w,
                     bool want_grads) {
  SSA_CHECK(z_anchor.ndim() == 2 && z_anchor.SameShape(z_positive))
      << "clip loss inputs " << z_anchor.ShapeString() << " vs "
      << z_positive.ShapeString();
  const int64_t b = z_anchor.dim(0), d = z_anchor.dim(1);
  SSA_CHECK_DATA(b >= 2) << "clip loss needs a batch of at least 2";

  ClipLossOut out;
  Tensor logits({b, b});
  Tensor unit_a, unit_p;
  std::vector<double> norms_a, norms_p;
  if (sim.kind == SimilarityMode::Kind::kBilinear) {
    SSA_CHECK(w.ndim() == 2 && w.dim(0) == d && w.dim(1) == d)
        << "bilinear W shape " << w.ShapeString();
    Tensor wz({b, d});  // z_positive * W^T rows: (W z_p)^T
    wz.AsMatrix(b, d).noalias() = z_positive.AsMatrix(b, d) * w.AsMatrix(d, d).transpose();
    logits.AsMatrix(b, b).noalias() =
        z_anchor.AsMatrix(b, d) * wz.AsMatrix(b, d).transpose();
  } else {
    unit_a = NormalizeRows(z_anchor, &norms_a);
    unit_p = NormalizeRows(z_positive, &norms_p);
    logits.AsMatrix(b, b).noalias() =
        unit_a.AsMatrix(b, d) * unit_p.AsMatrix(b, d).transpose() /
        sim.cosine_temperature;
  }

  Tensor d_logits;
  if (want_grads) d_logits = Tensor({b, b});
  out.value = LossClipFromLogits(logits, want_grads ? &d_logits : nullptr);
  if (!want_grads) return out;

  out.d_anchor = Tensor({b, d});
  out.d_positive = Tensor({b, d});
  out.d_w = Tensor({d, d});
  if (sim.kind == SimilarityMode::Kind::kBilinear) {
    // S = Za W Zp'; dZa = dS Zp W', dZp = dS' Za W, dW = Za' dS Zp
    out.d_anchor.AsMatrix(b, d).noalias() =
        d_logits.AsMatrix(b, b) * z_positive.AsMatrix(b, d) *
        w.AsMatrix(d, d).transpose();
    out.d_positive.AsMatrix(b, d).noalias() =
        d_logits.AsMatrix(b, b).transpose() * z_anchor.AsMatrix(b, d) *
        w.AsMatrix(d, d);
    out.d_w.AsMatrix(d, d).noalias() = z_anchor.AsMatrix(b, d).transpose() *
                                       d_logits.AsMatrix(b, b) *
                                       z_positive.AsMatrix(b, d);
  } else {
    Tensor d_unit_a({b, d}), d_unit_p({b, d});
    d_unit_a.AsMatrix(b, d).noalias() = d_logits.AsMatrix(b, b) *
                                        unit_p.AsMatrix(b, d) /
                                        sim.cosine_temperature;
    d_unit_p.AsMatrix(b, d).noalias() = d_logits.AsMatrix(b, b).transpose() *
                                        unit_a.AsMatrix(b, d) /
                                        sim.cosine_temperature;
    NormalizeRowsBackward(unit_a, norms_a, d_unit_a, &out.d_anchor);
    NormalizeRowsBackward(unit_p, norms_p, d_unit_p, &out.d_positive);
  }
  return out;
}

double LossFrameFromLogits(const Tensor& logits, int64_t m, Tensor* d_logits) {
  SSA_CHECK(logits.ndim() == 2 && logits.dim(0) == logits.dim(1))
      << "frame logits must be square";
  const int64_t t_total = logits.dim(0);
  ValidateNeighborhoodRadius(m, t_total);

  double value = 0.0;
  std::vector<double> positives;
  for (int64_t t = 0; t < t_total; ++t) {
    const double* row = logits.data() + t * t_total;
    const auto window = Neighborhood(t, t_total, m);
    const auto m_t = static_cast<double>(window.size());

    positives.clear();
    for (int64_t idx : window) positives.push_back(row[idx]);
    const double lse_all = LogSumExp(row, t_total);
    const double lse_pos =
        LogSumExp(positives.data(), static_cast<int64_t>(positives.size()));
    value += (lse_all - lse_pos) / m_t;

    if (d_logits) {
      const double scale = 1.0 / (m_t * static_cast<double>(t_total));
      for (int64_t j = 0; j < t_total; ++j) {
        d_logits->at(t, j) += std::exp(row[j] - lse_all) * scale;
      }
      for (int64_t idx : window) {
        d_logits->at(t, idx) -= std::exp(row[idx] - lse_pos) * scale;
      }
    }
  }
  return value / static_cast<double>(t_total);
}

double LossFrameSingle(const Tensor& z, int64_t m, const SimilarityMode& sim,
                       const Tensor& w, Tensor* d_z, Tensor* d_w) {
  SSA_CHECK(z.ndim() == 2) << "frame loss input must be (d, T')";
  const int64_t d = z.dim(0), t_total = z.dim(1);
  ValidateNeighborhoodRadius(m, t_total);

  // columns are frames; build the T'xT' similarity matrix
  Tensor logits({t_total, t_total});
  Tensor unit;                 // (d, T') column-normalized, cosine mode
  std::vector<double> norms;
  if (sim.kind == SimilarityMode::Kind::kBilinear) {
    SSA_CHECK(w.ndim() == 2 && w.dim(0) == d && w.dim(1) == d)
        << "bilinear W shape " << w.ShapeString();
    Tensor wz({d, t_total});
    wz.AsMatrix(d, t_total).noalias() =
        w.AsMatrix(d, d) * z.AsMatrix(d, t_total);
    logits.AsMatrix(t_total, t_total).noalias() =
        z.AsMatrix(d, t_total).transpose() * wz.AsMatrix(d, t_total);
  } else {
    norms.resize(static_cast<size_t>(t_total));
    unit = Tensor({d, t_total});
    for (int64_t t = 0; t < t_total; ++t) {
      double nn = 0.0;
      for (int64_t k = 0; k < d; ++k) nn += z.at(k, t) * z.at(k, t);
      if (nn <= 0.0) {
        SSA_THROW(NumericError)
            << "cosine similarity of a zero-norm frame (t = " << t << ")";
      }
      norms[static_cast<size_t>(t)] = std::sqrt(nn);
      for (int64_t k = 0; k < d; ++k) {
        unit.at(k, t) = z.at(k, t) / norms[static_cast<size_t>(t)];
      }
    }
    logits.AsMatrix(t_total, t_total).noalias() =
        unit.AsMatrix(d, t_total).transpose() * unit.AsMatrix(d, t_total) /
        sim.cosine_temperature;
  }

  const bool want = d_z != nullptr;
  Tensor d_logits;
  if (want) d_logits = Tensor({t_total, t_total});
  const double value = LossFrameFromLogits(logits, m, want ? &d_logits : nullptr);
  if (!want) return value;

  SSA_CHECK(d_z->SameShape(z)) << "d_z shape";
  if (sim.kind == SimilarityMode::Kind::kBilinear) {
    // S = Z' W Z; dZ = W Z dS' + W' Z dS; dW = Z dS Z'
    auto zm = z.AsMatrix(d, t_total);
    auto dsm = d_logits.AsMatrix(t_total, t_total);
    d_z->AsMatrix(d, t_total).noalias() +=
        w.AsMatrix(d, d) * zm * dsm.transpose() +
        w.AsMatrix(d, d).transpose() * zm * dsm;
    if (d_w) {
      d_w->AsMatrix(d, d).noalias() += zm * dsm * zm.transpose();
    }
  } else {
    auto um = unit.AsMatrix(d, t_total);
    auto dsm = d_logits.AsMatrix(t_total, t_total);
    Tensor d_unit({d, t_total});
    d_unit.AsMatrix(d, t_total).noalias() =
        um * (dsm + dsm.transpose()) / sim.cosine_temperature;
    for (int64_t t = 0; t < t_total; ++t) {
      double dot = 0.0;
      for (int64_t k = 0; k < d; ++k) dot += d_unit.at(k, t) * unit.at(k, t);
      const double inv = 1.0 / norms[static_cast<size_t>(t)];
      for (int64_t k = 0; k < d; ++k) {
        d_z->at(k, t) += (d_unit.at(k, t) - dot * unit.at(k, t)) * inv;
      }
    }
  }
  return value;
}

namespace {

// Batched bilinear frame loss. Per sample the algebra is
//   S = Z'WZ, dZ = WZ dS' + W'Z dS, dW = Z dS Z',
// but the d x d products are stacked over the batch into single GEMMs:
// with Zs = [Z_1 .. Z_B] (d, B*T'), U_b = Z_b dS_b', V_b = Z_b dS_b and
// P_b = dS_b Z_b', we have dZ = W Us + W' Vs and dW = Zs * [P_1; ..; P_B].
FrameViewOut LossFrameViewBilinear(const Tensor& z, int64_t m, const Tensor& w,
                                   bool want_grads) {
  const int64_t b = z.dim(0), d = z.dim(1), t = z.dim(2);
  const int64_t bt = b * t;

  Tensor z_stack({d, bt});
  for (int64_t bi = 0; bi < b; ++bi) {
    for (int64_t k = 0; k < d; ++k) {
      for (int64_t ti = 0; ti < t; ++ti) {
        z_stack.at(k, bi * t + ti) = z.at(bi, k, ti);
      }
    }
  }
  Tensor wz({d, bt});
  wz.AsMatrix(d, bt).noalias() = w.AsMatrix(d, d) * z_stack.AsMatrix(d, bt);

  FrameViewOut out;
  Tensor logits({t, t});
  Tensor d_logits({t, t});
  Tensor u_stack, v_stack, p_stack;
  if (want_grads) {
    u_stack = Tensor({d, bt});
    v_stack = Tensor({d, bt});
    p_stack = Tensor({bt, d});
  }

  for (int64_t bi = 0; bi < b; ++bi) {
    for (int64_t ti = 0; ti < t; ++ti) {
      for (int64_t tj = 0; tj < t; ++tj) {
        double acc = 0.0;
        for (int64_t k = 0; k < d; ++k) {
          acc += z.at(bi, k, ti) * wz.at(k, bi * t + tj);
        }
        logits.at(ti, tj) = acc;
      }
    }
    if (!want_grads) {
      out.value += LossFrameFromLogits(logits, m, nullptr);
      continue;
    }
    d_logits.SetZero();
    out.value += LossFrameFromLogits(logits, m, &d_logits);
    for (int64_t k = 0; k < d; ++k) {
      for (int64_t ti = 0; ti < t; ++ti) {
        double u = 0.0, v = 0.0;
        for (int64_t tj = 0; tj < t; ++tj) {
          u += z.at(bi, k, tj) * d_logits.at(ti, tj);  // (Z dS')_{k,ti}
          v += z.at(bi, k, tj) * d_logits.at(tj, ti);  // (Z dS)_{k,ti}
        }
        u_stack.at(k, bi * t + ti) = u;
        v_stack.at(k, bi * t + ti) = v;
      }
    }
    for (int64_t ti = 0; ti < t; ++ti) {
      for (int64_t k = 0; k < d; ++k) {
        double p = 0.0;
        for (int64_t tj = 0; tj < t; ++tj) {
          p += d_logits.at(ti, tj) * z.at(bi, k, tj);  // (dS Z')_{ti,k}
        }
        p_stack.at(bi * t + ti, k) = p;
      }
    }
  }

  const double inv_b = 1.0 / static_cast<double>(b);
  out.value *= inv_b;
  if (want_grads) {
    Tensor dz_stack({d, bt});
    dz_stack.AsMatrix(d, bt).noalias() =
        w.AsMatrix(d, d) * u_stack.AsMatrix(d, bt) +
        w.AsMatrix(d, d).transpose() * v_stack.AsMatrix(d, bt);
    out.d_z = Tensor({b, d, t});
    for (int64_t bi = 0; bi < b; ++bi) {
      for (int64_t k = 0; k < d; ++k) {
        for (int64_t ti = 0; ti < t; ++ti) {
          out.d_z.at(bi, k, ti) = dz_stack.at(k, bi * t + ti) * inv_b;
        }
      }
    }
    out.d_w = Tensor({d, d});
    out.d_w.AsMatrix(d, d).noalias() =
        z_stack.AsMatrix(d, bt) * p_stack.AsMatrix(bt, d) * inv_b;
  }
  return out;
}

}  // namespace

FrameViewOut LossFrameView(const Tensor& z, int64_t m,
                           const SimilarityMode& sim, const Tensor& w,
                           bool want_grads) {
  SSA_CHECK(z.ndim() == 3) << "frame view must be (B, d, T')";
  const int64_t b = z.dim(0), d = z.dim(1), t_total = z.dim(2);
  ValidateNeighborhoodRadius(m, t_total);

  if (sim.kind == SimilarityMode::Kind::kBilinear) {
    SSA_CHECK(w.ndim() == 2 && w.dim(0) == d && w.dim(1) == d)
        << "bilinear W shape " << w.ShapeString();
    return LossFrameViewBilinear(z, m, w, want_grads);
  }

  FrameViewOut out;
  if (want_grads) {
    out.d_z = Tensor({b, d, t_total});
    out.d_w = Tensor({d, d});
  }
  Tensor sample({d, t_total});
  Tensor d_sample({d, t_total});
  for (int64_t bi = 0; bi < b; ++bi) {
    for (int64_t k = 0; k < d; ++k) {
      for (int64_t t = 0; t < t_total; ++t) sample.at(k, t) = z.at(bi, k, t);
    }
    if (want_grads) {
      d_sample.SetZero();
      out.value += LossFrameSingle(sample, m, sim, w, &d_sample, &out.d_w);
      for (int64_t k = 0; k < d; ++k) {
        for (int64_t t = 0; t < t_total; ++t) {
          out.d_z.at(bi, k, t) = d_sample.at(k, t);
        }
      }
    } else {
      out.value += LossFrameSingle(sample, m, sim, w);
    }
  }
  out.value /= static_cast<double>(b);
  if (want_grads) {
    out.d_z.Scale(1.0 / static_cast<double>(b));
    out.d_w.Scale(1.0 / static_cast<double>(b));
  }
  return out;
}

FrameLossOut LossFrame(const Tensor& z_anchor, const Tensor& z_positive,
                       const Tensor& z_shifted, int64_t m,
                       const SimilarityMode& sim, const Tensor& w,
                       bool want_grads) {
  SSA_CHECK(z_anchor.SameShape(z_positive) && z_anchor.SameShape(z_shifted))
      << "frame loss views must agree: " << z_anchor.ShapeString() << ", "
      << z_positive.ShapeString() << ", " << z_shifted.ShapeString();

  FrameLossOut out;
  auto view_a = LossFrameView(z_anchor, m, sim, w, want_grads);
  auto view_p = LossFrameView(z_positive, m, sim, w, want_grads);
  auto view_s = LossFrameView(z_shifted, m, sim, w, want_grads);
  out.value = (view_a.value + view_p.value + view_s.value) / 3.0;
  if (want_grads) {
    const double third = 1.0 / 3.0;
    view_a.d_z.Scale(third);
    view_p.d_z.Scale(third);
    view_s.d_z.Scale(third);
    out.d_anchor = std::move(view_a.d_z);
    out.d_positive = std::move(view_p.d_z);
    out.d_shifted = std::move(view_s.d_z);
    out.d_w = std::move(view_a.d_w);
    out.d_w.AddScaled(view_p.d_w, 1.0);
    out.d_w.AddScaled(view_s.d_w, 1.0);
    out.d_w.Scale(third);
  }
  return out;
}

PitchLossOut LossPitch(const Tensor& z_pitch_shifted,
                       const Tensor& z_pitch_anchor,
                       const std::vector<double>& shift_params,
                       bool want_grads) {
  SSA_CHECK(z_pitch_shifted.ndim() == 2 &&
            z_pitch_shifted.SameShape(z_pitch_anchor))
      << "pitch loss inputs " << z_pitch_shifted.ShapeString() << " vs "
      << z_pitch_anchor.ShapeString();
  const int64_t b = z_pitch_shifted.dim(0), t_total = z_pitch_shifted.dim(1);
  SSA_CHECK(static_cast<int64_t>(shift_params.size()) == b)
      << "one shift parameter per batch element";

  PitchLossOut out;
  if (want_grads) {
    out.d_shifted = Tensor({b, t_total});
    out.d_anchor = Tensor({b, t_total});
    out.d_shift.assign(static_cast<size_t>(b), 0.0);
  }
  const double inv_b = 1.0 / static_cast<double>(b);
  for (int64_t i = 0; i < b; ++i) {
    const double a = shift_params[static_cast<size_t>(i)];
    for (int64_t t = 0; t < t_total; ++t) {
      const double diff = z_pitch_shifted.at(i, t) - z_pitch_anchor.at(i, t) - a;
      out.value += diff * diff * inv_b;
      if (want_grads) {
        const double g = 2.0 * diff * inv_b;
        out.d_shifted.at(i, t) = g;
        out.d_anchor.at(i, t) = -g;
        out.d_shift[static_cast<size_t>(i)] -= g;
      }
    }
  }
  return out;
}

TotalLossOut LossTotal(const TotalLossInputs& in, const LossWeights& weights,
                       const SimilarityMode& sim, const Tensor& w_clip,
                       const Tensor& w_frame, bool want_grads) {
  weights.Validate();
  sim.Validate();

  TotalLossOut out;
  auto clip = LossClip(in.z_clip_anchor, in.z_clip_positive, sim, w_clip,
                       want_grads);
  out.clip = clip.value;
  if (want_grads) {
    out.d_z_clip_anchor = std::move(clip.d_anchor);
    out.d_z_clip_positive = std::move(clip.d_positive);
    out.d_w_clip = std::move(clip.d_w);
    if (out.d_w_clip.empty()) out.d_w_clip = Tensor(w_clip.shape());
  }

  // Zero-weighted terms are evaluated for the log but skipped in backward,
  // so their gradient contribution is exactly absent.
  const bool frame_grads = want_grads && weights.alpha != 0.0;
  auto frame = LossFrame(in.z_frame_anchor, in.z_frame_positive,
                         in.z_frame_shifted, in.neighborhood_m, sim, w_frame,
                         frame_grads);
  out.frame = frame.value;
  if (want_grads) {
    if (frame_grads) {
      frame.d_anchor.Scale(weights.alpha);
      frame.d_positive.Scale(weights.alpha);
      frame.d_shifted.Scale(weights.alpha);
      frame.d_w.Scale(weights.alpha);
      out.d_z_frame_anchor = std::move(frame.d_anchor);
      out.d_z_frame_positive = std::move(frame.d_positive);
      out.d_z_frame_shifted = std::move(frame.d_shifted);
      out.d_w_frame = std::move(frame.d_w);
    } else {
      out.d_z_frame_anchor = Tensor(in.z_frame_anchor.shape());
      out.d_z_frame_positive = Tensor(in.z_frame_positive.shape());
      out.d_z_frame_shifted = Tensor(in.z_frame_shifted.shape());
      out.d_w_frame = Tensor(w_frame.shape());
    }
  }

  const bool pitch_grads = want_grads && weights.beta != 0.0;
  auto pitch = LossPitch(in.z_pitch_shifted, in.z_pitch_anchor,
                         in.shift_params, pitch_grads);
  out.pitch = pitch.value;
  if (want_grads) {
    if (pitch_grads) {
      pitch.d_shifted.Scale(weights.beta);
      pitch.d_anchor.Scale(weights.beta);
      for (auto& g : pitch.d_shift) g *= weights.beta;
      out.d_z_pitch_shifted = std::move(pitch.d_shifted);
      out.d_z_pitch_anchor = std::move(pitch.d_anchor);
      out.d_shift = std::move(pitch.d_shift);
    } else {
      out.d_z_pitch_shifted = Tensor(in.z_pitch_shifted.shape());
      out.d_z_pitch_anchor = Tensor(in.z_pitch_anchor.shape());
      out.d_shift.assign(in.shift_params.size(), 0.0);
    }
  }

  out.total = out.clip + weights.alpha * out.frame + weights.beta * out.pitch;
  return out;
}

}  // namespace ssaudio
