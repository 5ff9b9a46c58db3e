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

#include "model/heads.h"

#include "core/common.h"
#include "core/hash.h"
#include "model/encoder.h"

namespace ssaudio {

Tensor FramesToRows(const Tensor& h) {
  const int64_t b = h.dim(0), d = h.dim(1), t = h.dim(2);
  Tensor rows({b * t, d});
  for (int64_t bi = 0; bi < b; ++bi) {
    for (int64_t ti = 0; ti < t; ++ti) {
      for (int64_t k = 0; k < d; ++k) {
        rows.at(bi * t + ti, k) = h.at(bi, k, ti);
      }
    }
  }
  return rows;
}

Tensor RowsToFrames(const Tensor& rows, int64_t b, int64_t d, int64_t t) {
  Tensor h({b, d, t});
  for (int64_t bi = 0; bi < b; ++bi) {
    for (int64_t ti = 0; ti < t; ++ti) {
      for (int64_t k = 0; k < d; ++k) {
        h.at(bi, k, ti) = rows.at(bi * t + ti, k);
      }
    }
  }
  return h;
}

Heads::Heads(int64_t d, uint64_t seed)
    : d_(d),
      clip_hidden_(d, d),
      clip_out_(d, d),
      frame_hidden_(d, d),
      frame_out_(d, d),
      pitch_hidden_(d, d),
      pitch_out_(d, 1) {
  Linear* layers[] = {&clip_hidden_, &clip_out_,  &frame_hidden_,
                      &frame_out_,   &pitch_hidden_, &pitch_out_};
  for (size_t i = 0; i < 6; ++i) {
    Rng rng(DeriveSeed(seed, "heads", i));
    layers[i]->InitHe(&rng);
  }
}

HeadOutputsBatch Heads::Forward(const Tensor& h, Cache* cache) const {
  SSA_CHECK(h.ndim() == 3 && h.dim(1) == d_)
      << "heads expect (B, " << d_ << ", T'), got " << h.ShapeString();
  const int64_t b = h.dim(0), t = h.dim(2);
  if (cache) {
    cache->batch = b;
    cache->t_out = t;
  }

  HeadOutputsBatch out;

  Tensor pooled = TemporalMean(h);
  Tensor hc = clip_hidden_.Forward(pooled, cache ? &cache->clip_hidden : nullptr);
  hc = ReluForward(hc, cache ? &cache->clip_relu : nullptr);
  out.z_clip = clip_out_.Forward(hc, cache ? &cache->clip_out : nullptr);

  Tensor rows = FramesToRows(h);
  Tensor hf = frame_hidden_.Forward(rows, cache ? &cache->frame_hidden : nullptr);
  hf = ReluForward(hf, cache ? &cache->frame_relu : nullptr);
  Tensor zf = frame_out_.Forward(hf, cache ? &cache->frame_out : nullptr);
  out.z_frame = RowsToFrames(zf, b, d_, t);

  Tensor hp = pitch_hidden_.Forward(rows, cache ? &cache->pitch_hidden : nullptr);
  hp = ReluForward(hp, cache ? &cache->pitch_relu : nullptr);
  Tensor zp = pitch_out_.Forward(hp, cache ? &cache->pitch_out : nullptr);
  out.z_pitch = Tensor({b, t});
  for (int64_t bi = 0; bi < b; ++bi) {
    for (int64_t ti = 0; ti < t; ++ti) {
      out.z_pitch.at(bi, ti) = zp.at(bi * t + ti, 0);
    }
  }
  return out;
}

Tensor Heads::Backward(const Tensor& d_z_clip, const Tensor& d_z_frame,
                       const Tensor& d_z_pitch, const Cache& cache) {
  const int64_t b = cache.batch, t = cache.t_out;
  Tensor dh({b, d_, t});

  if (!d_z_clip.empty()) {
    Tensor g = clip_out_.Backward(d_z_clip, cache.clip_out);
    g = ReluBackward(g, cache.clip_relu);
    g = clip_hidden_.Backward(g, cache.clip_hidden);
    // pooled mean distributes evenly over frames
    const double inv_t = 1.0 / static_cast<double>(t);
    for (int64_t bi = 0; bi < b; ++bi) {
      for (int64_t k = 0; k < d_; ++k) {
        const double v = g.at(bi, k) * inv_t;
        for (int64_t ti = 0; ti < t; ++ti) dh.at(bi, k, ti) += v;
      }
    }
  }

  if (!d_z_frame.empty()) {
    Tensor g = FramesToRows(d_z_frame);
    g = frame_out_.Backward(g, cache.frame_out);
    g = ReluBackward(g, cache.frame_relu);
    g = frame_hidden_.Backward(g, cache.frame_hidden);
    for (int64_t bi = 0; bi < b; ++bi) {
      for (int64_t ti = 0; ti < t; ++ti) {
        for (int64_t k = 0; k < d_; ++k) {
          dh.at(bi, k, ti) += g.at(bi * t + ti, k);
        }
      }
    }
  }

  if (!d_z_pitch.empty()) {
    Tensor g({b * t, 1});
    for (int64_t bi = 0; bi < b; ++bi) {
      for (int64_t ti = 0; ti < t; ++ti) {
        g.at(bi * t + ti, 0) = d_z_pitch.at(bi, ti);
      }
    }
    g = pitch_out_.Backward(g, cache.pitch_out);
    g = ReluBackward(g, cache.pitch_relu);
    g = pitch_hidden_.Backward(g, cache.pitch_hidden);
    for (int64_t bi = 0; bi < b; ++bi) {
      for (int64_t ti = 0; ti < t; ++ti) {
        for (int64_t k = 0; k < d_; ++k) {
          dh.at(bi, k, ti) += g.at(bi * t + ti, k);
        }
      }
    }
  }
  return dh;
}

std::vector<ParamRef> Heads::Params(const std::string& prefix) {
  std::vector<ParamRef> params;
  auto append = [&](std::vector<ParamRef> p) {
    params.insert(params.end(), p.begin(), p.end());
  };
  append(clip_hidden_.Params(prefix + ".clip_hidden"));
  append(clip_out_.Params(prefix + ".clip_out"));
  append(frame_hidden_.Params(prefix + ".frame_hidden"));
  append(frame_out_.Params(prefix + ".frame_out"));
  append(pitch_hidden_.Params(prefix + ".pitch_hidden"));
  append(pitch_out_.Params(prefix + ".pitch_out"));
  return params;
}

}  // namespace ssaudio
