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

#include "model/encoder.h"

#include <nlohmann/json.hpp>

#include "core/common.h"
#include "core/hash.h"

namespace ssaudio {
namespace {

struct ConvSpec {
  int64_t out_channels;
  int kernel;
  int stride;
  int pad;
};

std::vector<ConvSpec> ArchitecturePlan(const std::string& architecture) {
  if (architecture == "reference_cnn") {
    return {{8, 3, 2, 1},  {16, 3, 2, 1}, {32, 3, 2, 1},
            {64, 3, 2, 1}, {128, 3, 2, 1}};
  }
  if (architecture == "b0_like") {
    return {{32, 3, 2, 1},  {16, 3, 1, 1},  {24, 3, 2, 1},
            {40, 3, 2, 1},  {80, 3, 2, 1},  {112, 3, 1, 1},
            {192, 3, 2, 1}, {320, 3, 1, 1}, {1280, 1, 1, 0}};
  }
  SSA_THROW(ConfigError) << "unknown encoder architecture '" << architecture
                         << "'";
}

}  // namespace

int64_t EncoderConfig::OutFrames(int64_t t) const { return t / kDownsample; }

void EncoderConfig::Validate() const {
  ArchitecturePlan(architecture);  // throws on unknown id
  SSA_CHECK_CONFIG(d > 0) << "embedding width";
  SSA_CHECK_CONFIG(n_mels > 0 && n_mels % kDownsample == 0)
      << "n_mels must be a positive multiple of " << kDownsample;
  SSA_CHECK_CONFIG(segment_frames > 0 && segment_frames % kDownsample == 0)
      << "segment_frames must be a positive multiple of " << kDownsample;
}

nlohmann::json EncoderConfigToJson(const EncoderConfig& cfg) {
  return nlohmann::json{{"architecture", cfg.architecture},
                        {"d", cfg.d},
                        {"n_mels", cfg.n_mels},
                        {"segment_frames", cfg.segment_frames}};
}

EncoderConfig EncoderConfigFromJson(const nlohmann::json& j) {
  EncoderConfig cfg;
  cfg.architecture = j.value("architecture", cfg.architecture);
  cfg.d = j.value("d", cfg.d);
  cfg.n_mels = j.value("n_mels", cfg.n_mels);
  cfg.segment_frames = j.value("segment_frames", cfg.segment_frames);
  cfg.Validate();
  return cfg;
}

Tensor TemporalMean(const Tensor& h) {
  SSA_CHECK(h.ndim() == 3) << "expected (B, d, T') tensor";
  const int64_t b = h.dim(0), d = h.dim(1), t = h.dim(2);
  Tensor pooled({b, d});
  for (int64_t bi = 0; bi < b; ++bi) {
    for (int64_t k = 0; k < d; ++k) {
      double acc = 0.0;
      for (int64_t ti = 0; ti < t; ++ti) acc += h.at(bi, k, ti);
      pooled.at(bi, k) = acc / static_cast<double>(t);
    }
  }
  return pooled;
}

Encoder::Encoder(const EncoderConfig& cfg, uint64_t seed) : cfg_(cfg) {
  cfg_.Validate();
  const auto plan = ArchitecturePlan(cfg_.architecture);
  int64_t channels = 1;
  for (size_t i = 0; i < plan.size(); ++i) {
    convs_.emplace_back(channels, plan[i].out_channels, plan[i].kernel,
                        plan[i].stride, plan[i].pad);
    Rng rng(DeriveSeed(seed, "encoder.conv", i));
    convs_.back().InitHe(&rng);
    channels = plan[i].out_channels;
  }
  proj_ = Linear(channels, cfg_.d);
  Rng rng(DeriveSeed(seed, "encoder.proj"));
  proj_.InitHe(&rng);
  norm_ = LayerNorm(cfg_.d);
}

Tensor Encoder::Forward(const Tensor& x, Cache* cache) const {
  SSA_CHECK(x.ndim() == 3) << "encoder input must be (B, n_mels, T), got "
                           << x.ShapeString();
  const int64_t b = x.dim(0);
  SSA_CHECK_DATA(x.dim(1) == cfg_.n_mels && x.dim(2) % EncoderConfig::kDownsample == 0)
      << "encoder input " << x.ShapeString() << " does not match config ("
      << cfg_.n_mels << " mels, frame count divisible by "
      << EncoderConfig::kDownsample << ")";
  const int64_t t_out = cfg_.OutFrames(x.dim(2));

  if (cache) {
    cache->conv.resize(convs_.size());
    cache->relu.resize(convs_.size());
  }

  // (B, 1, F, T)
  Tensor act({b, 1, x.dim(1), x.dim(2)});
  std::copy(x.data(), x.data() + x.size(), act.data());

  for (size_t i = 0; i < convs_.size(); ++i) {
    act = convs_[i].Forward(act, cache ? &cache->conv[i] : nullptr);
    act = ReluForward(act, cache ? &cache->relu[i] : nullptr);
  }

  // mean over remaining frequency rows: (B, C, F, T') -> (B, C, T')
  const int64_t c = act.dim(1), f = act.dim(2);
  SSA_CHECK(act.dim(3) == t_out) << "unexpected temporal shape";
  if (cache) cache->pool_shape = {b, c, f, t_out};
  Tensor pooled({b, c, t_out});
  for (int64_t bi = 0; bi < b; ++bi) {
    for (int64_t ci = 0; ci < c; ++ci) {
      for (int64_t ti = 0; ti < t_out; ++ti) {
        double acc = 0.0;
        for (int64_t fi = 0; fi < f; ++fi) acc += act.at(bi, ci, fi, ti);
        pooled.at(bi, ci, ti) = acc / static_cast<double>(f);
      }
    }
  }

  // per-frame projection: rows are (b, t) pairs
  Tensor rows({b * t_out, c});
  for (int64_t bi = 0; bi < b; ++bi) {
    for (int64_t ti = 0; ti < t_out; ++ti) {
      for (int64_t ci = 0; ci < c; ++ci) {
        rows.at(bi * t_out + ti, ci) = pooled.at(bi, ci, ti);
      }
    }
  }
  Tensor projected = proj_.Forward(rows, cache ? &cache->proj : nullptr);
  projected = norm_.Forward(projected, cache ? &cache->norm : nullptr);
  projected = TanhForward(projected, cache ? &cache->tanh : nullptr);

  Tensor h({b, cfg_.d, t_out});
  for (int64_t bi = 0; bi < b; ++bi) {
    for (int64_t ti = 0; ti < t_out; ++ti) {
      for (int64_t k = 0; k < cfg_.d; ++k) {
        h.at(bi, k, ti) = projected.at(bi * t_out + ti, k);
      }
    }
  }
  return h;
}

void Encoder::Backward(const Tensor& grad_h, const Cache& cache) {
  const int64_t b = grad_h.dim(0), t_out = grad_h.dim(2);
  Tensor d_rows({b * t_out, cfg_.d});
  for (int64_t bi = 0; bi < b; ++bi) {
    for (int64_t ti = 0; ti < t_out; ++ti) {
      for (int64_t k = 0; k < cfg_.d; ++k) {
        d_rows.at(bi * t_out + ti, k) = grad_h.at(bi, k, ti);
      }
    }
  }
  d_rows = TanhBackward(d_rows, cache.tanh);
  d_rows = norm_.Backward(d_rows, cache.norm);
  d_rows = proj_.Backward(d_rows, cache.proj);

  const int64_t c = cache.pool_shape[1], f = cache.pool_shape[2];
  Tensor d_act({b, c, f, t_out});
  const double inv_f = 1.0 / static_cast<double>(f);
  for (int64_t bi = 0; bi < b; ++bi) {
    for (int64_t ti = 0; ti < t_out; ++ti) {
      for (int64_t ci = 0; ci < c; ++ci) {
        const double g = d_rows.at(bi * t_out + ti, ci) * inv_f;
        for (int64_t fi = 0; fi < f; ++fi) d_act.at(bi, ci, fi, ti) = g;
      }
    }
  }

  for (size_t i = convs_.size(); i-- > 0;) {
    d_act = ReluBackward(d_act, cache.relu[i]);
    d_act = convs_[i].Backward(d_act, cache.conv[i]);
  }
}

Embedding Encoder::Encode(const Tensor& segment) const {
  SSA_CHECK(segment.ndim() == 2) << "segment must be (n_mels, T)";
  Tensor batch({1, segment.dim(0), segment.dim(1)});
  std::copy(segment.data(), segment.data() + segment.size(), batch.data());
  Tensor h = Forward(batch, nullptr);

  Embedding out;
  const int64_t t_out = h.dim(2);
  out.h = Tensor({cfg_.d, t_out});
  for (int64_t k = 0; k < cfg_.d; ++k) {
    for (int64_t t = 0; t < t_out; ++t) out.h.at(k, t) = h.at(0, k, t);
  }
  Tensor pooled = TemporalMean(h);
  out.pooled = Tensor({cfg_.d});
  for (int64_t k = 0; k < cfg_.d; ++k) out.pooled[k] = pooled.at(0, k);
  return out;
}

std::vector<ParamRef> Encoder::Params(const std::string& prefix) {
  std::vector<ParamRef> params;
  for (size_t i = 0; i < convs_.size(); ++i) {
    auto p = convs_[i].Params(prefix + ".conv" + std::to_string(i));
    params.insert(params.end(), p.begin(), p.end());
  }
  auto pp = proj_.Params(prefix + ".proj");
  params.insert(params.end(), pp.begin(), pp.end());
  auto np = norm_.Params(prefix + ".norm");
  params.insert(params.end(), np.begin(), np.end());
  return params;
}

}  // namespace ssaudio
