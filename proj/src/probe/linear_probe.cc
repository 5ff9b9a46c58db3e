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

#include "probe/linear_probe.h"

#include <cmath>

#include <nlohmann/json.hpp>

#include "core/common.h"
#include "core/hash.h"
#include "core/rng.h"
#include "losses/losses.h"
#include "nn/adam.h"

namespace ssaudio {

ProbeTask ProbeTask::FromName(const std::string& name, int num_classes) {
  ProbeTask task;
  if (name == "clip") {
    task.kind = Kind::kClipClassification;
  } else if (name == "sed") {
    task.kind = Kind::kFrameClassificationSed;
  } else if (name == "pitch") {
    task.kind = Kind::kPitchClassification;
    if (num_classes == 0) num_classes = 88;
  } else {
    SSA_THROW(ConfigError) << "unknown probe task '" << name
                           << "' (expected clip | sed | pitch)";
  }
  SSA_CHECK_CONFIG(num_classes >= 2) << "probe needs at least 2 classes";
  task.num_classes = num_classes;
  return task;
}

std::string ProbeTask::Name() const {
  switch (kind) {
    case Kind::kClipClassification: return "clip";
    case Kind::kFrameClassificationSed: return "sed";
    case Kind::kPitchClassification: return "pitch";
  }
  return "unknown";
}

EmbedMode ProbeTask::RequiredMode() const {
  return kind == Kind::kFrameClassificationSed ? EmbedMode::kFramewise
                                               : EmbedMode::kPooled;
}

ProbeDataset DatasetFromArchive(const EmbeddingArchive& archive,
                                const ProbeTask& task) {
  SSA_CHECK_DATA(!archive.clips.empty()) << "empty embedding archive";
  const bool framewise = task.kind == ProbeTask::Kind::kFrameClassificationSed;
  const std::string want_mode = framewise ? "framewise" : "pooled";
  SSA_CHECK_DATA(archive.mode == want_mode)
      << "task '" << task.Name() << "' needs a " << want_mode
      << " archive, got " << archive.mode;

  int64_t rows = 0;
  for (const auto& clip : archive.clips) {
    rows += framewise ? clip.embeddings.dim(0) : 1;
  }

  ProbeDataset ds;
  ds.features = Tensor({rows, archive.d});
  ds.frame_duration_sec = archive.frame_duration_sec;
  int64_t r = 0;
  for (size_t c = 0; c < archive.clips.size(); ++c) {
    const auto& clip = archive.clips[c];
    ds.clip_ids.push_back(clip.id);
    if (framewise) {
      SSA_CHECK_DATA(static_cast<int64_t>(clip.frame_labels.size()) ==
                     clip.embeddings.dim(0))
          << "clip '" << clip.id << "' embeddings and frame labels disagree";
      for (int64_t t = 0; t < clip.embeddings.dim(0); ++t) {
        const int label = clip.frame_labels[static_cast<size_t>(t)];
        SSA_CHECK_DATA(label >= 0 && label < task.num_classes)
            << "clip '" << clip.id << "' frame label " << label
            << " outside task label space [0, " << task.num_classes << ")";
        for (int64_t k = 0; k < archive.d; ++k) {
          ds.features.at(r, k) = clip.embeddings.at(t, k);
        }
        ds.labels.push_back(label);
        ds.clip_index.push_back(static_cast<int64_t>(c));
        ++r;
      }
    } else {
      SSA_CHECK_DATA(clip.label >= 0 && clip.label < task.num_classes)
          << "clip '" << clip.id << "' label " << clip.label
          << " outside task label space [0, " << task.num_classes << ")";
      for (int64_t k = 0; k < archive.d; ++k) {
        ds.features.at(r, k) = clip.embeddings[k];
      }
      ds.labels.push_back(clip.label);
      ds.clip_index.push_back(static_cast<int64_t>(c));
      ++r;
    }
  }
  return ds;
}

void SplitByClip(const ProbeDataset& all, double test_fraction,
                 ProbeDataset* train, ProbeDataset* test) {
  SSA_CHECK_CONFIG(test_fraction > 0 && test_fraction < 1) << "test fraction";
  const int64_t d = all.features.dim(1);
  const auto buckets = static_cast<uint64_t>(1000);
  const auto cutoff = static_cast<uint64_t>(test_fraction * 1000);

  auto is_test = [&](const std::string& id) {
    return Fnv1a64(id) % buckets < cutoff;
  };

  for (ProbeDataset* part : {train, test}) {
    part->features = Tensor();
    part->labels.clear();
    part->clip_index.clear();
    part->clip_ids = all.clip_ids;
    part->frame_duration_sec = all.frame_duration_sec;
  }

  std::vector<int64_t> train_rows, test_rows;
  for (int64_t r = 0; r < all.size(); ++r) {
    const auto& id = all.clip_ids[static_cast<size_t>(all.clip_index[static_cast<size_t>(r)])];
    (is_test(id) ? test_rows : train_rows).push_back(r);
  }
  SSA_CHECK_DATA(!train_rows.empty() && !test_rows.empty())
      << "degenerate train/test split (" << train_rows.size() << "/"
      << test_rows.size() << " rows)";

  auto fill = [&](const std::vector<int64_t>& rows, ProbeDataset* part) {
    part->features = Tensor({static_cast<int64_t>(rows.size()), d});
    for (size_t i = 0; i < rows.size(); ++i) {
      for (int64_t k = 0; k < d; ++k) {
        part->features.at(static_cast<int64_t>(i), k) = all.features.at(rows[i], k);
      }
      part->labels.push_back(all.labels[static_cast<size_t>(rows[i])]);
      part->clip_index.push_back(all.clip_index[static_cast<size_t>(rows[i])]);
    }
  };
  fill(train_rows, train);
  fill(test_rows, test);
}

std::vector<int> LinearProbe::Predict(const Tensor& features) const {
  const int64_t n = features.dim(0), d = features.dim(1);
  const int64_t c = weight.dim(0);
  Tensor logits({n, c});
  logits.AsMatrix(n, c).noalias() =
      features.AsMatrix(n, d) * weight.AsMatrix(c, d).transpose();
  std::vector<int> preds(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) {
    int best = 0;
    double best_v = logits.at(i, 0) + bias[0];
    for (int64_t j = 1; j < c; ++j) {
      const double v = logits.at(i, j) + bias[j];
      if (v > best_v) {
        best_v = v;
        best = static_cast<int>(j);
      }
    }
    preds[static_cast<size_t>(i)] = best;
  }
  return preds;
}

LinearProbe TrainProbe(const ProbeDataset& train, const ProbeTask& task,
                       const ProbeConfig& cfg) {
  SSA_CHECK_CONFIG(cfg.epochs > 0 && cfg.batch_size > 0 &&
                   cfg.learning_rate > 0 && cfg.dropout >= 0 &&
                   cfg.dropout < 1)
      << "probe config";
  SSA_CHECK_DATA(train.size() > 0) << "empty probe training set";
  const int64_t n = train.size();
  const int64_t d = train.features.dim(1);
  const int64_t c = task.num_classes;

  LinearProbe probe;
  probe.weight = Tensor({c, d});
  probe.bias = Tensor({c});
  Tensor grad_w({c, d}), grad_b({c});
  AdamConfig adam_cfg;
  adam_cfg.learning_rate = cfg.learning_rate;
  AdamOptimizer adam({{"probe.weight", &probe.weight, &grad_w},
                      {"probe.bias", &probe.bias, &grad_b}},
                     adam_cfg);

  std::vector<int64_t> order(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;

  const double keep = 1.0 - cfg.dropout;
  for (int64_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    Rng rng(DeriveSeed(cfg.seed, "probe.epoch", static_cast<uint64_t>(epoch)));
    rng.Shuffle(&order);
    for (int64_t start = 0; start < n; start += cfg.batch_size) {
      const int64_t b = std::min<int64_t>(cfg.batch_size, n - start);
      Tensor x({b, d});
      std::vector<int> y(static_cast<size_t>(b));
      for (int64_t i = 0; i < b; ++i) {
        const int64_t row = order[static_cast<size_t>(start + i)];
        for (int64_t k = 0; k < d; ++k) {
          double v = train.features.at(row, k);
          if (cfg.dropout > 0) {
            v = rng.Bernoulli(keep) ? v / keep : 0.0;  // inverted dropout
          }
          x.at(i, k) = v;
        }
        y[static_cast<size_t>(i)] = train.labels[static_cast<size_t>(row)];
      }

      Tensor logits({b, c});
      logits.AsMatrix(b, c).noalias() =
          x.AsMatrix(b, d) * probe.weight.AsMatrix(c, d).transpose();
      for (int64_t i = 0; i < b; ++i) {
        for (int64_t j = 0; j < c; ++j) logits.at(i, j) += probe.bias[j];
      }

      // softmax cross-entropy gradient: (p - onehot) / b
      Tensor d_logits({b, c});
      for (int64_t i = 0; i < b; ++i) {
        const double* row = logits.data() + i * c;
        const double lse = LogSumExp(row, c);
        for (int64_t j = 0; j < c; ++j) {
          double p = std::exp(row[j] - lse);
          if (j == y[static_cast<size_t>(i)]) p -= 1.0;
          d_logits.at(i, j) = p / static_cast<double>(b);
        }
      }

      adam.ZeroGrads();
      grad_w.AsMatrix(c, d).noalias() =
          d_logits.AsMatrix(b, c).transpose() * x.AsMatrix(b, d);
      auto gb = grad_b.AsVector();
      gb.noalias() = d_logits.AsMatrix(b, c).colwise().sum().transpose();
      adam.Step();
    }
  }
  return probe;
}

}  // namespace ssaudio
