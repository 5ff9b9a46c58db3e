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

#include "sampling/neighborhood.h"

#include <algorithm>

#include "core/common.h"

namespace ssaudio {

void ValidateNeighborhoodRadius(int64_t m, int64_t t_total) {
  SSA_CHECK_CONFIG(t_total >= 1) << "frame count";
  SSA_CHECK_CONFIG(m >= 0 && m <= t_total / 2)
      << "neighborhood radius m = " << m << " must satisfy 0 <= m <= "
      << t_total / 2 << " for " << t_total << " frames";
}

std::vector<int64_t> Neighborhood(int64_t t, int64_t t_total, int64_t m) {
  ValidateNeighborhoodRadius(m, t_total);
  SSA_CHECK(t >= 0 && t < t_total) << "anchor frame " << t << " out of range";
  const int64_t lo = std::max<int64_t>(0, t - m);
  const int64_t hi = std::min<int64_t>(t_total - 1, t + m);
  std::vector<int64_t> indices;
  indices.reserve(static_cast<size_t>(hi - lo + 1));
  for (int64_t i = lo; i <= hi; ++i) indices.push_back(i);
  return indices;
}

int64_t NeighborhoodSize(int64_t t, int64_t t_total, int64_t m) {
  const int64_t lo = std::max<int64_t>(0, t - m);
  const int64_t hi = std::min<int64_t>(t_total - 1, t + m);
  return hi - lo + 1;
}

}  // namespace ssaudio
