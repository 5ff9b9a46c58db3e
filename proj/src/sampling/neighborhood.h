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

#ifndef SSAUDIO_SAMPLING_NEIGHBORHOOD_H_
#define SSAUDIO_SAMPLING_NEIGHBORHOOD_H_

#include <cstdint>
#include <vector>

namespace ssaudio {

// Positive frame-index set around anchor frame t: a symmetric window of
// radius m clipped to [0, t_total). Always contains t itself. The radius
// must satisfy 0 <= m <= t_total / 2.
std::vector<int64_t> Neighborhood(int64_t t, int64_t t_total, int64_t m);

// |Neighborhood(t, t_total, m)| without materializing the set.
int64_t NeighborhoodSize(int64_t t, int64_t t_total, int64_t m);

// Throws ConfigError unless 0 <= m <= t_total / 2.
void ValidateNeighborhoodRadius(int64_t m, int64_t t_total);

}  // namespace ssaudio

#endif  // SSAUDIO_SAMPLING_NEIGHBORHOOD_H_
