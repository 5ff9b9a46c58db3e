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

#ifndef SSAUDIO_CLI_COMMANDS_H_
#define SSAUDIO_CLI_COMMANDS_H_

#include <string>
#include <vector>

namespace ssaudio {

// Documented exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;       // unexpected failure
inline constexpr int kExitConfig = 2;      // bad flags / config file
inline constexpr int kExitData = 3;        // unreadable or inconsistent data
inline constexpr int kExitNumeric = 4;     // non-finite numerics
inline constexpr int kExitAcceptance = 5;  // repro/acceptance check failed

// Full command surface: gen, pretrain, embed, probe, report, repro.
// args excludes argv[0]. Prints to stdout/stderr, returns the exit code.
int RunCli(const std::vector<std::string>& args);

}  // namespace ssaudio

#endif  // SSAUDIO_CLI_COMMANDS_H_
