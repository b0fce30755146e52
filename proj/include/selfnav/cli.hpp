// Copyright 2026 The selfnav Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace selfnav::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/** Slack allowed between a verified epsilon and the declared one. */
inline constexpr double kVerifySlack = 1e-12;

/**
 * Runs the command line `args` (args[0] is the program name) with output
 * sent to `out` and diagnostics to `err`. Returns the process exit code.
 *
 *   compile  (--gate N | --euler a,b,c | --axis x,y,z --angle t |
 *             --matrix JSON | --matrix-file PATH)
 *            [--axes N] [--epsilon E] [--baseline] [--format json|text]
 *            [--out PATH]
 *   bench    [--axes-list 6,10,18,34] [--eps-decades 1:8] [--threads N]
 *            [--order xz|zx] --out PATH
 *   verify   --schedule PATH [gate spec]
 */
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

}  // namespace selfnav::cli
