// Copyright 2026 The EIDI Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EIDI_TOOLS_CLI_H_
#define EIDI_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace eidi::cli {

// Entry point of the `eidi` tool. args[0] is the program name.
//
// Subcommands: run, eval, attest, type, transform, make-world.
// `--config FILE` reads flat "key = value" lines (keys are long flag names
// without dashes, '#' starts a comment); flags given on the command line
// win.
//
// Exit codes: 0 success, 1 hard error, CLI11's codes for usage errors.
int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err);

}  // namespace eidi::cli

#endif  // EIDI_TOOLS_CLI_H_
