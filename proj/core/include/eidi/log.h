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

#ifndef EIDI_LOG_H_
#define EIDI_LOG_H_

#include <functional>
#include <string_view>

namespace eidi {

using WarningSink = std::function<void(std::string_view)>;

// Emits a warning line. Defaults to stderr; thread-safe.
void LogWarning(std::string_view message);

// Replaces the sink and returns the previous one. An empty sink restores the
// stderr default.
WarningSink SetWarningSink(WarningSink sink);

}  // namespace eidi

#endif  // EIDI_LOG_H_
