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

#ifndef EIDI_HASH_H_
#define EIDI_HASH_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace eidi {

// Lowercase hex SHA-256 of `data`.
std::string Sha256Hex(std::string_view data);

// Lowercase hex SHA-256 of a file's bytes. Throws eidi::Error if unreadable.
std::string Sha256FileHex(const std::filesystem::path& path);

// 64-bit FNV-1a; stable across platforms.
std::uint64_t Fnv1a64(std::string_view data,
                      std::uint64_t seed = 0xcbf29ce484222325ULL);

// One step of the splitmix64 generator.
std::uint64_t SplitMix64(std::uint64_t& state);

// Maps 64 random bits to [0, 1) with 53-bit resolution.
inline double ToUnitInterval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace eidi

#endif  // EIDI_HASH_H_
