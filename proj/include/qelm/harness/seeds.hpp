// Copyright 2026 The qelm-elevator Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string_view>

namespace qelm::harness {

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Stable seed for one experiment cell; independent of platform, thread
/// count and evaluation order.
std::uint64_t derive_seed(std::uint64_t master_seed, int fold, std::string_view combination,
                          std::string_view feature_set, int repetition);

/// Independent sub-stream of a cell seed for one purpose ("encoder", ...).
std::uint64_t derive_stream(std::uint64_t seed, std::string_view purpose);

}  // namespace qelm::harness
