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

#include "qelm/harness/seeds.hpp"

namespace qelm::harness {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

void absorb(std::uint64_t& h, std::string_view bytes) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= kFnvPrime;
    }
    // field separator so ("ab","c") and ("a","bc") differ
    h ^= 0xff;
    h *= kFnvPrime;
}

void absorb(std::uint64_t& h, std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
        h ^= (value >> (8 * i)) & 0xffU;
        h *= kFnvPrime;
    }
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, int fold, std::string_view combination,
                          std::string_view feature_set, int repetition) {
    std::uint64_t h = kFnvOffset;
    absorb(h, master_seed);
    absorb(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(fold)));
    absorb(h, combination);
    absorb(h, feature_set);
    absorb(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(repetition)));
    return mix64(h);
}

std::uint64_t derive_stream(std::uint64_t seed, std::string_view purpose) {
    std::uint64_t h = kFnvOffset;
    absorb(h, seed);
    absorb(h, purpose);
    return mix64(h);
}

}  // namespace qelm::harness
