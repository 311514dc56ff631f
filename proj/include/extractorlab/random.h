// Copyright 2026 The extractorlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace extractorlab {

// std::mt19937_64 output is fixed by the standard; the distributions in
// <random> are not, so draws are derived from raw engine output here to keep
// reports byte-identical across standard libraries.
using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

// Seed for the `index`-th independent stream derived from `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// Uniform integer in [0, bound). bound must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(Rng& rng);

// `count` distinct values from [0, universe), in draw order.
std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t universe,
                                           std::uint64_t count);

}  // namespace extractorlab
