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

#include "extractorlab/random.h"

#include <unordered_set>

#include "extractorlab/error.h"

namespace extractorlab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) {
    throw Error(ErrorCode::kInvalidArgument, "uniform_below: zero bound");
  }
  // Rejection on the top of the range keeps the draw exactly uniform.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t universe,
                                           std::uint64_t count) {
  if (count > universe) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot draw " + std::to_string(count) +
                    " distinct values from " + std::to_string(universe));
  }
  std::vector<std::uint64_t> out;
  out.reserve(count);
  if (count * 2 > universe) {
    // Dense request: partial Fisher-Yates over the whole range.
    std::vector<std::uint64_t> all(universe);
    for (std::uint64_t i = 0; i < universe; ++i) all[i] = i;
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::uint64_t j = i + uniform_below(rng, universe - i);
      std::swap(all[i], all[j]);
      out.push_back(all[i]);
    }
    return out;
  }
  std::unordered_set<std::uint64_t> seen;
  while (out.size() < count) {
    const std::uint64_t v = uniform_below(rng, universe);
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

}  // namespace extractorlab
