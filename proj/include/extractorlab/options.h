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

namespace extractorlab {

// Resource caps enforced before any exhaustive loop starts.
struct Limits {
  // Largest admissible p^n for a universe F_p^n.
  std::uint64_t max_universe = std::uint64_t{1} << 34;
  // Largest |A|*|B| for pair-space enumeration.
  std::uint64_t max_pairs = std::uint64_t{1} << 31;
  // Largest |A| accepted by the brute-force energy counter.
  std::uint64_t max_brute_energy_set = 512;
  // Largest universe for which dense transforms (spectral energy, Parseval)
  // are attempted.
  std::uint64_t max_dense_universe = std::uint64_t{1} << 24;
  // Largest p for which a length-p transform over the value histogram runs.
  std::uint64_t max_transform_length = std::uint64_t{1} << 17;
  // Largest dimension of F^n.
  int max_dimension = 8;
};

struct RunOptions {
  unsigned threads = 1;
  Limits limits;
};

}  // namespace extractorlab
