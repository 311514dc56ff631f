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

#include "extractorlab/fourier.h"

#include <string>

#include "extractorlab/error.h"
#include "extractorlab/parallel.h"

namespace extractorlab {

std::vector<Complex> dft(const Universe& universe, std::vector<Complex> values,
                         int sign, unsigned threads) {
  if (values.size() != universe.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "dft: " + std::to_string(values.size()) +
                    " values for a universe of size " +
                    std::to_string(universe.size()));
  }
  if (sign != 1 && sign != -1) {
    throw Error(ErrorCode::kInvalidArgument, "dft: sign must be +1 or -1");
  }
  const PrimeField& f = universe.field();
  const std::uint64_t p = f.modulus();
  const std::uint64_t size = universe.size();

  // Axis k has stride p^{n-1-k}; each line along it is an independent
  // length-p transform.
  std::uint64_t stride = 1;
  for (int axis = universe.dimension() - 1; axis >= 0; --axis) {
    const std::uint64_t lines = size / p;
    std::vector<Complex> out(size);
    parallel_for(lines, threads, [&](std::size_t line) {
      const std::uint64_t low = line % stride;
      const std::uint64_t high = line / stride;
      const std::uint64_t base = high * stride * p + low;
      for (std::uint64_t x = 0; x < p; ++x) {
        Complex acc = 0;
        std::uint64_t phase = 0;  // x * xi mod p
        for (std::uint64_t xi = 0; xi < p; ++xi) {
          const std::uint64_t e = sign > 0 ? phase : (phase == 0 ? 0 : p - phase);
          acc += values[base + xi * stride] * f.character(e);
          phase = f.add(phase, x);
        }
        out[base + x * stride] = acc;
      }
    });
    values = std::move(out);
    stride *= p;
  }
  return values;
}

}  // namespace extractorlab
