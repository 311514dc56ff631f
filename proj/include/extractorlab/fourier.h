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

#include <vector>

#include "extractorlab/field.h"

namespace extractorlab {

// Dense transform on F_p^n:
//   out(x) = sum_xi in(xi) e(sign * x.xi),  sign = +1 or -1,
// with `values` indexed by Universe::index_of. Computed axis by axis, so the
// cost is n p^{n+1}. Unnormalized in both directions.
std::vector<Complex> dft(const Universe& universe, std::vector<Complex> values,
                         int sign, unsigned threads = 1);

}  // namespace extractorlab
