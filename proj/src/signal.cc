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

#include "extractorlab/signal.h"

#include <cmath>
#include <string>

#include "extractorlab/error.h"

namespace extractorlab {

UnitFraction sigma(const FieldElement& x) {
  return {x.value(), x.modulus()};
}

int rho_sign(const FieldElement& x) {
  return x.value() <= (x.modulus() - 1) / 2 ? 1 : -1;
}

int rho_bit(const FieldElement& x) { return (1 + rho_sign(x)) / 2; }

RhoTable::RhoTable(const PrimeField& field)
    : field_(field), half_((field.modulus() - 1) / 2) {}

std::vector<int> RhoTable::signs() const {
  std::vector<int> out(field_.modulus());
  for (std::uint64_t v = 0; v < out.size(); ++v) out[v] = sign(v);
  return out;
}

std::vector<int> RhoTable::bits() const {
  std::vector<int> out(field_.modulus());
  for (std::uint64_t v = 0; v < out.size(); ++v) out[v] = bit(v);
  return out;
}

FourierCoefficients::FourierCoefficients(PrimeField field,
                                         std::vector<Complex> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_.modulus()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(field_.modulus()) +
                    " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

Complex FourierCoefficients::reconstruct(std::uint64_t x) const {
  const std::uint64_t p = field_.modulus();
  Complex acc = 0;
  for (std::uint64_t xi = 0; xi < p; ++xi) {
    acc += coeffs_[xi] * field_.character(field_.mul(xi, x));
  }
  return acc;
}

FourierCoefficients rho_fourier(const PrimeField& f, const Limits& limits) {
  const std::uint64_t p = f.modulus();
  if (p > limits.max_transform_length) {
    throw Error(ErrorCode::kUniverseTooLarge,
                "rho_fourier: p = " + std::to_string(p) +
                    " exceeds transform cap " +
                    std::to_string(limits.max_transform_length));
  }
  const std::uint64_t half = (p - 1) / 2;
  const double inv_p = 1.0 / static_cast<double>(p);
  std::vector<Complex> coeffs(p);
  coeffs[0] = inv_p;
  for (std::uint64_t xi = 1; xi < p; ++xi) {
    // Geometric sum of e(-xi x) over x = 0..half.
    const Complex ratio = f.character(p - xi);
    const Complex last = f.character(f.mul(p - xi, half + 1));
    coeffs[xi] = 2.0 * inv_p * (Complex(1.0) - last) / (Complex(1.0) - ratio);
  }
  return FourierCoefficients(f, std::move(coeffs));
}

double coefficient_sum(const FourierCoefficients& c) {
  double sum = 0;
  for (const Complex& z : c.coeffs()) sum += std::abs(z);
  return sum;
}

}  // namespace extractorlab
