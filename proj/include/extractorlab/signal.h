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
#include <vector>

#include "extractorlab/field.h"

namespace extractorlab {

// sigma(x) = value / p as an exact fraction.
struct UnitFraction {
  std::uint64_t numerator;
  std::uint64_t denominator;

  double to_double() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  friend bool operator==(const UnitFraction&, const UnitFraction&) = default;
};

UnitFraction sigma(const FieldElement& x);

// sign(sin(2 pi sigma(x))) with sign(0) = +1. For odd p the sine vanishes
// only at 0, so the sign is decided exactly by value <= (p-1)/2.
int rho_sign(const FieldElement& x);

// (1 + rho_sign(x)) / 2.
int rho_bit(const FieldElement& x);

// rho tabulated over all of F_p.
class RhoTable {
 public:
  explicit RhoTable(const PrimeField& field);

  const PrimeField& field() const noexcept { return field_; }
  int sign(std::uint64_t v) const noexcept { return v <= half_ ? 1 : -1; }
  int bit(std::uint64_t v) const noexcept { return v <= half_ ? 1 : 0; }
  // Materialized +-1 values, length p.
  std::vector<int> signs() const;
  std::vector<int> bits() const;

 private:
  PrimeField field_;
  std::uint64_t half_;
};

// c(xi) with rho(x) = sum_xi c(xi) e(xi x), i.e.
// c(xi) = p^{-1} sum_x rho(x) e(-xi x).
class FourierCoefficients {
 public:
  FourierCoefficients(PrimeField field, std::vector<Complex> coeffs);

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  const Complex& operator[](std::uint64_t xi) const { return coeffs_[xi]; }

  // sum_xi c(xi) e(xi x).
  Complex reconstruct(std::uint64_t x) const;

 private:
  PrimeField field_;
  std::vector<Complex> coeffs_;
};

// Evaluates the coefficients through the closed-form Dirichlet kernel
// c(xi) = (2/p) (1 - e(-xi (h+1))) / (1 - e(-xi)), h = (p-1)/2, xi != 0, and
// c(0) = 1/p. Linear in p; throws kUniverseTooLarge above the transform cap.
FourierCoefficients rho_fourier(const PrimeField& f, const Limits& limits = {});

// sum_xi |c(xi)|.
double coefficient_sum(const FourierCoefficients& c);

}  // namespace extractorlab
