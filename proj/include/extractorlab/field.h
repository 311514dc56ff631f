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

#include <complex>
#include <cstdint>
#include <memory>
#include <ostream>
#include <vector>

#include "extractorlab/options.h"

namespace extractorlab {

using Complex = std::complex<double>;

// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

// An element of F_p. Carries its modulus so that mixing fields is caught.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(std::uint64_t value, std::uint64_t modulus);

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

 private:
  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

// An element of F_p^n, 1 <= n <= 8.
class FieldVector {
 public:
  FieldVector() = default;
  // Coordinates must already be reduced into [0, p).
  FieldVector(std::vector<std::uint64_t> coords, std::uint64_t modulus);

  int dimension() const noexcept { return static_cast<int>(coords_.size()); }
  std::uint64_t modulus() const noexcept { return modulus_; }
  const std::vector<std::uint64_t>& coords() const noexcept { return coords_; }
  FieldElement operator[](int i) const {
    return FieldElement(coords_[static_cast<std::size_t>(i)], modulus_);
  }
  bool is_zero() const noexcept;

  friend bool operator==(const FieldVector&, const FieldVector&) = default;
  friend auto operator<=>(const FieldVector&, const FieldVector&) = default;

 private:
  std::vector<std::uint64_t> coords_;
  std::uint64_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FieldVector& x);

// The prime field F_p for an odd 64-bit prime p. Immutable and cheap to copy;
// copies share one table of additive-character values.
class PrimeField {
 public:
  // Largest p for which e(v) is served from a precomputed table.
  static constexpr std::uint64_t kCharacterTableLimit = std::uint64_t{1} << 20;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }

  FieldElement element(std::int64_t v) const;
  FieldElement zero() const { return FieldElement(0, p_); }
  FieldElement one() const { return FieldElement(1, p_); }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= p_ - b ? a - (p_ - b) : a + b;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + (p_ - b);
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    if (p_ <= 0xffffffffULL) return (a * b) % p_;
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const noexcept;
  // Multiplicative inverse; a must be nonzero.
  std::uint64_t inv(std::uint64_t a) const;

  // e(v) = exp(2 pi i v / p) for a residue v in [0, p).
  Complex character(std::uint64_t v) const {
    if (table_) return (*table_)[v];
    return character_direct(v);
  }
  Complex character_direct(std::uint64_t v) const;

  FieldVector vector(const std::vector<std::int64_t>& coords) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }

 private:
  std::uint64_t p_;
  std::shared_ptr<const std::vector<Complex>> table_;
};

// Throws Error{kEvenModulus} for p == 2 and Error{kCompositeModulus} for
// every other non-prime (including 0 and 1).
PrimeField make_field(std::uint64_t p);

FieldElement dot(const FieldVector& x, const FieldVector& y);

// e(x.value) computed directly, without the per-field table.
Complex character(const FieldElement& x);

// Exists i with i^2 = -1. Uses Euler's criterion.
bool minus_one_is_square(const PrimeField& f);

// x -> (x, x.x), landing on the paraboloid of dimension x.dimension() + 1.
FieldVector paraboloid_lift(const FieldVector& x);

// F_p^n with mixed-radix indexing; the first coordinate is the most
// significant digit, so index order is lexicographic order.
class Universe {
 public:
  Universe(PrimeField field, int dimension, const Limits& limits = {});

  const PrimeField& field() const noexcept { return field_; }
  std::uint64_t modulus() const noexcept { return field_.modulus(); }
  int dimension() const noexcept { return dimension_; }
  std::uint64_t size() const noexcept { return size_; }

  std::uint64_t index_of(const FieldVector& x) const;
  FieldVector vector_at(std::uint64_t index) const;
  bool contains(const FieldVector& x) const noexcept;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.field_ == b.field_ && a.dimension_ == b.dimension_;
  }

 private:
  PrimeField field_;
  int dimension_;
  std::uint64_t size_;
};

// P_d = {(x, x.x) : x in F^{d-1}} in lexicographic order of x. Requires
// d >= 2; throws kUniverseTooLarge when p^{d-1} exceeds the universe cap.
std::vector<FieldVector> paraboloid_points(const PrimeField& f, int d,
                                           const Limits& limits = {});

// p^n, or 0 when it overflows 64 bits.
std::uint64_t checked_power(std::uint64_t p, int n) noexcept;

}  // namespace extractorlab
