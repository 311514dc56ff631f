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

#include "extractorlab/field.h"

#include <cmath>
#include <numbers>
#include <string>

#include "extractorlab/error.h"

namespace extractorlab {
namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

void require_same_field(std::uint64_t a, std::uint64_t b) {
  if (a != b) {
    throw Error(ErrorCode::kInvalidArgument,
                "elements of F_" + std::to_string(a) + " and F_" +
                    std::to_string(b) + " mixed");
  }
}

Complex unit_root(std::uint64_t v, std::uint64_t p) {
  // Reduce the angle to [-pi, pi] before calling into libm.
  const long double frac =
      static_cast<long double>(v) / static_cast<long double>(p);
  const long double centred = frac > 0.5L ? frac - 1.0L : frac;
  const long double angle = 2.0L * std::numbers::pi_v<long double> * centred;
  return {static_cast<double>(std::cos(angle)),
          static_cast<double>(std::sin(angle))};
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                              19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven deterministic witness set below 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldElement::FieldElement(std::uint64_t value, std::uint64_t modulus)
    : value_(value), modulus_(modulus) {
  if (modulus == 0 || value >= modulus) {
    throw Error(ErrorCode::kInvalidArgument,
                "field element " + std::to_string(value) +
                    " not reduced mod " + std::to_string(modulus));
  }
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.modulus_, b.modulus_);
  const std::uint64_t p = a.modulus_;
  const std::uint64_t s =
      a.value_ >= p - b.value_ ? a.value_ - (p - b.value_) : a.value_ + b.value_;
  return FieldElement(s, p);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.modulus_, b.modulus_);
  const std::uint64_t p = a.modulus_;
  return FieldElement(
      a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + (p - b.value_),
      p);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.modulus_, b.modulus_);
  return FieldElement(mulmod(a.value_, b.value_, a.modulus_), a.modulus_);
}

FieldElement FieldElement::operator-() const {
  return FieldElement(value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
  return os << x.value();
}

FieldVector::FieldVector(std::vector<std::uint64_t> coords,
                         std::uint64_t modulus)
    : coords_(std::move(coords)), modulus_(modulus) {
  if (coords_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "vector of dimension 0");
  }
  for (std::uint64_t c : coords_) {
    if (c >= modulus_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "coordinate " + std::to_string(c) + " not reduced mod " +
                      std::to_string(modulus_));
    }
  }
}

bool FieldVector::is_zero() const noexcept {
  for (std::uint64_t c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const FieldVector& x) {
  os << '(';
  for (int i = 0; i < x.dimension(); ++i) {
    if (i > 0) os << ',';
    os << x.coords()[static_cast<std::size_t>(i)];
  }
  return os << ')';
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p == 2) {
    throw Error(ErrorCode::kEvenModulus, "p = 2 has no odd half-range");
  }
  if (!is_prime_u64(p)) {
    throw Error(ErrorCode::kCompositeModulus,
                std::to_string(p) + " is not prime");
  }
  if (p <= kCharacterTableLimit) {
    auto table = std::make_shared<std::vector<Complex>>(p);
    for (std::uint64_t v = 0; v < p; ++v) (*table)[v] = unit_root(v, p);
    table_ = std::move(table);
  }
}

FieldElement PrimeField::element(std::int64_t v) const {
  const auto p = static_cast<__int128>(p_);
  __int128 r = static_cast<__int128>(v) % p;
  if (r < 0) r += p;
  return FieldElement(static_cast<std::uint64_t>(r), p_);
}

std::uint64_t PrimeField::pow(std::uint64_t base,
                              std::uint64_t exp) const noexcept {
  return powmod(base, exp, p_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "inverse of zero");
  }
  return powmod(a, p_ - 2, p_);
}

Complex PrimeField::character_direct(std::uint64_t v) const {
  return unit_root(v, p_);
}

FieldVector PrimeField::vector(const std::vector<std::int64_t>& coords) const {
  std::vector<std::uint64_t> reduced;
  reduced.reserve(coords.size());
  for (std::int64_t c : coords) reduced.push_back(element(c).value());
  return FieldVector(std::move(reduced), p_);
}

PrimeField make_field(std::uint64_t p) { return PrimeField(p); }

FieldElement dot(const FieldVector& x, const FieldVector& y) {
  if (x.dimension() != y.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "dot of dimensions " + std::to_string(x.dimension()) +
                    " and " + std::to_string(y.dimension()));
  }
  require_same_field(x.modulus(), y.modulus());
  const std::uint64_t p = x.modulus();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    const std::uint64_t term = mulmod(x.coords()[i], y.coords()[i], p);
    acc = acc >= p - term ? acc - (p - term) : acc + term;
  }
  return FieldElement(acc, p);
}

Complex character(const FieldElement& x) {
  return unit_root(x.value(), x.modulus());
}

bool minus_one_is_square(const PrimeField& f) {
  const std::uint64_t p = f.modulus();
  return f.pow(p - 1, (p - 1) / 2) == 1;
}

FieldVector paraboloid_lift(const FieldVector& x) {
  std::vector<std::uint64_t> coords = x.coords();
  coords.push_back(dot(x, x).value());
  return FieldVector(std::move(coords), x.modulus());
}

std::uint64_t checked_power(std::uint64_t p, int n) noexcept {
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) {
    if (p != 0 && r > ~std::uint64_t{0} / p) return 0;
    r *= p;
  }
  return r;
}

Universe::Universe(PrimeField field, int dimension, const Limits& limits)
    : field_(std::move(field)), dimension_(dimension), size_(0) {
  if (dimension < 1 || dimension > limits.max_dimension) {
    throw Error(ErrorCode::kInvalidArgument,
                "dimension " + std::to_string(dimension) + " outside [1, " +
                    std::to_string(limits.max_dimension) + "]");
  }
  size_ = checked_power(field_.modulus(), dimension);
  if (size_ == 0 || size_ > limits.max_universe) {
    throw Error(ErrorCode::kUniverseTooLarge,
                std::to_string(field_.modulus()) + "^" +
                    std::to_string(dimension) + " exceeds universe cap " +
                    std::to_string(limits.max_universe));
  }
}

bool Universe::contains(const FieldVector& x) const noexcept {
  return x.modulus() == field_.modulus() && x.dimension() == dimension_;
}

std::uint64_t Universe::index_of(const FieldVector& x) const {
  if (!contains(x)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector not in F_" + std::to_string(field_.modulus()) + "^" +
                    std::to_string(dimension_));
  }
  std::uint64_t idx = 0;
  for (std::uint64_t c : x.coords()) idx = idx * field_.modulus() + c;
  return idx;
}

FieldVector Universe::vector_at(std::uint64_t index) const {
  const std::uint64_t p = field_.modulus();
  std::vector<std::uint64_t> coords(static_cast<std::size_t>(dimension_));
  for (int i = dimension_ - 1; i >= 0; --i) {
    coords[static_cast<std::size_t>(i)] = index % p;
    index /= p;
  }
  return FieldVector(std::move(coords), p);
}

std::vector<FieldVector> paraboloid_points(const PrimeField& f, int d,
                                           const Limits& limits) {
  if (d < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "paraboloid needs d >= 2, got " + std::to_string(d));
  }
  const Universe base(f, d - 1, limits);
  std::vector<FieldVector> points;
  points.reserve(base.size());
  for (std::uint64_t i = 0; i < base.size(); ++i) {
    points.push_back(paraboloid_lift(base.vector_at(i)));
  }
  return points;
}

}  // namespace extractorlab
