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

#include <gtest/gtest.h>

#include <algorithm>
#include <complex>
#include <functional>

#include "extractorlab/error.h"
#include "extractorlab/random.h"
#include "oracles.h"

namespace extractorlab {
namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an extractorlab::Error";
  return ErrorCode::kInvalidArgument;
}

TEST(MakeFieldTest, AcceptsPrimes) {
  EXPECT_EQ(make_field(7).modulus(), 7u);
  EXPECT_EQ(make_field(1009).modulus(), 1009u);
}

TEST(MakeFieldTest, RejectsCompositeAndEven) {
  EXPECT_EQ(code_of([] { make_field(9); }), ErrorCode::kCompositeModulus);
  EXPECT_EQ(code_of([] { make_field(1); }), ErrorCode::kCompositeModulus);
  EXPECT_EQ(code_of([] { make_field(0); }), ErrorCode::kCompositeModulus);
  EXPECT_EQ(code_of([] { make_field(2); }), ErrorCode::kEvenModulus);
}

TEST(PrimalityTest, AgreesWithTrialDivisionBelow20000) {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    ASSERT_EQ(is_prime_u64(n), oracle::trial_division_prime(n)) << n;
  }
}

TEST(PrimalityTest, LargeKnownValues) {
  EXPECT_TRUE(is_prime_u64((1ULL << 61) - 1));
  EXPECT_TRUE(is_prime_u64(18446744073709551557ULL));  // 2^64 - 59
  EXPECT_FALSE(is_prime_u64(561));                    // Carmichael
  EXPECT_FALSE(is_prime_u64(3215031751ULL));          // spsp(2,3,5,7)
  EXPECT_FALSE(is_prime_u64(3825123056546413051ULL));  // spsp to bases <= 23
  EXPECT_FALSE(is_prime_u64(4294967297ULL));           // 641 * 6700417
}

TEST(FieldArithmeticTest, ElementsAndOperators) {
  const PrimeField f(17);
  const FieldElement a = f.element(5);
  const FieldElement b = f.element(13);
  EXPECT_EQ((a + b).value(), 1u);
  EXPECT_EQ((a - b).value(), 9u);
  EXPECT_EQ((a * b).value(), 14u);
  EXPECT_EQ((-a).value(), 12u);
  EXPECT_EQ(f.element(-2).value(), 15u);
  EXPECT_EQ(f.inv(5), 7u);
  EXPECT_EQ(code_of([&] { (void)(a + PrimeField(19).one()); }),
            ErrorCode::kInvalidArgument);
}

TEST(FieldArithmeticTest, LargeModulusUsesWideProducts) {
  const std::uint64_t p = 18446744073709551557ULL;
  const PrimeField f(p);
  const std::uint64_t a = p - 1;
  EXPECT_EQ(f.mul(a, a), 1u);  // (-1)^2
  EXPECT_EQ(f.add(a, a), p - 2);
  EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
}

TEST(DotTest, Examples) {
  const PrimeField f7(7);
  EXPECT_EQ(dot(f7.vector({1, 2}), f7.vector({3, 4})).value(), 4u);
  EXPECT_EQ(dot(f7.vector({5, 6}), f7.vector({0, 0})).value(), 0u);
  const PrimeField f5(5);
  EXPECT_EQ(dot(f5.vector({1, 1, 1}), f5.vector({1, 1, 1})).value(), 3u);
  EXPECT_EQ(code_of([&] { dot(f7.vector({1}), f7.vector({1, 2})); }),
            ErrorCode::kDimensionMismatch);
}

TEST(DotTest, SymmetricAndBilinear) {
  const PrimeField f(101);
  Rng rng(7);
  auto random_vector = [&](int n) {
    std::vector<std::int64_t> c;
    for (int i = 0; i < n; ++i) {
      c.push_back(static_cast<std::int64_t>(uniform_below(rng, 101)));
    }
    return f.vector(c);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 4));
    const FieldVector x = random_vector(n), y = random_vector(n),
                      z = random_vector(n);
    const FieldElement s = f.element(static_cast<std::int64_t>(uniform_below(rng, 101)));
    EXPECT_EQ(dot(x, y), dot(y, x));
    std::vector<std::uint64_t> comb(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      comb[static_cast<std::size_t>(i)] = (s * x[i] + y[i]).value();
    }
    const FieldVector sx_plus_y(comb, 101);
    EXPECT_EQ(dot(sx_plus_y, z), s * dot(x, z) + dot(y, z));
  }
}

TEST(CharacterTest, UnitModulusAndZero) {
  const PrimeField f(5);
  EXPECT_NEAR(std::abs(character(f.zero()) - Complex(1.0)), 0.0, 1e-15);
  for (std::uint64_t v = 0; v < 5; ++v) {
    EXPECT_NEAR(std::abs(character(FieldElement(v, 5))), 1.0, 1e-12);
  }
}

TEST(CharacterTest, FullSumVanishes) {
  for (std::uint64_t p : {3u, 5u, 7u, 101u, 1009u}) {
    const PrimeField f(p);
    Complex acc = 0;
    Complex acc_table = 0;
    for (std::uint64_t v = 0; v < p; ++v) {
      acc += character(FieldElement(v, p));
      acc_table += f.character(v);
    }
    EXPECT_LT(std::abs(acc), 1e-9) << p;
    EXPECT_LT(std::abs(acc_table), 1e-9) << p;
  }
}

TEST(CharacterTest, ConjugatePairs) {
  const PrimeField f(7);
  for (std::uint64_t v = 1; v < 7; ++v) {
    const Complex prod = f.character(v) * f.character(7 - v);
    EXPECT_NEAR(std::abs(prod - Complex(1.0)), 0.0, 1e-9);
  }
}

TEST(CharacterTest, TableMatchesDirectAndOracle) {
  const PrimeField f(1009);
  for (std::uint64_t v = 0; v < 1009; v += 7) {
    EXPECT_NEAR(std::abs(f.character(v) - f.character_direct(v)), 0, 1e-15);
    EXPECT_NEAR(std::abs(f.character(v) -
                         oracle::e(static_cast<std::int64_t>(v), 1009)),
                0, 1e-12);
  }
}

TEST(MinusOneIsSquareTest, Examples) {
  EXPECT_TRUE(minus_one_is_square(PrimeField(5)));
  EXPECT_FALSE(minus_one_is_square(PrimeField(7)));
  EXPECT_TRUE(minus_one_is_square(PrimeField(13)));
}

TEST(MinusOneIsSquareTest, AgreesWithExhaustiveSearchBelow10000) {
  for (std::uint64_t p = 3; p < 10000; p += 2) {
    if (!oracle::trial_division_prime(p)) continue;
    const bool brute =
        oracle::has_square_root_of_minus_one(static_cast<std::int64_t>(p));
    ASSERT_EQ(minus_one_is_square(PrimeField(p)), brute) << p;
    ASSERT_EQ(brute, p % 4 == 1) << p;
  }
}

TEST(ParaboloidTest, Points) {
  const auto p2 = paraboloid_points(PrimeField(3), 2);
  ASSERT_EQ(p2.size(), 3u);
  EXPECT_EQ(p2[0], FieldVector({0, 0}, 3));
  EXPECT_EQ(p2[1], FieldVector({1, 1}, 3));
  EXPECT_EQ(p2[2], FieldVector({2, 1}, 3));

  EXPECT_EQ(paraboloid_points(PrimeField(5), 3).size(), 25u);

  const auto p7 = paraboloid_points(PrimeField(7), 2);
  EXPECT_NE(std::find(p7.begin(), p7.end(), FieldVector({3, 2}, 7)), p7.end());
}

TEST(ParaboloidTest, Caps) {
  Limits tight;
  tight.max_universe = 100;
  EXPECT_EQ(code_of([&] { paraboloid_points(PrimeField(11), 3, tight); }),
            ErrorCode::kUniverseTooLarge);
  EXPECT_EQ(code_of([] { paraboloid_points(PrimeField(11), 1); }),
            ErrorCode::kInvalidArgument);
}

TEST(ParaboloidTest, Lift) {
  EXPECT_EQ(paraboloid_lift(PrimeField(7).vector({1, 2})),
            FieldVector({1, 2, 5}, 7));
  EXPECT_EQ(paraboloid_lift(PrimeField(7).vector({0, 0})),
            FieldVector({0, 0, 0}, 7));
  EXPECT_EQ(paraboloid_lift(PrimeField(5).vector({2})), FieldVector({2, 4}, 5));
}

TEST(ParaboloidTest, LiftLastCoordinateIsSelfDot) {
  const PrimeField f(31);
  const Universe u(f, 3);
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const FieldVector x = u.vector_at(uniform_below(rng, u.size()));
    const FieldVector lifted = paraboloid_lift(x);
    EXPECT_EQ(lifted[3], dot(x, x));
  }
}

TEST(UniverseTest, IndexIsLexicographicBijection) {
  const Universe u(PrimeField(5), 3);
  EXPECT_EQ(u.size(), 125u);
  for (std::uint64_t i = 0; i < u.size(); ++i) {
    ASSERT_EQ(u.index_of(u.vector_at(i)), i);
    if (i > 0) ASSERT_LT(u.vector_at(i - 1), u.vector_at(i));
  }
}

TEST(UniverseTest, Caps) {
  EXPECT_EQ(code_of([] { Universe(PrimeField(3), 9); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { Universe(PrimeField(1009), 4); }),
            ErrorCode::kUniverseTooLarge);
  Universe ok(PrimeField(1009), 3);
  EXPECT_EQ(ok.size(), 1009ULL * 1009 * 1009);
}

}  // namespace
}  // namespace extractorlab
