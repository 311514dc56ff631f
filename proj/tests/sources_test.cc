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

#include "extractorlab/sources.h"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "extractorlab/error.h"

namespace extractorlab {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvariantViolation;
}

TEST(SourceTest, FlatBasics) {
  const PrimeField f(7);
  const Universe u(f, 2);
  const Source s = flat_source(u, {f.vector({0, 1}), f.vector({2, 3}),
                                   f.vector({4, 5}), f.vector({6, 0})});
  EXPECT_EQ(s.kind(), SourceKind::kFlat);
  EXPECT_EQ(s.size(), 4u);
  EXPECT_DOUBLE_EQ(s.min_entropy(), 2.0);
  EXPECT_DOUBLE_EQ(s.max_weight(), 0.25);
  EXPECT_DOUBLE_EQ(min_entropy_rate(s), 2.0 / (2.0 * std::log2(7.0)));
  EXPECT_FALSE(s.seed().has_value());
  EXPECT_EQ(s.with_seed(4).seed(), std::optional<std::uint64_t>(4));
}

TEST(SourceTest, Validation) {
  const PrimeField f(7);
  const Universe u(f, 2);
  EXPECT_EQ(code_of([&] { Source::flat(u, {}); }), ErrorCode::kEmptySupport);
  EXPECT_EQ(code_of([&] { Source::flat(u, {f.vector({1, 1}), f.vector({1, 1})}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { Source::flat(u, {f.vector({1, 1, 1})}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] {
              Source::general(u, {f.vector({1, 1}), f.vector({2, 2})}, {0.5, 0.4});
            }),
            ErrorCode::kNotADistribution);
  EXPECT_EQ(code_of([&] {
              Source::general(u, {f.vector({1, 1}), f.vector({2, 2})}, {1.2, -0.2});
            }),
            ErrorCode::kNotADistribution);
  EXPECT_NO_THROW(
      Source::general(u, {f.vector({1, 1}), f.vector({2, 2})}, {0.75, 0.25}));
}

TEST(SourceTest, GeneralMinEntropy) {
  const PrimeField f(5);
  const Universe u(f, 1);
  const Source s =
      Source::general(u, {f.vector({0}), f.vector({1}), f.vector({2})},
                      {0.5, 0.25, 0.25});
  EXPECT_DOUBLE_EQ(s.min_entropy(), 1.0);
  EXPECT_DOUBLE_EQ(s.min_weight(), 0.25);
}

TEST(SourceTest, StandardSources) {
  const PrimeField f(5);
  const Universe u(f, 2);
  EXPECT_EQ(uniform_source(u).size(), 25u);
  EXPECT_DOUBLE_EQ(min_entropy_rate(uniform_source(u)), 1.0);
  const Source pt = point_source(u, f.vector({3, 4}));
  EXPECT_EQ(pt.size(), 1u);
  EXPECT_DOUBLE_EQ(min_entropy_rate(pt), 0.0);
}

TEST(SourceTest, RandomSourcesAreDistinctAndSeeded) {
  const Universe u(PrimeField(11), 2);
  Rng rng(3);
  const Source flat = random_flat_source(u, 50, rng);
  std::set<FieldVector> seen(flat.support().begin(), flat.support().end());
  EXPECT_EQ(seen.size(), 50u);
  const Source general = random_general_source(u, 40, rng);
  double total = 0;
  for (double w : general.weights()) total += w;
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_LE(general.max_weight() / general.min_weight(), 256.0 + 1e-9);

  Rng a(99), b(99);
  EXPECT_EQ(random_flat_source(u, 30, a).support(),
            random_flat_source(u, 30, b).support());
}

TEST(WeightedSetTest, UnitDiscBound) {
  const Universe u(PrimeField(13), 2);
  Rng rng(1);
  const WeightedSet w = random_weighted_set(u, 100, true, rng);
  EXPECT_FALSE(w.is_indicator());
  for (const Complex& z : w.weights()) EXPECT_LE(std::abs(z), 1.0 + 1e-12);
  EXPECT_THROW(WeightedSet(u, {u.vector_at(0)}, {Complex(1.5, 0)}), Error);
  const WeightedSet ind = random_weighted_set(u, 10, false, rng);
  EXPECT_TRUE(ind.is_indicator());
  EXPECT_EQ(ind.total(), Complex(10.0));
}

TEST(LevelSetTest, DyadicLevel) {
  EXPECT_EQ(dyadic_level(1.0), 0);
  EXPECT_EQ(dyadic_level(0.5), 1);
  EXPECT_EQ(dyadic_level(0.75), 1);
  EXPECT_EQ(dyadic_level(0.25), 2);
  EXPECT_EQ(dyadic_level(0.3), 2);
  EXPECT_EQ(dyadic_level(0.49), 2);
}

TEST(LevelSetTest, FlatSourceIsOneLayer) {
  const PrimeField f(7);
  const Universe u(f, 2);
  for (std::size_t k : {1u, 2u, 3u, 4u, 5u, 8u, 49u}) {
    Rng rng(k);
    const Source s = random_flat_source(u, k, rng);
    const auto d = level_sets(s);
    ASSERT_EQ(d.layers.size(), 1u);
    EXPECT_EQ(d.layers[0].support.size(), k);
    const double w = 1.0 / static_cast<double>(k);
    const int l = d.layers[0].level;
    EXPECT_LE(std::ldexp(1.0, -l - 1), w);
    EXPECT_LE(w, std::ldexp(1.0, -l + 1));
  }
}

TEST(LevelSetTest, PartitionAndRange) {
  const Universe u(PrimeField(11), 2);
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Source s = random_general_source(u, 1 + uniform_below(rng, 100), rng);
    const auto d = level_sets(s);
    std::map<FieldVector, double> covered;
    int previous = -1;
    for (const auto& layer : d.layers) {
      EXPECT_GT(layer.level, previous);
      previous = layer.level;
      for (std::size_t i = 0; i < layer.support.size(); ++i) {
        const double w = layer.weights[i];
        EXPECT_LT(std::ldexp(1.0, -layer.level - 1), w);
        EXPECT_LE(w, std::ldexp(1.0, -layer.level + 1));
        EXPECT_TRUE(covered.emplace(layer.support[i], w).second);
      }
    }
    ASSERT_EQ(covered.size(), s.size());
    EXPECT_LE(static_cast<double>(d.layers.size()),
              std::ceil(std::log2(1.0 / s.min_weight())) + 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
      EXPECT_EQ(covered.at(s.support()[i]), s.weight(i));
    }
  }
}

TEST(IsotropicTest, Directions) {
  EXPECT_FALSE(find_isotropic_direction(PrimeField(7), 1).has_value());
  EXPECT_FALSE(find_isotropic_direction(PrimeField(7), 2).has_value());
  const auto v = find_isotropic_direction(PrimeField(13), 2);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, PrimeField(13).vector({1, 5}));
  const auto w = find_isotropic_direction(PrimeField(7), 3);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(dot(*w, *w).value(), 0u);
  EXPECT_FALSE(w->is_zero());
}

TEST(IsotropicTest, LineSource) {
  EXPECT_EQ(code_of([] { adversarial_line_source(PrimeField(7), 2); }),
            ErrorCode::kNoIsotropicDirection);
  const Source s = adversarial_line_source(PrimeField(13), 2);
  EXPECT_EQ(s.size(), 13u);
  for (const auto& x : s.support()) EXPECT_EQ(dot(x, x).value(), 0u);
}

TEST(SampleTest, FrequenciesFollowWeights) {
  const PrimeField f(5);
  const Universe u(f, 1);
  const Source s = Source::general(u, {f.vector({0}), f.vector({1})}, {0.8, 0.2});
  Rng rng(8);
  const auto draws = sample(s, rng, 20000);
  std::size_t zeros = 0;
  for (const auto& x : draws) zeros += x.is_zero();
  EXPECT_NEAR(static_cast<double>(zeros) / 20000.0, 0.8, 0.02);
}

}  // namespace
}  // namespace extractorlab
