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

#include "extractorlab/extractor.h"

#include <gtest/gtest.h>

#include "extractorlab/error.h"
#include "extractorlab/random.h"
#include "extractorlab/sources.h"
#include "oracles.h"

namespace extractorlab {
namespace {

oracle::Point to_point(const FieldVector& x) {
  return {x.coords().begin(), x.coords().end()};
}

TEST(InnerFormTest, Examples) {
  const PrimeField f(7);
  EXPECT_EQ(inner_form(f.vector({1, 2}), f.vector({3, 4})).value(), 3u);
  EXPECT_EQ(inner_form(f.vector({5, 1}), f.vector({0, 0})).value(), 0u);
  EXPECT_THROW(inner_form(f.vector({1}), f.vector({1, 2})), Error);
}

TEST(InnerFormTest, SymmetricAndMatchesOracle) {
  const PrimeField f(31);
  const Universe u(f, 3);
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const FieldVector x = u.vector_at(uniform_below(rng, u.size()));
    const FieldVector y = u.vector_at(uniform_below(rng, u.size()));
    ASSERT_EQ(inner_form(x, y), inner_form(y, x));
    ASSERT_EQ(static_cast<std::int64_t>(inner_form(x, y).value()),
              oracle::extractor_form(to_point(x), to_point(y), 31));
  }
}

TEST(ExtractTest, Examples) {
  const PrimeField f(7);
  const ExtractorSpec spec(f, 2);
  EXPECT_TRUE(spec.admissible());
  EXPECT_EQ(extract(spec, f.vector({1, 2}), f.vector({3, 4})), 1);
  const Universe u(f, 2);
  for (std::uint64_t i = 0; i < u.size(); ++i) {
    EXPECT_EQ(extract(spec, f.vector({0, 0}), u.vector_at(i)), 1);
  }
  EXPECT_THROW(extract(spec, f.vector({1, 2, 3}), f.vector({1, 2, 3})), Error);
}

TEST(ExtractTest, Admissibility) {
  EXPECT_TRUE(ExtractorSpec(PrimeField(7), 2).admissible());
  EXPECT_FALSE(ExtractorSpec(PrimeField(13), 2).admissible());
  EXPECT_TRUE(ExtractorSpec(PrimeField(13), 3).admissible());
  EXPECT_TRUE(ExtractorSpec(PrimeField(7), 3).admissible());
  EXPECT_FALSE(ExtractorSpec(PrimeField(7), 1).admissible());
}

TEST(ExtractTest, IsotropicLineOverF13IsConstant) {
  const PrimeField f(13);
  const ExtractorSpec spec(f, 2);
  for (std::int64_t t = 0; t < 13; ++t) {
    for (std::int64_t s = 0; s < 13; ++s) {
      ASSERT_EQ(extract(spec, f.vector({t, 5 * t}), f.vector({s, 5 * s})), 1);
    }
  }
}

TEST(ExtractTest, IsotropicLinesVanishExhaustively) {
  for (std::uint64_t p = 3; p <= 101; p += 2) {
    if (!is_prime_u64(p)) continue;
    const PrimeField f(p);
    for (int n : {2, 3}) {
      if (n == 3 && p > 31) continue;
      const auto v = find_isotropic_direction(f, n);
      if (n == 2) {
        ASSERT_EQ(v.has_value(), p % 4 == 1) << p;
      } else {
        ASSERT_TRUE(v.has_value()) << p;
      }
      if (!v) continue;
      const ExtractorSpec spec(f, n);
      for (std::uint64_t t = 0; t < p; ++t) {
        for (std::uint64_t s = 0; s < p; ++s) {
          std::vector<std::uint64_t> x, y;
          for (std::uint64_t c : v->coords()) {
            x.push_back(f.mul(t, c));
            y.push_back(f.mul(s, c));
          }
          const FieldVector fx(x, p), fy(y, p);
          ASSERT_EQ(inner_form(fx, fy).value(), 0u);
          ASSERT_EQ(extract(spec, fx, fy), 1);
        }
      }
    }
  }
}

TEST(ValueHistogramTest, OriginPair) {
  const PrimeField f(7);
  const Universe u(f, 2);
  const ExtractorSpec spec(f, 2);
  const auto a = WeightedSet::indicator(u, {f.vector({0, 0})});
  const ValueHistogram h = value_histogram(spec, a, a);
  EXPECT_EQ(h.buckets()[0], Complex(1.0));
  for (std::uint64_t t = 1; t < 7; ++t) EXPECT_EQ(h.buckets()[t], Complex(0.0));
}

TEST(ValueHistogramTest, ProductCountsOverF3) {
  const PrimeField f(3);
  const Universe u(f, 1);
  std::vector<FieldVector> all = {f.vector({0}), f.vector({1}), f.vector({2})};
  const auto a = WeightedSet::indicator(u, all);
  const ValueHistogram h = form_histogram(Form::kBilinear, a, a);
  EXPECT_EQ(h.buckets()[0], Complex(5.0));
  EXPECT_EQ(h.buckets()[1], Complex(2.0));
  EXPECT_EQ(h.buckets()[2], Complex(2.0));
  const auto counts = form_counts(Form::kBilinear, all, all);
  EXPECT_EQ(counts, (std::vector<std::uint64_t>{5, 2, 2}));
}

TEST(ValueHistogramTest, MassConservationAndTwistedSums) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint64_t p = std::array<std::uint64_t, 4>{3, 7, 11, 13}[trial % 4];
    const int n = 1 + trial % 3;
    const Universe u(PrimeField(p), n);
    const std::size_t max_size = std::min<std::uint64_t>(20, u.size());
    const auto a = random_weighted_set(u, 1 + uniform_below(rng, max_size), true, rng);
    const auto b = random_weighted_set(u, 1 + uniform_below(rng, max_size), true, rng);
    for (Form form : {Form::kBilinear, Form::kExtractor}) {
      const ValueHistogram h = form_histogram(form, a, b);
      const Complex expected_total = a.total() * b.total();
      EXPECT_LE(std::abs(h.total() - expected_total),
                1e-6 * std::max(1.0, std::abs(expected_total)));

      std::vector<oracle::Point> pa, pb;
      for (const auto& x : a.support()) pa.push_back(to_point(x));
      for (const auto& y : b.support()) pb.push_back(to_point(y));
      const auto sp = static_cast<std::int64_t>(p);
      for (std::int64_t lambda = 0; lambda < sp; ++lambda) {
        Complex direct = 0;
        for (std::size_t i = 0; i < pa.size(); ++i) {
          for (std::size_t j = 0; j < pb.size(); ++j) {
            const std::int64_t v = form == Form::kBilinear
                                       ? oracle::dot(pa[i], pb[j], sp)
                                       : oracle::extractor_form(pa[i], pb[j], sp);
            direct += a.weights()[i] * b.weights()[j] * oracle::e(lambda * v, sp);
          }
        }
        const Complex kernel = h.twisted_sum(static_cast<std::uint64_t>(lambda));
        ASSERT_LE(std::abs(kernel - direct), 1e-6 * std::max(1.0, std::abs(direct)));
      }
    }
  }
}

TEST(ValueHistogramTest, BitIdenticalAcrossThreadCounts) {
  const PrimeField f(101);
  const Universe u(f, 2);
  Rng rng(9);
  const auto a = random_weighted_set(u, 700, true, rng);
  const auto b = random_weighted_set(u, 500, true, rng);
  RunOptions one;
  const ValueHistogram reference = form_histogram(Form::kExtractor, a, b, one);
  for (unsigned threads : {2u, 3u, 8u}) {
    RunOptions many;
    many.threads = threads;
    const ValueHistogram h = form_histogram(Form::kExtractor, a, b, many);
    ASSERT_EQ(h.buckets(), reference.buckets()) << threads;
    EXPECT_EQ(h.all_twisted_sums(threads), reference.all_twisted_sums(1));
  }
}

TEST(ValueHistogramTest, PairCap) {
  const PrimeField f(7);
  const Universe u(f, 2);
  const Source s = uniform_source(u);
  RunOptions options;
  options.limits.max_pairs = 100;
  try {
    form_counts(Form::kExtractor, s.support(), s.support(), options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUniverseTooLarge);
  }
}

}  // namespace
}  // namespace extractorlab
