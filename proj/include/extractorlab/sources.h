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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "extractorlab/field.h"
#include "extractorlab/options.h"
#include "extractorlab/random.h"

namespace extractorlab {

enum class SourceKind { kFlat, kGeneral };

const char* source_kind_name(SourceKind kind);

// A probability mass function on F_p^n with strictly positive weights on its
// support. Flat sources keep their weight as the exact fraction 1/K.
class Source {
 public:
  // Throws kEmptySupport, or kInvalidArgument for points outside the
  // universe or repeated points.
  static Source flat(Universe universe, std::vector<FieldVector> support);
  // Weights must be positive and sum to 1 within 1e-9.
  static Source general(Universe universe, std::vector<FieldVector> support,
                        std::vector<double> weights);

  const Universe& universe() const noexcept { return universe_; }
  SourceKind kind() const noexcept { return kind_; }
  const std::vector<FieldVector>& support() const noexcept { return support_; }
  std::size_t size() const noexcept { return support_.size(); }
  // Materialized weights in support order (1/K each for flat sources).
  const std::vector<double>& weights() const noexcept { return weights_; }
  double weight(std::size_t i) const { return weights_[i]; }
  double max_weight() const noexcept { return max_weight_; }
  double min_weight() const noexcept { return min_weight_; }
  // -log2(max weight); exactly log2 K for flat sources.
  double min_entropy() const;

  const std::optional<std::uint64_t>& seed() const noexcept { return seed_; }
  Source with_seed(std::uint64_t seed) const;

 private:
  Source(Universe universe, SourceKind kind, std::vector<FieldVector> support,
         std::vector<double> weights);

  Universe universe_;
  SourceKind kind_;
  std::vector<FieldVector> support_;
  std::vector<double> weights_;
  double max_weight_ = 0;
  double min_weight_ = 0;
  std::optional<std::uint64_t> seed_;
};

Source flat_source(const Universe& universe, std::vector<FieldVector> support);

// min_entropy / (n log2 p), in [0, 1].
double min_entropy_rate(const Source& s);

// Complex weights on a finite support with |a(x)| <= 1.
class WeightedSet {
 public:
  WeightedSet(Universe universe, std::vector<FieldVector> support,
              std::vector<Complex> weights);

  static WeightedSet indicator(const Universe& universe,
                               std::vector<FieldVector> support);

  const Universe& universe() const noexcept { return universe_; }
  const std::vector<FieldVector>& support() const noexcept { return support_; }
  const std::vector<Complex>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return support_.size(); }
  bool is_indicator() const noexcept { return indicator_; }
  Complex total() const;

 private:
  Universe universe_;
  std::vector<FieldVector> support_;
  std::vector<Complex> weights_;
  bool indicator_ = false;
};

// The source's mass function divided by its largest weight, so the weights
// lie in (0, 1]. `scale` receives the divisor.
WeightedSet normalized_weights(const Source& s, double* scale);

// Dyadic index of a weight: the unique l with 2^-l <= w < 2^-l+1. This puts w
// inside (2^-l-1, 2^-l+1] and assigns w = 2^-l to layer l.
int dyadic_level(double w);

struct LevelSet {
  int level;
  std::vector<FieldVector> support;
  std::vector<double> weights;
};

struct LevelSetDecomposition {
  // Sorted by increasing level.
  std::vector<LevelSet> layers;
};

LevelSetDecomposition level_sets(const Source& s);

// First nonzero v (lexicographic) with v.v = 0 in F^n, if any. Exhaustive.
std::optional<FieldVector> find_isotropic_direction(const PrimeField& f, int n,
                                                    const Limits& limits = {});

// Flat source on {t v : t in F} for an isotropic direction v. Throws
// kNoIsotropicDirection when none exists (n = 2 with -1 a non-residue).
Source adversarial_line_source(const PrimeField& f, int n,
                               const Limits& limits = {});

Source uniform_source(const Universe& universe);
Source point_source(const Universe& universe, const FieldVector& x);
// Flat on `size` distinct uniformly chosen points.
Source random_flat_source(const Universe& universe, std::size_t size, Rng& rng);
// `size` distinct points with weights proportional to 2^{-spread * u},
// u uniform in [0, 1).
Source random_general_source(const Universe& universe, std::size_t size,
                             Rng& rng, double spread = 8.0);

// `size` distinct uniformly chosen points carrying unit weights, or weights
// drawn uniformly from the closed unit disc when `unit_disc` is set.
WeightedSet random_weighted_set(const Universe& universe, std::size_t size,
                                bool unit_disc, Rng& rng);

// `count` independent draws from s.
std::vector<FieldVector> sample(const Source& s, Rng& rng, std::size_t count);

}  // namespace extractorlab
