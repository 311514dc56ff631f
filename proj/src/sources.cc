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

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <unordered_set>

#include "extractorlab/error.h"

namespace extractorlab {
namespace {

void check_support(const Universe& universe,
                   const std::vector<FieldVector>& support) {
  if (support.empty()) {
    throw Error(ErrorCode::kEmptySupport, "source support is empty");
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(support.size());
  for (const FieldVector& x : support) {
    if (!universe.contains(x)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "support point outside F_" +
                      std::to_string(universe.modulus()) + "^" +
                      std::to_string(universe.dimension()));
    }
    if (!seen.insert(universe.index_of(x)).second) {
      throw Error(ErrorCode::kInvalidArgument, "repeated support point");
    }
  }
}

std::vector<FieldVector> points_at(const Universe& universe,
                                   const std::vector<std::uint64_t>& indices) {
  std::vector<FieldVector> pts;
  pts.reserve(indices.size());
  for (std::uint64_t i : indices) pts.push_back(universe.vector_at(i));
  return pts;
}

}  // namespace

const char* source_kind_name(SourceKind kind) {
  return kind == SourceKind::kFlat ? "flat" : "general";
}

Source::Source(Universe universe, SourceKind kind,
               std::vector<FieldVector> support, std::vector<double> weights)
    : universe_(std::move(universe)),
      kind_(kind),
      support_(std::move(support)),
      weights_(std::move(weights)) {
  max_weight_ = *std::max_element(weights_.begin(), weights_.end());
  min_weight_ = *std::min_element(weights_.begin(), weights_.end());
}

Source Source::flat(Universe universe, std::vector<FieldVector> support) {
  check_support(universe, support);
  const double w = 1.0 / static_cast<double>(support.size());
  std::vector<double> weights(support.size(), w);
  return Source(std::move(universe), SourceKind::kFlat, std::move(support),
                std::move(weights));
}

Source Source::general(Universe universe, std::vector<FieldVector> support,
                       std::vector<double> weights) {
  check_support(universe, support);
  if (weights.size() != support.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::to_string(weights.size()) + " weights for " +
                    std::to_string(support.size()) + " support points");
  }
  double total = 0;
  for (double w : weights) {
    if (!(w > 0) || !std::isfinite(w)) {
      throw Error(ErrorCode::kNotADistribution,
                  "source weights must be positive and finite");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(ErrorCode::kNotADistribution,
                "source weights sum to " + std::to_string(total));
  }
  return Source(std::move(universe), SourceKind::kGeneral, std::move(support),
                std::move(weights));
}

double Source::min_entropy() const {
  if (kind_ == SourceKind::kFlat) {
    return std::log2(static_cast<double>(support_.size()));
  }
  return -std::log2(max_weight_);
}

Source Source::with_seed(std::uint64_t seed) const {
  Source copy = *this;
  copy.seed_ = seed;
  return copy;
}

Source flat_source(const Universe& universe, std::vector<FieldVector> support) {
  return Source::flat(universe, std::move(support));
}

double min_entropy_rate(const Source& s) {
  const double full = static_cast<double>(s.universe().dimension()) *
                      std::log2(static_cast<double>(s.universe().modulus()));
  return std::clamp(s.min_entropy() / full, 0.0, 1.0);
}

WeightedSet::WeightedSet(Universe universe, std::vector<FieldVector> support,
                         std::vector<Complex> weights)
    : universe_(std::move(universe)),
      support_(std::move(support)),
      weights_(std::move(weights)) {
  if (weights_.size() != support_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "weighted set needs one weight per support point");
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(support_.size());
  indicator_ = true;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (!universe_.contains(support_[i])) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "weighted-set point outside its universe");
    }
    if (!seen.insert(universe_.index_of(support_[i])).second) {
      throw Error(ErrorCode::kInvalidArgument, "repeated support point");
    }
    if (!(std::abs(weights_[i]) <= 1.0 + 1e-12)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "weight magnitude exceeds 1 at support index " +
                      std::to_string(i));
    }
    if (weights_[i] != Complex(1.0)) indicator_ = false;
  }
}

WeightedSet WeightedSet::indicator(const Universe& universe,
                                   std::vector<FieldVector> support) {
  std::vector<Complex> ones(support.size(), Complex(1.0));
  return WeightedSet(universe, std::move(support), std::move(ones));
}

Complex WeightedSet::total() const {
  Complex acc = 0;
  for (const Complex& w : weights_) acc += w;
  return acc;
}

WeightedSet normalized_weights(const Source& s, double* scale) {
  const double max_w = s.max_weight();
  std::vector<Complex> weights;
  weights.reserve(s.size());
  for (double w : s.weights()) weights.emplace_back(std::min(1.0, w / max_w));
  if (scale != nullptr) *scale = max_w;
  return WeightedSet(s.universe(), s.support(), std::move(weights));
}

int dyadic_level(double w) {
  if (!(w > 0) || !std::isfinite(w)) {
    throw Error(ErrorCode::kInvalidArgument, "dyadic_level needs w > 0");
  }
  int exponent = 0;
  std::frexp(w, &exponent);  // w = m 2^exponent, m in [1/2, 1)
  return 1 - exponent;
}

LevelSetDecomposition level_sets(const Source& s) {
  std::map<int, LevelSet> by_level;
  const bool flat = s.kind() == SourceKind::kFlat;
  // 1/K sits in [2^-l, 2^-l+1) for l = ceil(log2 K).
  const int flat_level =
      flat ? static_cast<int>(std::bit_width(
                 static_cast<std::uint64_t>(s.size()) - 1))
           : 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int level = flat ? flat_level : dyadic_level(s.weight(i));
    LevelSet& layer = by_level[level];
    layer.level = level;
    layer.support.push_back(s.support()[i]);
    layer.weights.push_back(s.weight(i));
  }
  LevelSetDecomposition out;
  out.layers.reserve(by_level.size());
  for (auto& [level, layer] : by_level) out.layers.push_back(std::move(layer));
  return out;
}

std::optional<FieldVector> find_isotropic_direction(const PrimeField& f, int n,
                                                    const Limits& limits) {
  if (n == 1) return std::nullopt;
  if (n == 2 && !minus_one_is_square(f)) return std::nullopt;
  const Universe universe(f, n, limits);
  for (std::uint64_t i = 1; i < universe.size(); ++i) {
    FieldVector v = universe.vector_at(i);
    if (dot(v, v).value() == 0) return v;
  }
  return std::nullopt;
}

Source adversarial_line_source(const PrimeField& f, int n,
                               const Limits& limits) {
  const auto direction = find_isotropic_direction(f, n, limits);
  if (!direction) {
    throw Error(ErrorCode::kNoIsotropicDirection,
                "no nonzero v with v.v = 0 in F_" +
                    std::to_string(f.modulus()) + "^" + std::to_string(n));
  }
  const Universe universe(f, n, limits);
  std::vector<FieldVector> line;
  line.reserve(f.modulus());
  for (std::uint64_t t = 0; t < f.modulus(); ++t) {
    std::vector<std::uint64_t> coords;
    for (std::uint64_t c : direction->coords()) coords.push_back(f.mul(t, c));
    line.emplace_back(std::move(coords), f.modulus());
  }
  return Source::flat(universe, std::move(line));
}

Source uniform_source(const Universe& universe) {
  std::vector<FieldVector> all;
  all.reserve(universe.size());
  for (std::uint64_t i = 0; i < universe.size(); ++i) {
    all.push_back(universe.vector_at(i));
  }
  return Source::flat(universe, std::move(all));
}

Source point_source(const Universe& universe, const FieldVector& x) {
  return Source::flat(universe, {x});
}

Source random_flat_source(const Universe& universe, std::size_t size,
                          Rng& rng) {
  return Source::flat(universe,
                      points_at(universe, sample_distinct(rng, universe.size(),
                                                          size)));
}

Source random_general_source(const Universe& universe, std::size_t size,
                             Rng& rng, double spread) {
  std::vector<FieldVector> support =
      points_at(universe, sample_distinct(rng, universe.size(), size));
  std::vector<double> weights(size);
  double total = 0;
  for (double& w : weights) {
    w = std::exp2(-spread * uniform_unit(rng));
    total += w;
  }
  for (double& w : weights) w /= total;
  return Source::general(universe, std::move(support), std::move(weights));
}

WeightedSet random_weighted_set(const Universe& universe, std::size_t size,
                                bool unit_disc, Rng& rng) {
  std::vector<FieldVector> support =
      points_at(universe, sample_distinct(rng, universe.size(), size));
  std::vector<Complex> weights(size, Complex(1.0));
  if (unit_disc) {
    for (Complex& w : weights) {
      // sqrt(u) radius makes the draw uniform in area.
      const double radius = std::sqrt(uniform_unit(rng));
      const double angle = 2.0 * std::numbers::pi * uniform_unit(rng);
      w = std::polar(radius, angle);
    }
  }
  return WeightedSet(universe, std::move(support), std::move(weights));
}

std::vector<FieldVector> sample(const Source& s, Rng& rng, std::size_t count) {
  std::vector<double> cumulative(s.size());
  double acc = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    acc += s.weight(i);
    cumulative[i] = acc;
  }
  std::vector<FieldVector> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double u = uniform_unit(rng) * acc;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    out.push_back(s.support()[static_cast<std::size_t>(it - cumulative.begin())]);
  }
  return out;
}

}  // namespace extractorlab
