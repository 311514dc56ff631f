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
#include <optional>
#include <string>
#include <vector>

#include "extractorlab/extractor.h"
#include "extractorlab/field.h"
#include "extractorlab/options.h"
#include "extractorlab/sources.h"

namespace extractorlab {

// A distribution on one output bit.
struct BitDistribution {
  double p0 = 0;
  double p1 = 0;
  // Set when the distribution was computed by exact counting (flat sources):
  // p1 = ones / pairs.
  std::optional<std::uint64_t> ones;
  std::optional<std::uint64_t> pairs;
};

// (1/2) sum_b |P[b] - 1/2|. Throws kNotADistribution for negative entries or
// a total off 1 by more than 1e-9.
double statistical_distance(const BitDistribution& dist);

// Law of extract(X, Y) for independent X, Y, computed over supp X x supp Y.
// Flat sources are counted exactly in integers.
BitDistribution extractor_output_distribution(const ExtractorSpec& spec,
                                              const Source& x,
                                              const Source& y,
                                              const RunOptions& options = {});

struct ExpSumReport {
  Form form = Form::kBilinear;
  // max over lambda in F_* of |sum a(x) b(y) e(lambda f(x, y))|.
  double lhs = 0;
  std::uint64_t argmax_lambda = 1;
  // |A|^{1/2} |B|^{1/2} p^{m/8} (L(A) L(B))^{1/8}, with m = n and the energies
  // of the supports for the bilinear form, and m = n + 1 and the energies of
  // the lifted supports for the extractor form (x.y + (x.x)(y.y) is the
  // bilinear form of the lifts). Unset when an energy is out of reach.
  std::optional<double> rhs_bound;
  std::optional<std::uint64_t> energy_a;
  std::optional<std::uint64_t> energy_b;
  std::size_t size_a = 0;
  std::size_t size_b = 0;

  bool bound_holds(double relative_tolerance = 1e-6) const {
    return !rhs_bound || lhs <= *rhs_bound * (1 + relative_tolerance);
  }
};

// Sums over lambda in F_* only; lambda = 0 is excluded everywhere.
ExpSumReport max_exponential_sum(const WeightedSet& a, const WeightedSet& b,
                                 Form form, const RunOptions& options = {});

// Exact count of (a, b, c, d) in A^4 with a + b = c + d, as sum_x r(x)^2.
// Throws kSetTooLarge above limits.max_brute_energy_set.
std::uint64_t additive_energy_brute(const std::vector<FieldVector>& set,
                                    const Limits& limits = {});

// p^{-n} sum_xi |A^(xi)|^4, rounded. Throws kUniverseTooLarge when p^n is
// beyond the dense cap and kRoundingUnstable when the unrounded value is more
// than 0.25 from an integer.
std::uint64_t additive_energy_spectral(const std::vector<FieldVector>& set,
                                       const RunOptions& options = {});

enum class EnergyMethod { kBrute, kSpectral };

const char* energy_method_name(EnergyMethod method);

struct EnergyReport {
  std::string descriptor;
  std::size_t size = 0;
  std::uint64_t energy = 0;
  // log L / log |A|; NaN for |A| <= 1.
  double exponent = 0;
  EnergyMethod method = EnergyMethod::kBrute;
};

// Brute force when |A| is within the brute cap, spectral otherwise. Asserts
// 2|A|^2 - |A| <= L <= |A|^3 and throws kInvariantViolation otherwise.
EnergyReport measure_energy(const std::vector<FieldVector>& set,
                            std::string descriptor,
                            const RunOptions& options = {});

bool within_trivial_energy_bounds(std::size_t size, std::uint64_t energy);

struct ParsevalResult {
  double lhs = 0;
  double rhs = 0;
  bool holds(double relative_tolerance = 1e-6) const;
};

// lhs = sum_x |sum_xi f(xi) e(x.xi)|^2, rhs = p^n sum_xi |f(xi)|^2. The
// right-hand side carries |F|^n, not |F|: for f = delta_0 on F^2 the left
// side is p^2.
ParsevalResult parseval_check(const Universe& universe,
                              const std::vector<Complex>& f_values,
                              const RunOptions& options = {});

struct BiasReport {
  std::uint64_t p = 0;
  int n = 0;
  bool admissible = false;
  std::string x_source;
  std::string y_source;
  std::size_t x_size = 0;
  std::size_t y_size = 0;
  double x_rate = 0;
  double y_rate = 0;
  double p1 = 0;
  double sd = 0;
  // |sum_xi c(xi) S(xi)| / 2 with S the source-weighted twisted sums; equals
  // sd up to rounding.
  double sd_fourier = 0;
  // max over lambda in F_* of |sum X(x) Y(y) e(lambda f(x, y))|.
  double max_exp_sum = 0;
  std::uint64_t argmax_lambda = 1;
  double coefficient_sum = 0;
  // coefficient_sum * max_exp_sum.
  double chain_bound = 0;
  double wall_time_ms = 0;

  bool chain_holds(double tolerance = 1e-6) const {
    return sd <= chain_bound + tolerance;
  }
};

BiasReport measure_bias(const ExtractorSpec& spec, const Source& x,
                        const Source& y, const RunOptions& options = {});

}  // namespace extractorlab
