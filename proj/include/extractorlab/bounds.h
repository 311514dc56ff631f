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
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "extractorlab/analysis.h"
#include "extractorlab/field.h"
#include "extractorlab/options.h"

namespace extractorlab {

using Rational = boost::rational<std::int64_t>;

// Accepts "a/b", "a" and decimal literals such as "2.5".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

// Energy hypothesis L(M(A)) <~ |A|^alpha for a map M : F^d -> F^n.
struct RateParams {
  int n = 0;
  int d = 0;
  Rational alpha;

  // n > d >= 1 and 2 <= alpha < 3; throws kInvalidExponent.
  void validate() const;
};

// n / (d (8 - 2 alpha)), matching the set-size scale |F|^{n / (8 - 2 alpha)}.
// The variant with denominator d (8 - d alpha) gives rates above 1 (8/3 for
// n = 4, d = 3, alpha = 5/2) and is kept only as literal_display_rate.
Rational rate_from_energy(const RateParams& params);

// n / (d (8 - d alpha)), kept for report metadata.
// Empty when the denominator vanishes.
std::optional<Rational> literal_display_rate(const RateParams& params);

// n / (8 - 2 alpha).
Rational critical_exponent(const RateParams& params);

// p^{n / (8 - 2 alpha)}.
double critical_set_size(const RateParams& params, std::uint64_t p);

enum class ScanFamily { kRandom, kCartesian, kLineBiased };

const char* scan_family_name(ScanFamily family);
ScanFamily parse_scan_family(std::string_view name);

struct ScanConfig {
  std::uint64_t p = 0;
  int d = 3;
  ScanFamily family = ScanFamily::kRandom;
  std::vector<std::size_t> sizes;
  int trials = 1;
  std::uint64_t seed = 0;
  // For d = 3 the random family requires -1 to be a non-residue; this turns
  // the violation into a recorded warning.
  bool allow_inadmissible = false;
};

struct ScanRow {
  std::uint64_t p = 0;
  int d = 0;
  ScanFamily family = ScanFamily::kRandom;
  std::size_t size = 0;
  int trial = 0;
  std::uint64_t energy = 0;
  // log L / log |A|; NaN for |A| <= 1.
  double fitted_exponent = 0;
  std::uint64_t seed = 0;
  EnergyMethod method = EnergyMethod::kBrute;
};

struct ExponentScan {
  // Ordered by (size index, trial).
  std::vector<ScanRow> rows;
  // Least-squares slope of log L against log |A| over rows with |A| > 1;
  // NaN when fewer than two distinct sizes qualify.
  double slope = 0;
  // Largest finite fitted exponent; NaN if none.
  double max_exponent = 0;
  bool inadmissible_field = false;
};

// Draws subsets of P_d of each requested size and measures their energies.
// Trials run in parallel; trial t of size index s uses the stream
// derive_seed(seed, s * trials + t).
ExponentScan scan_paraboloid_energies(const ScanConfig& config,
                                      const RunOptions& options = {});

// One subset of P_d of the given size drawn from a scan family.
std::vector<FieldVector> draw_paraboloid_subset(const PrimeField& f, int d,
                                                ScanFamily family,
                                                std::size_t size, Rng& rng,
                                                const Limits& limits = {});

}  // namespace extractorlab
