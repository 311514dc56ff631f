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

#include "extractorlab/analysis.h"

#include <chrono>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include "extractorlab/error.h"
#include "extractorlab/fourier.h"
#include "extractorlab/io.h"
#include "extractorlab/signal.h"

namespace extractorlab {
namespace {

constexpr std::uint64_t kDenseCountLimit = std::uint64_t{1} << 20;

struct SetShape {
  std::uint64_t p = 0;
  int n = 0;
};

SetShape shape_of(const std::vector<FieldVector>& set) {
  SetShape shape{set.front().modulus(), set.front().dimension()};
  for (const FieldVector& x : set) {
    if (x.modulus() != shape.p || x.dimension() != shape.n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "set mixes dimensions or fields");
    }
  }
  return shape;
}

std::vector<FieldVector> lifted(const std::vector<FieldVector>& set) {
  std::vector<FieldVector> out;
  out.reserve(set.size());
  for (const FieldVector& x : set) out.push_back(paraboloid_lift(x));
  return out;
}

// Energy of a support if some method is within the caps.
std::optional<std::uint64_t> reachable_energy(
    const std::vector<FieldVector>& set, const RunOptions& options) {
  if (set.size() <= options.limits.max_brute_energy_set) {
    return additive_energy_brute(set, options.limits);
  }
  const SetShape shape = shape_of(set);
  const std::uint64_t universe = checked_power(shape.p, shape.n);
  if (universe != 0 && universe <= options.limits.max_dense_universe) {
    return additive_energy_spectral(set, options);
  }
  return std::nullopt;
}

}  // namespace

double statistical_distance(const BitDistribution& dist) {
  if (!(dist.p0 >= 0) || !(dist.p1 >= 0) ||
      std::abs(dist.p0 + dist.p1 - 1.0) > 1e-9) {
    throw Error(ErrorCode::kNotADistribution,
                "bit probabilities " + std::to_string(dist.p0) + ", " +
                    std::to_string(dist.p1));
  }
  return 0.5 * (std::abs(dist.p0 - 0.5) + std::abs(dist.p1 - 0.5));
}

BitDistribution extractor_output_distribution(const ExtractorSpec& spec,
                                              const Source& x,
                                              const Source& y,
                                              const RunOptions& options) {
  if (!(x.universe() == spec.universe()) ||
      !(y.universe() == spec.universe())) {
    throw Error(ErrorCode::kDimensionMismatch,
                "sources do not live in F_" +
                    std::to_string(spec.field().modulus()) + "^" +
                    std::to_string(spec.dimension()));
  }
  const RhoTable rho(spec.field());
  const std::uint64_t p = spec.field().modulus();
  BitDistribution dist;
  if (x.kind() == SourceKind::kFlat && y.kind() == SourceKind::kFlat) {
    const auto counts =
        form_counts(Form::kExtractor, x.support(), y.support(), options);
    std::uint64_t ones = 0;
    for (std::uint64_t t = 0; t < p; ++t) {
      if (rho.bit(t) == 1) ones += counts[t];
    }
    const std::uint64_t pairs =
        static_cast<std::uint64_t>(x.size()) * y.size();
    dist.ones = ones;
    dist.pairs = pairs;
    dist.p1 = static_cast<double>(ones) / static_cast<double>(pairs);
    dist.p0 = static_cast<double>(pairs - ones) / static_cast<double>(pairs);
    return dist;
  }
  std::vector<Complex> wx(x.weights().begin(), x.weights().end());
  std::vector<Complex> wy(y.weights().begin(), y.weights().end());
  const ValueHistogram hist = form_histogram(
      Form::kExtractor, WeightedSet(x.universe(), x.support(), std::move(wx)),
      WeightedSet(y.universe(), y.support(), std::move(wy)), options);
  for (std::uint64_t t = 0; t < p; ++t) {
    (rho.bit(t) == 1 ? dist.p1 : dist.p0) += hist.buckets()[t].real();
  }
  return dist;
}

ExpSumReport max_exponential_sum(const WeightedSet& a, const WeightedSet& b,
                                 Form form, const RunOptions& options) {
  ExpSumReport report;
  report.form = form;
  report.size_a = a.size();
  report.size_b = b.size();

  const ValueHistogram hist = form_histogram(form, a, b, options);
  const std::vector<Complex> sums = hist.all_twisted_sums(options.threads);
  for (std::uint64_t lambda = 1; lambda < sums.size(); ++lambda) {
    const double magnitude = std::abs(sums[lambda]);
    if (magnitude > report.lhs) {
      report.lhs = magnitude;
      report.argmax_lambda = lambda;
    }
  }

  if (a.size() == 0 || b.size() == 0) {
    report.energy_a = 0;
    report.energy_b = 0;
    report.rhs_bound = 0.0;
    return report;
  }
  const bool lift = form == Form::kExtractor;
  const auto energy_a =
      reachable_energy(lift ? lifted(a.support()) : a.support(), options);
  const auto energy_b =
      reachable_energy(lift ? lifted(b.support()) : b.support(), options);
  if (energy_a && energy_b) {
    const int m = a.universe().dimension() + (lift ? 1 : 0);
    const double p = static_cast<double>(a.universe().modulus());
    report.energy_a = energy_a;
    report.energy_b = energy_b;
    report.rhs_bound =
        std::sqrt(static_cast<double>(a.size()) *
                  static_cast<double>(b.size())) *
        std::pow(p, m / 8.0) *
        std::pow(static_cast<double>(*energy_a) *
                     static_cast<double>(*energy_b),
                 1.0 / 8.0);
  }
  return report;
}

std::uint64_t additive_energy_brute(const std::vector<FieldVector>& set,
                                    const Limits& limits) {
  if (set.size() > limits.max_brute_energy_set) {
    throw Error(ErrorCode::kSetTooLarge,
                "|A| = " + std::to_string(set.size()) +
                    " exceeds brute-force cap " +
                    std::to_string(limits.max_brute_energy_set));
  }
  if (set.empty()) return 0;
  const SetShape shape = shape_of(set);
  const std::uint64_t p = shape.p;
  const std::size_t n = static_cast<std::size_t>(shape.n);
  const std::uint64_t universe = checked_power(p, shape.n);

  std::vector<std::uint64_t> coords;
  coords.reserve(set.size() * n);
  for (const FieldVector& x : set) {
    coords.insert(coords.end(), x.coords().begin(), x.coords().end());
  }
  auto sum_index = [&](std::size_t i, std::size_t j) {
    std::uint64_t idx = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t a = coords[i * n + k];
      const std::uint64_t b = coords[j * n + k];
      const std::uint64_t s = a >= p - b ? a - (p - b) : a + b;
      idx = idx * p + s;
    }
    return idx;
  };

  std::uint64_t energy = 0;
  if (universe != 0 && universe <= kDenseCountLimit) {
    std::vector<std::uint32_t> r(universe);
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = 0; j < set.size(); ++j) ++r[sum_index(i, j)];
    }
    for (std::uint32_t c : r) energy += static_cast<std::uint64_t>(c) * c;
  } else {
    // Indices overflow only if p^n does; fall back to hashing coordinates.
    std::unordered_map<std::uint64_t, std::uint32_t> r;
    std::unordered_map<std::string, std::uint32_t> r_wide;
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = 0; j < set.size(); ++j) {
        if (universe != 0) {
          ++r[sum_index(i, j)];
        } else {
          std::string key;
          for (std::size_t k = 0; k < n; ++k) {
            const std::uint64_t a = coords[i * n + k];
            const std::uint64_t b = coords[j * n + k];
            const std::uint64_t s = a >= p - b ? a - (p - b) : a + b;
            key.append(reinterpret_cast<const char*>(&s), sizeof(s));
          }
          ++r_wide[key];
        }
      }
    }
    for (const auto& [key, c] : r) energy += static_cast<std::uint64_t>(c) * c;
    for (const auto& [key, c] : r_wide) {
      energy += static_cast<std::uint64_t>(c) * c;
    }
  }
  return energy;
}

std::uint64_t additive_energy_spectral(const std::vector<FieldVector>& set,
                                       const RunOptions& options) {
  if (set.empty()) return 0;
  const SetShape shape = shape_of(set);
  const Universe universe(PrimeField(shape.p), shape.n, options.limits);
  if (universe.size() > options.limits.max_dense_universe) {
    throw Error(ErrorCode::kUniverseTooLarge,
                "spectral energy over " + std::to_string(universe.size()) +
                    " frequencies exceeds dense cap " +
                    std::to_string(options.limits.max_dense_universe));
  }
  std::vector<Complex> indicator(universe.size());
  for (const FieldVector& x : set) indicator[universe.index_of(x)] += 1.0;
  const std::vector<Complex> transform =
      dft(universe, std::move(indicator), +1, options.threads);
  long double fourth = 0;
  for (const Complex& z : transform) {
    const long double m2 = std::norm(z);
    fourth += m2 * m2;
  }
  const long double value = fourth / static_cast<long double>(universe.size());
  const long double rounded = std::round(value);
  if (std::abs(value - rounded) > 0.25L) {
    throw Error(ErrorCode::kRoundingUnstable,
                "spectral energy " + std::to_string(static_cast<double>(value)) +
                    " is not near an integer");
  }
  return static_cast<std::uint64_t>(rounded);
}

const char* energy_method_name(EnergyMethod method) {
  return method == EnergyMethod::kBrute ? "brute" : "spectral";
}

bool within_trivial_energy_bounds(std::size_t size, std::uint64_t energy) {
  const auto s = static_cast<unsigned __int128>(size);
  const unsigned __int128 lower = s == 0 ? 0 : 2 * s * s - s;
  return lower <= energy && energy <= s * s * s;
}

EnergyReport measure_energy(const std::vector<FieldVector>& set,
                            std::string descriptor,
                            const RunOptions& options) {
  EnergyReport report;
  report.descriptor = std::move(descriptor);
  report.size = set.size();
  if (set.size() <= options.limits.max_brute_energy_set) {
    report.method = EnergyMethod::kBrute;
    report.energy = additive_energy_brute(set, options.limits);
  } else {
    report.method = EnergyMethod::kSpectral;
    report.energy = additive_energy_spectral(set, options);
  }
  if (!within_trivial_energy_bounds(report.size, report.energy)) {
    throw Error(ErrorCode::kInvariantViolation,
                "energy " + std::to_string(report.energy) +
                    " outside trivial bounds for |A| = " +
                    std::to_string(report.size));
  }
  report.exponent =
      report.size <= 1
          ? std::numeric_limits<double>::quiet_NaN()
          : std::log(static_cast<double>(report.energy)) /
                std::log(static_cast<double>(report.size));
  return report;
}

bool ParsevalResult::holds(double relative_tolerance) const {
  return std::abs(lhs - rhs) <= relative_tolerance * std::max(rhs, 1.0);
}

ParsevalResult parseval_check(const Universe& universe,
                              const std::vector<Complex>& f_values,
                              const RunOptions& options) {
  if (universe.size() > options.limits.max_dense_universe) {
    throw Error(ErrorCode::kUniverseTooLarge,
                "Parseval check over " + std::to_string(universe.size()) +
                    " points exceeds dense cap");
  }
  long double energy = 0;
  for (const Complex& z : f_values) energy += std::norm(z);
  const std::vector<Complex> transform =
      dft(universe, f_values, +1, options.threads);
  long double lhs = 0;
  for (const Complex& z : transform) lhs += std::norm(z);
  return {static_cast<double>(lhs),
          static_cast<double>(static_cast<long double>(universe.size()) *
                              energy)};
}

BiasReport measure_bias(const ExtractorSpec& spec, const Source& x,
                        const Source& y, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  BiasReport report;
  report.p = spec.field().modulus();
  report.n = spec.dimension();
  report.admissible = spec.admissible();
  report.x_source = fingerprint(x);
  report.y_source = fingerprint(y);
  report.x_size = x.size();
  report.y_size = y.size();
  report.x_rate = min_entropy_rate(x);
  report.y_rate = min_entropy_rate(y);

  const BitDistribution dist =
      extractor_output_distribution(spec, x, y, options);
  report.p1 = dist.p1;
  report.sd = statistical_distance(dist);

  double scale_x = 1;
  double scale_y = 1;
  const WeightedSet wx = normalized_weights(x, &scale_x);
  const WeightedSet wy = normalized_weights(y, &scale_y);
  const ValueHistogram hist = value_histogram(spec, wx, wy, options);
  const std::vector<Complex> sums = hist.all_twisted_sums(options.threads);
  const double scale = scale_x * scale_y;

  const FourierCoefficients c = rho_fourier(spec.field(), options.limits);
  report.coefficient_sum = coefficient_sum(c);
  Complex expansion = 0;
  for (std::uint64_t lambda = 0; lambda < sums.size(); ++lambda) {
    const Complex s = scale * sums[lambda];
    expansion += c[lambda] * s;
    if (lambda == 0) continue;
    if (std::abs(s) > report.max_exp_sum) {
      report.max_exp_sum = std::abs(s);
      report.argmax_lambda = lambda;
    }
  }
  report.sd_fourier = std::abs(expansion) / 2;
  report.chain_bound = report.coefficient_sum * report.max_exp_sum;
  report.wall_time_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

}  // namespace extractorlab
