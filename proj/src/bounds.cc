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

#include "extractorlab/bounds.h"

#include <charconv>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <unordered_set>

#include "extractorlab/error.h"
#include "extractorlab/parallel.h"
#include "extractorlab/sources.h"

namespace extractorlab {
namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "not a rational number: '" + std::string(whole) + "'");
  }
  return v;
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

Rational parse_rational(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = parse_int(text.substr(0, slash), text);
    const std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 0) {
      throw Error(ErrorCode::kInvalidArgument, "zero denominator in '" +
                                                   std::string(text) + "'");
    }
    return Rational(num, den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 15) {
      throw Error(ErrorCode::kInvalidArgument,
                  "too many decimals in '" + std::string(text) + "'");
    }
    std::string digits(text.substr(0, dot));
    const bool negative = !digits.empty() && digits.front() == '-';
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    const std::int64_t whole = parse_int(digits, text);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::int64_t part = frac.empty() ? 0 : parse_int(frac, text);
    if (!frac.empty() && (frac.front() == '-' || frac.front() == '+')) {
      throw Error(ErrorCode::kInvalidArgument,
                  "not a rational number: '" + std::string(text) + "'");
    }
    return Rational(whole) + Rational(negative ? -part : part, den);
  }
  return Rational(parse_int(text, text));
}

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

void RateParams::validate() const {
  if (!(n > d && d >= 1)) {
    throw Error(ErrorCode::kInvalidExponent,
                "need n > d >= 1, got n = " + std::to_string(n) +
                    ", d = " + std::to_string(d));
  }
  if (alpha < Rational(2) || alpha >= Rational(3)) {
    throw Error(ErrorCode::kInvalidExponent,
                "energy exponent " + to_string(alpha) + " outside [2, 3)");
  }
  if (Rational(8) - 2 * alpha <= Rational(0)) {
    throw Error(ErrorCode::kInvalidExponent, "8 - 2 alpha must be positive");
  }
}

Rational rate_from_energy(const RateParams& params) {
  params.validate();
  return Rational(params.n) / (params.d * (Rational(8) - 2 * params.alpha));
}

std::optional<Rational> literal_display_rate(const RateParams& params) {
  const Rational denom = params.d * (Rational(8) - params.d * params.alpha);
  if (denom == Rational(0) || params.d == 0) return std::nullopt;
  return Rational(params.n) / denom;
}

Rational critical_exponent(const RateParams& params) {
  params.validate();
  return Rational(params.n) / (Rational(8) - 2 * params.alpha);
}

double critical_set_size(const RateParams& params, std::uint64_t p) {
  return std::pow(static_cast<double>(p),
                  boost::rational_cast<double>(critical_exponent(params)));
}

const char* scan_family_name(ScanFamily family) {
  switch (family) {
    case ScanFamily::kRandom:
      return "random";
    case ScanFamily::kCartesian:
      return "cartesian";
    case ScanFamily::kLineBiased:
      return "line-biased";
  }
  return "unknown";
}

ScanFamily parse_scan_family(std::string_view name) {
  if (name == "random") return ScanFamily::kRandom;
  if (name == "cartesian") return ScanFamily::kCartesian;
  if (name == "line-biased") return ScanFamily::kLineBiased;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown family '" + std::string(name) +
                  "' (random, cartesian, line-biased)");
}

std::vector<FieldVector> draw_paraboloid_subset(const PrimeField& f, int d,
                                                ScanFamily family,
                                                std::size_t size, Rng& rng,
                                                const Limits& limits) {
  if (d < 2) {
    throw Error(ErrorCode::kInvalidArgument, "paraboloid needs d >= 2");
  }
  const Universe base(f, d - 1, limits);
  if (size > base.size()) {
    throw Error(ErrorCode::kSetTooLarge,
                "P_" + std::to_string(d) + " has only " +
                    std::to_string(base.size()) + " points");
  }
  const std::uint64_t p = f.modulus();
  const auto m = static_cast<std::size_t>(d - 1);
  std::vector<FieldVector> out;
  out.reserve(size);

  switch (family) {
    case ScanFamily::kRandom: {
      for (std::uint64_t i : sample_distinct(rng, base.size(), size)) {
        out.push_back(paraboloid_lift(base.vector_at(i)));
      }
      break;
    }
    case ScanFamily::kCartesian: {
      // A translated box {o + j : j in [0, s)^{d-1}}, first `size` points.
      std::uint64_t side = 1;
      while (checked_power(side, d - 1) < size) ++side;
      std::vector<std::uint64_t> offset(m);
      for (auto& o : offset) o = uniform_below(rng, p);
      std::vector<std::uint64_t> j(m, 0);
      while (out.size() < size) {
        std::vector<std::uint64_t> coords(m);
        for (std::size_t k = 0; k < m; ++k) coords[k] = f.add(offset[k], j[k]);
        out.push_back(paraboloid_lift(FieldVector(std::move(coords), p)));
        for (std::size_t k = m; k-- > 0;) {
          if (++j[k] < side) break;
          j[k] = 0;
        }
      }
      break;
    }
    case ScanFamily::kLineBiased: {
      // Whole lines x0 + t v in the base. With v.v = 0 these lift to lines
      // lying on the paraboloid itself.
      std::optional<FieldVector> direction =
          find_isotropic_direction(f, d - 1, limits);
      if (!direction) {
        std::uint64_t idx = 0;
        while (idx == 0) idx = uniform_below(rng, base.size());
        direction = base.vector_at(idx);
      }
      std::unordered_set<std::uint64_t> seen;
      while (out.size() < size) {
        const FieldVector x0 = base.vector_at(uniform_below(rng, base.size()));
        for (std::uint64_t t = 0; t < p && out.size() < size; ++t) {
          std::vector<std::uint64_t> coords(m);
          for (std::size_t k = 0; k < m; ++k) {
            coords[k] = f.add(x0.coords()[k], f.mul(t, direction->coords()[k]));
          }
          FieldVector x(std::move(coords), p);
          if (seen.insert(base.index_of(x)).second) {
            out.push_back(paraboloid_lift(x));
          }
        }
      }
      break;
    }
  }
  return out;
}

ExponentScan scan_paraboloid_energies(const ScanConfig& config,
                                      const RunOptions& options) {
  const PrimeField f(config.p);
  if (config.d < 2) {
    throw Error(ErrorCode::kInvalidArgument, "scan needs d >= 2");
  }
  if (config.trials < 1) {
    throw Error(ErrorCode::kInvalidArgument, "scan needs at least one trial");
  }
  ExponentScan scan;
  if (config.d == 3 && config.family == ScanFamily::kRandom &&
      minus_one_is_square(f)) {
    if (!config.allow_inadmissible) {
      throw Error(ErrorCode::kInadmissibleField,
                  "-1 is a square mod " + std::to_string(config.p) +
                      "; the P_3 energy estimate does not apply");
    }
    scan.inadmissible_field = true;
  }
  for (std::size_t size : config.sizes) {
    if (size > options.limits.max_brute_energy_set) {
      const std::uint64_t universe = checked_power(config.p, config.d);
      if (universe == 0 || universe > options.limits.max_dense_universe) {
        throw Error(ErrorCode::kSetTooLarge,
                    "size " + std::to_string(size) +
                        " is beyond both energy methods");
      }
    }
  }

  const auto trials = static_cast<std::size_t>(config.trials);
  const std::size_t jobs = config.sizes.size() * trials;
  scan.rows.resize(jobs);
  RunOptions inner = options;
  inner.threads = 1;
  parallel_for(jobs, options.threads, [&](std::size_t job) {
    const std::size_t size = config.sizes[job / trials];
    const std::uint64_t seed = derive_seed(config.seed, job);
    Rng rng(seed);
    const auto set =
        draw_paraboloid_subset(f, config.d, config.family, size, rng,
                               options.limits);
    const EnergyReport energy = measure_energy(set, "", inner);
    ScanRow& row = scan.rows[job];
    row.p = config.p;
    row.d = config.d;
    row.family = config.family;
    row.size = size;
    row.trial = static_cast<int>(job % trials);
    row.energy = energy.energy;
    row.fitted_exponent = energy.exponent;
    row.seed = seed;
    row.method = energy.method;
  });

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t count = 0;
  std::set<std::size_t> distinct_sizes;
  scan.max_exponent = kNaN;
  for (const ScanRow& row : scan.rows) {
    if (row.size <= 1) continue;
    const double x = std::log(static_cast<double>(row.size));
    const double y = std::log(static_cast<double>(row.energy));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
    distinct_sizes.insert(row.size);
    if (std::isnan(scan.max_exponent) || row.fitted_exponent > scan.max_exponent) {
      scan.max_exponent = row.fitted_exponent;
    }
  }
  if (distinct_sizes.size() >= 2) {
    const double c = static_cast<double>(count);
    scan.slope = (c * sxy - sx * sy) / (c * sxx - sx * sx);
  } else {
    scan.slope = kNaN;
  }
  return scan;
}

}  // namespace extractorlab
