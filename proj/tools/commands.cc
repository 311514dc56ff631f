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

#include "commands.h"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "extractorlab/analysis.h"
#include "extractorlab/bounds.h"
#include "extractorlab/error.h"
#include "extractorlab/extractor.h"
#include "extractorlab/field.h"
#include "extractorlab/io.h"
#include "extractorlab/signal.h"
#include "extractorlab/sources.h"

namespace extractorlab::cli {
namespace {

// Cap on p for which fourier reconstructs rho pointwise (quadratic cost).
constexpr std::uint64_t kReconstructLimit = 4096;

struct Common {
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  std::uint64_t cap_pairs = std::uint64_t{1} << 31;
  bool verbose = false;
  std::string config_path;

  RunOptions run_options() const {
    RunOptions options;
    options.threads = threads == 0 ? 1 : threads;
    options.limits.max_pairs = cap_pairs;
    return options;
  }
};

struct ExtractArgs {
  std::uint64_t p = 0;
  int n = 2;
  std::vector<std::int64_t> x, y;
};

struct FixtureArgs {
  std::string kind = "uniform";
  std::uint64_t p = 0;
  int n = 2;
  std::size_t size = 1;
  std::vector<std::int64_t> point;
};

struct BiasArgs {
  std::vector<std::string> fixtures;
  std::string source;
  std::vector<std::uint64_t> primes;
  int n = 2;
};

struct EnergyArgs {
  std::string fixture;
  std::uint64_t p = 0;
  int d = 3;
  std::string family;
  std::size_t size = 0;
  bool paraboloid = false;
};

struct ScanArgs {
  std::uint64_t p = 0;
  int d = 4;
  std::string family = "random";
  std::vector<std::size_t> sizes;
  int trials = 1;
  bool allow_inadmissible = false;
};

struct RateArgs {
  int n = 0;
  int d = 0;
  std::string alpha;
  std::uint64_t p = 0;
};

struct FourierArgs {
  std::vector<std::uint64_t> primes;
};

struct CheckLemmaArgs {
  int trials = 1000;
  std::vector<std::uint64_t> primes;
  int nmax = 2;
  std::size_t max_size = 64;
  std::string form = "bilinear";
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("EXTRACTORLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("EXTRACTORLAB_SEED is not an integer: ") + env);
    }
  }
  return 0;
}

// Expands --config file.json into flags placed right after the subcommand.
// Explicit flags come later on the command line and therefore win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  for (std::size_t i = 1; i + 1 < args.size(); ++i) {
    if (args[i] != "--config") continue;
    const std::string path = args[i + 1];
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
    Json config;
    try {
      config = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::kInvalidArgument, path + ": " + e.what());
    }
    if (!config.is_object()) {
      throw Error(ErrorCode::kInvalidArgument, path + ": expected an object");
    }
    std::vector<std::string> injected;
    for (const auto& [key, value] : config.items()) {
      const std::string flag = "--" + key;
      if (value.is_boolean()) {
        if (value.get<bool>()) injected.push_back(flag);
      } else if (value.is_array()) {
        for (const Json& v : value) {
          injected.push_back(flag);
          injected.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        }
      } else {
        injected.push_back(flag);
        injected.push_back(value.is_string() ? value.get<std::string>()
                                             : value.dump());
      }
    }
    args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
               args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    const std::size_t at = args.size() > 1 ? 2 : args.size();
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(at),
                injected.begin(), injected.end());
    break;
  }
  return args;
}

Json envelope(const std::string& command, const Json& config,
              std::uint64_t seed, Json reports) {
  Json j;
  j["artifact"] = "extractorlab";
  j["version"] = std::string(kVersion);
  j["command"] = command;
  j["config_hash"] = fingerprint(config);
  j["seed"] = seed;
  j["config"] = config;
  j["reports"] = std::move(reports);
  return j;
}

std::string csv_preamble(const Json& config, std::uint64_t seed) {
  return "# extractorlab " + std::string(kVersion) +
         " config_hash=" + fingerprint(config) +
         " seed=" + std::to_string(seed) + "\n";
}

void emit(const Common& common, const std::string& text, std::ostream& out) {
  if (common.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(common.out, std::ios::binary);
  if (!file) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write " + common.out);
  }
  file << text;
}

void require_format(const Common& common, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (common.format == f) return;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unsupported --format '" + common.format + "'");
}

FieldVector parse_vector(const PrimeField& f, int n,
                         const std::vector<std::int64_t>& coords,
                         const char* name) {
  if (static_cast<int>(coords.size()) != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(name) + " has " + std::to_string(coords.size()) +
                    " coordinates, expected " + std::to_string(n));
  }
  return f.vector(coords);
}

void warn_inadmissible(const ExtractorSpec& spec, std::ostream& err) {
  if (spec.admissible()) return;
  if (spec.dimension() == 2) {
    err << "warning: -1 is a square mod " << spec.field().modulus() << '\n';
  } else {
    err << "warning: no extraction guarantee for n = " << spec.dimension()
        << '\n';
  }
}

int cmd_extract(const ExtractArgs& a, const Common& common, std::ostream& out,
                std::ostream& err) {
  const PrimeField f = make_field(a.p);
  const ExtractorSpec spec(f, a.n);
  const FieldVector x = parse_vector(f, a.n, a.x, "--x");
  const FieldVector y = parse_vector(f, a.n, a.y, "--y");
  warn_inadmissible(spec, err);
  const int bit = extract(spec, x, y);
  std::ostringstream text;
  text << bit << '\n';
  if (common.verbose) {
    const FieldElement value = inner_form(x, y);
    const UnitFraction s = sigma(value);
    text << "f = " << value.value() << '\n'
         << "sigma = " << s.numerator << '/' << s.denominator << '\n';
  }
  emit(common, text.str(), out);
  return kExitOk;
}

Source builtin_source(const std::string& name, const PrimeField& f, int n,
                      std::uint64_t seed, std::size_t size) {
  const Universe universe(f, n);
  if (name == "uniform") return uniform_source(universe);
  if (name == "line") return adversarial_line_source(f, n);
  if (name == "point") {
    return point_source(universe, universe.vector_at(0));
  }
  if (name == "random-flat" || name == "random-general") {
    Rng rng(seed);
    Source s = name == "random-flat"
                   ? random_flat_source(universe, size, rng)
                   : random_general_source(universe, size, rng);
    return s.with_seed(seed);
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown source '" + name +
                  "' (uniform, line, point, random-flat, random-general)");
}

int cmd_fixture(const FixtureArgs& a, const Common& common, std::ostream& out) {
  const PrimeField f = make_field(a.p);
  Source s = [&] {
    if (a.kind == "point" && !a.point.empty()) {
      return point_source(Universe(f, a.n), parse_vector(f, a.n, a.point, "--x"));
    }
    return builtin_source(a.kind, f, a.n, common.seed, a.size);
  }();
  emit(common, source_to_json(s).dump(2) + "\n", out);
  return kExitOk;
}

int cmd_bias(const BiasArgs& a, const Common& common, std::ostream& out,
             std::ostream& err) {
  require_format(common, {"json", "csv"});
  const RunOptions options = common.run_options();
  std::vector<std::pair<Source, Source>> pairs;
  Json config;
  config["command"] = "bias";
  if (!a.fixtures.empty()) {
    if (a.fixtures.size() > 2) {
      throw Error(ErrorCode::kInvalidArgument, "bias takes one or two fixtures");
    }
    Source x = load_source(a.fixtures.front(), options.limits);
    Source y = a.fixtures.size() == 2 ? load_source(a.fixtures[1], options.limits)
                                      : x;
    config["x"] = fingerprint(x);
    config["y"] = fingerprint(y);
    pairs.emplace_back(std::move(x), std::move(y));
  } else {
    if (a.source.empty() || a.primes.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bias needs --fixture, or --source with --p");
    }
    config["source"] = a.source;
    config["p"] = a.primes;
    config["n"] = a.n;
    for (std::uint64_t p : a.primes) {
      const PrimeField f = make_field(p);
      Source s = builtin_source(a.source, f, a.n, common.seed, 1);
      pairs.emplace_back(s, s);
    }
  }
  config["cap_pairs"] = common.cap_pairs;

  int status = kExitOk;
  Json reports = Json::array();
  std::string csv;
  for (const auto& [x, y] : pairs) {
    const ExtractorSpec spec(x.universe().field(), x.universe().dimension());
    warn_inadmissible(spec, err);
    const BiasReport report = measure_bias(spec, x, y, options);
    if (!report.chain_holds()) {
      err << "violation: sd " << report.sd << " exceeds chain bound "
          << report.chain_bound << " at p = " << report.p << '\n';
      status = kExitInvariant;
    }
    if (std::abs(report.sd - report.sd_fourier) > 1e-6) {
      err << "violation: Fourier expansion gives sd " << report.sd_fourier
          << ", direct count gives " << report.sd << '\n';
      status = kExitInvariant;
    }
    reports.push_back(to_json(report));
    for (const MeasurementRow& row : measurement_rows(report, common.seed)) {
      csv += to_csv_line(row) + "\n";
    }
  }
  if (common.format == "csv") {
    emit(common,
         csv_preamble(config, common.seed) + std::string(kMeasurementCsvHeader) +
             "\n" + csv,
         out);
  } else {
    emit(common,
         envelope("bias", config, common.seed, std::move(reports)).dump(2) +
             "\n",
         out);
  }
  return status;
}

int cmd_energy(const EnergyArgs& a, const Common& common, std::ostream& out) {
  require_format(common, {"json"});
  const RunOptions options = common.run_options();
  std::vector<FieldVector> set;
  std::string descriptor;
  Json config;
  config["command"] = "energy";
  if (!a.fixture.empty()) {
    const Source s = load_source(a.fixture, options.limits);
    set = s.support();
    descriptor = "fixture:" + fingerprint(s);
    config["fixture"] = fingerprint(s);
  } else if (a.p != 0 && a.paraboloid) {
    set = paraboloid_points(make_field(a.p), a.d, options.limits);
    descriptor = "P_" + std::to_string(a.d) + " over F_" + std::to_string(a.p);
    config["p"] = a.p;
    config["d"] = a.d;
    config["paraboloid"] = true;
  } else if (a.p != 0 && !a.family.empty()) {
    Rng rng(common.seed);
    set = draw_paraboloid_subset(make_field(a.p), a.d,
                                 parse_scan_family(a.family), a.size, rng,
                                 options.limits);
    descriptor = a.family + " subset of P_" + std::to_string(a.d) +
                 " over F_" + std::to_string(a.p);
    config["p"] = a.p;
    config["d"] = a.d;
    config["family"] = a.family;
    config["size"] = a.size;
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "energy needs --fixture, --p with --paraboloid, or --p with "
                "--family and --size");
  }

  Json reports = Json::array();
  std::optional<std::uint64_t> brute, spectral;
  if (set.size() <= options.limits.max_brute_energy_set) {
    brute = additive_energy_brute(set, options.limits);
  }
  const std::uint64_t universe =
      set.empty() ? 0
                  : checked_power(set.front().modulus(),
                                  set.front().dimension());
  if (universe != 0 && universe <= options.limits.max_dense_universe) {
    spectral = additive_energy_spectral(set, options);
  }
  if (!brute && !spectral) {
    throw Error(ErrorCode::kSetTooLarge, "set is beyond both energy methods");
  }
  auto add = [&](EnergyMethod method, std::uint64_t energy) {
    EnergyReport r;
    r.descriptor = descriptor;
    r.size = set.size();
    r.energy = energy;
    r.method = method;
    r.exponent = set.size() <= 1
                     ? std::numeric_limits<double>::quiet_NaN()
                     : std::log(static_cast<double>(energy)) /
                           std::log(static_cast<double>(set.size()));
    reports.push_back(to_json(r));
  };
  if (brute) add(EnergyMethod::kBrute, *brute);
  if (spectral) add(EnergyMethod::kSpectral, *spectral);
  emit(common,
       envelope("energy", config, common.seed, reports).dump(2) + "\n", out);

  const std::uint64_t energy = brute ? *brute : *spectral;
  if (brute && spectral && *brute != *spectral) return kExitInvariant;
  if (!within_trivial_energy_bounds(set.size(), energy)) return kExitInvariant;
  return kExitOk;
}

int cmd_scan(const ScanArgs& a, const Common& common, std::ostream& out,
             std::ostream& err) {
  require_format(common, {"json", "csv"});
  ScanConfig config;
  config.p = a.p;
  config.d = a.d;
  config.family = parse_scan_family(a.family);
  config.sizes = a.sizes;
  config.trials = a.trials;
  config.seed = common.seed;
  config.allow_inadmissible = a.allow_inadmissible;
  if (config.sizes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "scan needs --sizes");
  }
  const ExponentScan scan =
      scan_paraboloid_energies(config, common.run_options());
  if (scan.inadmissible_field) {
    err << "warning: -1 is a square mod " << a.p
        << "; scanning outside the estimate's hypothesis\n";
  }
  Json cfg;
  cfg["command"] = "scan";
  cfg["p"] = a.p;
  cfg["d"] = a.d;
  cfg["family"] = a.family;
  cfg["sizes"] = a.sizes;
  cfg["trials"] = a.trials;
  cfg["allow_inadmissible"] = a.allow_inadmissible;
  if (common.format == "csv") {
    emit(common, csv_preamble(cfg, common.seed) + scan_to_csv(scan), out);
  } else {
    Json reports = Json::array();
    reports.push_back(to_json(scan));
    emit(common,
         envelope("scan", cfg, common.seed, std::move(reports)).dump(2) + "\n",
         out);
  }
  for (const ScanRow& row : scan.rows) {
    if (!within_trivial_energy_bounds(row.size, row.energy)) {
      return kExitInvariant;
    }
  }
  return kExitOk;
}

int cmd_rate(const RateArgs& a, const Common& common, std::ostream& out) {
  require_format(common, {"json", "text"});
  RateParams params{a.n, a.d, parse_rational(a.alpha)};
  const Rational rate = rate_from_energy(params);
  if (common.format == "json") {
    Json r;
    r["report"] = "rate";
    r["n"] = a.n;
    r["d"] = a.d;
    r["alpha"] = to_string(params.alpha);
    r["rate"] = to_string(rate);
    r["rate_value"] = boost::rational_cast<double>(rate);
    r["critical_exponent"] = to_string(critical_exponent(params));
    const auto literal = literal_display_rate(params);
    r["literal_display_rate"] = literal ? Json(to_string(*literal)) : Json(nullptr);
    if (a.p != 0) r["critical_set_size"] = critical_set_size(params, a.p);
    Json cfg;
    cfg["command"] = "rate";
    cfg["n"] = a.n;
    cfg["d"] = a.d;
    cfg["alpha"] = to_string(params.alpha);
    Json reports = Json::array();
    reports.push_back(std::move(r));
    emit(common,
         envelope("rate", cfg, common.seed, std::move(reports)).dump(2) + "\n",
         out);
    return kExitOk;
  }
  std::ostringstream text;
  text << to_string(rate) << '\n';
  if (common.verbose) {
    text << "critical exponent n/(8-2 alpha) = "
         << to_string(critical_exponent(params)) << '\n';
    if (const auto literal = literal_display_rate(params)) {
      text << "n/(d(8-d alpha)) = " << to_string(*literal) << '\n';
    }
    if (a.p != 0) {
      text << "critical set size at p = " << a.p << ": "
           << format_number(critical_set_size(params, a.p)) << '\n';
    }
  }
  emit(common, text.str(), out);
  return kExitOk;
}

int cmd_fourier(const FourierArgs& a, const Common& common, std::ostream& out) {
  require_format(common, {"json"});
  if (a.primes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "fourier needs --p");
  }
  const RunOptions options = common.run_options();
  int status = kExitOk;
  Json reports = Json::array();
  for (std::uint64_t p : a.primes) {
    const PrimeField f = make_field(p);
    const FourierCoefficients c = rho_fourier(f, options.limits);
    const double sum = coefficient_sum(c);
    double l2 = 0;
    for (const Complex& z : c.coeffs()) l2 += std::norm(z);
    Json r;
    r["report"] = "fourier";
    r["p"] = p;
    r["coefficient_sum"] = sum;
    r["ratio_to_log_p"] = sum / std::log(static_cast<double>(p));
    r["c0"] = c[0].real();
    r["parseval_sum_sq"] = l2;
    if (std::abs(l2 - 1.0) > 1e-9) {
      status = kExitInvariant;
    }
    if (p <= kReconstructLimit) {
      const RhoTable rho(f);
      double worst = 0;
      for (std::uint64_t x = 0; x < p; ++x) {
        worst = std::max(worst,
                         std::abs(c.reconstruct(x) - Complex(rho.sign(x))));
      }
      r["max_reconstruction_error"] = worst;
      if (worst > 1e-6) status = kExitInvariant;
    } else {
      r["max_reconstruction_error"] = nullptr;
    }
    reports.push_back(std::move(r));
  }
  Json cfg;
  cfg["command"] = "fourier";
  cfg["p"] = a.primes;
  emit(common,
       envelope("fourier", cfg, common.seed, std::move(reports)).dump(2) + "\n",
       out);
  return status;
}

int cmd_checklemma(const CheckLemmaArgs& a, const Common& common,
                   std::ostream& out, std::ostream& err) {
  require_format(common, {"json"});
  if (a.primes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "checklemma needs --p");
  }
  if (a.trials < 1 || a.nmax < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need --trials >= 1, --nmax >= 1");
  }
  std::vector<Form> forms;
  if (a.form == "bilinear" || a.form == "both") forms.push_back(Form::kBilinear);
  if (a.form == "extractor" || a.form == "both") forms.push_back(Form::kExtractor);
  if (forms.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "--form is bilinear, extractor or both");
  }
  const RunOptions options = common.run_options();
  int status = kExitOk;
  Json reports = Json::array();
  std::uint64_t stream = 0;
  for (std::uint64_t p : a.primes) {
    const PrimeField f = make_field(p);
    for (int n = 1; n <= a.nmax; ++n) {
      const Universe universe(f, n, options.limits);
      const std::size_t max_size = static_cast<std::size_t>(
          std::min<std::uint64_t>(a.max_size, universe.size()));
      for (Form form : forms) {
        for (bool disc : {false, true}) {
          Rng rng(derive_seed(common.seed, stream++));
          int violations = 0;
          double worst_ratio = 0;
          for (int t = 0; t < a.trials; ++t) {
            const std::size_t sa = 1 + uniform_below(rng, max_size);
            const std::size_t sb = 1 + uniform_below(rng, max_size);
            const WeightedSet wa = random_weighted_set(universe, sa, disc, rng);
            const WeightedSet wb = random_weighted_set(universe, sb, disc, rng);
            const ExpSumReport r = max_exponential_sum(wa, wb, form, options);
            if (!r.rhs_bound) continue;
            worst_ratio = std::max(worst_ratio, r.lhs / *r.rhs_bound);
            if (!r.bound_holds()) ++violations;
          }
          Json row;
          row["report"] = "lemma_check";
          row["p"] = p;
          row["n"] = n;
          row["form"] = form_name(form);
          row["weights"] = disc ? "unit-disc" : "indicator";
          row["trials"] = a.trials;
          row["violations"] = violations;
          row["max_ratio"] = worst_ratio;
          reports.push_back(std::move(row));
          if (violations > 0) {
            err << "violation: " << violations << " instance(s) exceed the bound"
                << " at p = " << p << ", n = " << n << '\n';
            status = kExitInvariant;
          }
        }
      }
    }
  }
  Json cfg;
  cfg["command"] = "checklemma";
  cfg["p"] = a.primes;
  cfg["nmax"] = a.nmax;
  cfg["trials"] = a.trials;
  cfg["max_size"] = a.max_size;
  cfg["form"] = a.form;
  emit(common,
       envelope("checklemma", cfg, common.seed, std::move(reports)).dump(2) +
           "\n",
       out);
  return status;
}

int exit_code_for(const Error& e) {
  if (e.is_cap_violation()) return kExitCap;
  if (e.code() == ErrorCode::kInvariantViolation ||
      e.code() == ErrorCode::kRoundingUnstable) {
    return kExitInvariant;
  }
  return kExitBadInput;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out,
        std::ostream& err) {
  Common common;
  ExtractArgs extract_args;
  FixtureArgs fixture_args;
  BiasArgs bias_args;
  EnergyArgs energy_args;
  ScanArgs scan_args;
  RateArgs rate_args;
  FourierArgs fourier_args;
  CheckLemmaArgs lemma_args;

  CLI::App app{"Two-source extractors over prime fields and their analysis"};
  app.name("extractorlab");
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", common.threads, "Worker threads");
    sub->add_option("--seed", common.seed,
                    "Master seed (default: $EXTRACTORLAB_SEED or 0)");
    sub->add_option("--out", common.out, "Write the report here");
    sub->add_option("--format", common.format, "json, csv or text");
    sub->add_option("--cap-pairs", common.cap_pairs, "Pair-count cap");
    sub->add_flag("--verbose", common.verbose);
  };

  auto* extract_cmd = app.add_subcommand("extract", "Evaluate the extractor");
  extract_cmd->add_option("--p", extract_args.p)->required();
  extract_cmd->add_option("--n", extract_args.n);
  extract_cmd->add_option("--x", extract_args.x)->delimiter(',')->required()
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  extract_cmd->add_option("--y", extract_args.y)->delimiter(',')->required()
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  add_common(extract_cmd);

  auto* fixture_cmd = app.add_subcommand("fixture", "Write a source fixture");
  fixture_cmd->add_option("--kind", fixture_args.kind,
                          "uniform, line, point, random-flat, random-general");
  fixture_cmd->add_option("--p", fixture_args.p)->required();
  fixture_cmd->add_option("--n", fixture_args.n);
  fixture_cmd->add_option("--size", fixture_args.size);
  fixture_cmd->add_option("--x", fixture_args.point)->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  add_common(fixture_cmd);

  auto* bias_cmd = app.add_subcommand("bias", "Measure extractor bias");
  bias_cmd->add_option("--fixture", bias_args.fixtures)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  bias_cmd->add_option("--source", bias_args.source,
                       "Built-in source for X = Y: uniform, line, point");
  bias_cmd->add_option("--p", bias_args.primes)->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  bias_cmd->add_option("--n", bias_args.n);
  add_common(bias_cmd);

  auto* energy_cmd = app.add_subcommand("energy", "Additive energy of a set");
  energy_cmd->add_option("--fixture", energy_args.fixture);
  energy_cmd->add_option("--p", energy_args.p);
  energy_cmd->add_option("--d", energy_args.d);
  energy_cmd->add_flag("--paraboloid", energy_args.paraboloid,
                       "Use the whole paraboloid P_d");
  energy_cmd->add_option("--family", energy_args.family);
  energy_cmd->add_option("--size", energy_args.size);
  add_common(energy_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "Paraboloid energy exponents");
  scan_cmd->add_option("--p", scan_args.p)->required();
  scan_cmd->add_option("--d", scan_args.d);
  scan_cmd->add_option("--family", scan_args.family);
  scan_cmd->add_option("--sizes", scan_args.sizes)->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  scan_cmd->add_option("--trials", scan_args.trials);
  scan_cmd->add_flag("--allow-inadmissible", scan_args.allow_inadmissible);
  add_common(scan_cmd);

  auto* rate_cmd = app.add_subcommand("rate", "Min-entropy rate from an energy exponent");
  rate_cmd->add_option("--n", rate_args.n)->required();
  rate_cmd->add_option("--d", rate_args.d)->required();
  rate_cmd->add_option("--alpha", rate_args.alpha)->required();
  rate_cmd->add_option("--p", rate_args.p, "Also report the critical set size");
  add_common(rate_cmd);

  auto* fourier_cmd = app.add_subcommand("fourier", "Fourier coefficients of rho");
  fourier_cmd->add_option("--p", fourier_args.primes)->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  add_common(fourier_cmd);

  auto* lemma_cmd = app.add_subcommand("checklemma",
                                       "Check the exponential-sum energy bound");
  lemma_cmd->add_option("--trials", lemma_args.trials);
  lemma_cmd->add_option("--p", lemma_args.primes)->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  lemma_cmd->add_option("--nmax", lemma_args.nmax);
  lemma_cmd->add_option("--max-size", lemma_args.max_size);
  lemma_cmd->add_option("--form", lemma_args.form);
  add_common(lemma_cmd);

  try {
    common.seed = default_seed();
    std::vector<std::string> args = expand_config(raw_args);
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitBadInput;
    }
    if (rate_cmd->parsed() && common.format == "json" &&
        rate_cmd->count("--format") == 0) {
      common.format = "text";
    }
    if (extract_cmd->parsed()) return cmd_extract(extract_args, common, out, err);
    if (fixture_cmd->parsed()) return cmd_fixture(fixture_args, common, out);
    if (bias_cmd->parsed()) return cmd_bias(bias_args, common, out, err);
    if (energy_cmd->parsed()) return cmd_energy(energy_args, common, out);
    if (scan_cmd->parsed()) return cmd_scan(scan_args, common, out, err);
    if (rate_cmd->parsed()) return cmd_rate(rate_args, common, out);
    if (fourier_cmd->parsed()) return cmd_fourier(fourier_args, common, out);
    if (lemma_cmd->parsed()) return cmd_checklemma(lemma_args, common, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace extractorlab::cli
