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

#include "extractorlab/io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <utility>

#include "extractorlab/error.h"

namespace extractorlab {
namespace {

Json number_or_null(double v) {
  return std::isfinite(v) ? Json(v) : Json(nullptr);
}

using TypeCheck = std::function<bool(const Json&)>;

const TypeCheck kInteger = [](const Json& j) {
  return j.is_number_integer();
};
const TypeCheck kNumber = [](const Json& j) { return j.is_number(); };
const TypeCheck kNumberOrNull = [](const Json& j) {
  return j.is_number() || j.is_null();
};
const TypeCheck kIntegerOrNull = [](const Json& j) {
  return j.is_number_integer() || j.is_null();
};
const TypeCheck kString = [](const Json& j) { return j.is_string(); };
const TypeCheck kBool = [](const Json& j) { return j.is_boolean(); };
const TypeCheck kArray = [](const Json& j) { return j.is_array(); };
const TypeCheck kObject = [](const Json& j) { return j.is_object(); };

using Schema = std::vector<std::pair<std::string, TypeCheck>>;

void check_fields(const Json& j, const Schema& schema, const std::string& where,
                  std::vector<std::string>& problems) {
  if (!j.is_object()) {
    problems.push_back(where + ": not an object");
    return;
  }
  for (const auto& [key, check] : schema) {
    if (!j.contains(key)) {
      problems.push_back(where + ": missing '" + key + "'");
    } else if (!check(j.at(key))) {
      problems.push_back(where + ": wrong type for '" + key + "'");
    }
  }
}

const Schema& bias_schema() {
  static const Schema schema = {
      {"report", kString},         {"p", kInteger},
      {"n", kInteger},             {"admissible", kBool},
      {"x_source", kString},       {"y_source", kString},
      {"x_size", kInteger},        {"y_size", kInteger},
      {"x_rate", kNumber},         {"y_rate", kNumber},
      {"p1", kNumber},             {"sd", kNumber},
      {"sd_fourier", kNumber},     {"max_exp_sum", kNumber},
      {"argmax_lambda", kInteger}, {"coefficient_sum", kNumber},
      {"chain_bound", kNumber},    {"wall_time_ms", kNumber}};
  return schema;
}

const Schema& exp_sum_schema() {
  static const Schema schema = {
      {"report", kString},       {"form", kString},
      {"lhs", kNumber},          {"argmax_lambda", kInteger},
      {"rhs_bound", kNumberOrNull}, {"energy_a", kIntegerOrNull},
      {"energy_b", kIntegerOrNull}, {"size_a", kInteger},
      {"size_b", kInteger}};
  return schema;
}

const Schema& energy_schema() {
  static const Schema schema = {
      {"report", kString}, {"descriptor", kString}, {"size", kInteger},
      {"energy", kInteger}, {"exponent", kNumberOrNull}, {"method", kString}};
  return schema;
}

const Schema& scan_row_schema() {
  static const Schema schema = {
      {"p", kInteger},      {"d", kInteger},
      {"family", kString},  {"size", kInteger},
      {"trial", kInteger},  {"energy", kInteger},
      {"fitted_exponent", kNumberOrNull}, {"seed", kInteger},
      {"method", kString}};
  return schema;
}

const Schema& scan_schema() {
  static const Schema schema = {{"report", kString},
                                {"rows", kArray},
                                {"slope", kNumberOrNull},
                                {"max_exponent", kNumberOrNull},
                                {"inadmissible_field", kBool}};
  return schema;
}

const Schema& source_schema() {
  static const Schema schema = {{"p", kInteger},
                                {"n", kInteger},
                                {"kind", kString},
                                {"support", kArray}};
  return schema;
}

const Schema& envelope_schema() {
  static const Schema schema = {{"artifact", kString}, {"version", kString},
                                {"command", kString},  {"config_hash", kString},
                                {"seed", kInteger},    {"config", kObject},
                                {"reports", kArray}};
  return schema;
}

}  // namespace

Json source_to_json(const Source& s) {
  Json j;
  j["p"] = s.universe().modulus();
  j["n"] = s.universe().dimension();
  j["kind"] = source_kind_name(s.kind());
  Json support = Json::array();
  for (const FieldVector& x : s.support()) support.push_back(x.coords());
  j["support"] = std::move(support);
  if (s.kind() == SourceKind::kGeneral) j["weights"] = s.weights();
  if (s.seed()) j["seed"] = *s.seed();
  return j;
}

Source source_from_json(const Json& j, const Limits& limits) {
  std::vector<std::string> problems;
  check_fields(j, source_schema(), "source", problems);
  if (!problems.empty()) {
    throw Error(ErrorCode::kInvalidArgument, problems.front());
  }
  const PrimeField field(j.at("p").get<std::uint64_t>());
  const Universe universe(field, j.at("n").get<int>(), limits);
  std::vector<FieldVector> support;
  for (const Json& point : j.at("support")) {
    if (!point.is_array()) {
      throw Error(ErrorCode::kInvalidArgument, "support point is not a list");
    }
    std::vector<std::int64_t> coords;
    for (const Json& c : point) {
      if (!c.is_number_integer()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "support coordinate is not an integer");
      }
      const auto v = c.get<std::int64_t>();
      if (v < 0 || static_cast<std::uint64_t>(v) >= field.modulus()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "support coordinate " + std::to_string(v) +
                        " is not reduced mod " + std::to_string(field.modulus()));
      }
      coords.push_back(v);
    }
    if (static_cast<int>(coords.size()) != universe.dimension()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "support point of dimension " +
                      std::to_string(coords.size()) + " in F^" +
                      std::to_string(universe.dimension()));
    }
    support.push_back(field.vector(coords));
  }
  const std::string kind = j.at("kind").get<std::string>();
  Source s = [&] {
    if (kind == "flat") return Source::flat(universe, std::move(support));
    if (kind == "general") {
      if (!j.contains("weights") || !j.at("weights").is_array()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "general source without weights");
      }
      return Source::general(universe, std::move(support),
                             j.at("weights").get<std::vector<double>>());
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown source kind '" + kind + "'");
  }();
  if (j.contains("seed") && j.at("seed").is_number_integer()) {
    s = s.with_seed(j.at("seed").get<std::uint64_t>());
  }
  return s;
}

Source load_source(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument, "cannot open fixture " + path);
  }
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kInvalidArgument,
                "fixture " + path + ": " + e.what());
  }
  return source_from_json(j, limits);
}

void save_source(const Source& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  }
  out << source_to_json(s).dump(2) << '\n';
}

std::string fingerprint(const Json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string fingerprint(const Source& s) {
  return fingerprint(source_to_json(s));
}

Json to_json(const BiasReport& r) {
  Json j;
  j["report"] = "bias";
  j["p"] = r.p;
  j["n"] = r.n;
  j["admissible"] = r.admissible;
  j["x_source"] = r.x_source;
  j["y_source"] = r.y_source;
  j["x_size"] = r.x_size;
  j["y_size"] = r.y_size;
  j["x_rate"] = r.x_rate;
  j["y_rate"] = r.y_rate;
  j["p1"] = r.p1;
  j["sd"] = r.sd;
  j["sd_fourier"] = r.sd_fourier;
  j["max_exp_sum"] = r.max_exp_sum;
  j["argmax_lambda"] = r.argmax_lambda;
  j["coefficient_sum"] = r.coefficient_sum;
  j["chain_bound"] = r.chain_bound;
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

Json to_json(const ExpSumReport& r) {
  Json j;
  j["report"] = "exp_sum";
  j["form"] = form_name(r.form);
  j["lhs"] = r.lhs;
  j["argmax_lambda"] = r.argmax_lambda;
  j["rhs_bound"] = r.rhs_bound ? Json(*r.rhs_bound) : Json(nullptr);
  j["energy_a"] = r.energy_a ? Json(*r.energy_a) : Json(nullptr);
  j["energy_b"] = r.energy_b ? Json(*r.energy_b) : Json(nullptr);
  j["size_a"] = r.size_a;
  j["size_b"] = r.size_b;
  return j;
}

Json to_json(const EnergyReport& r) {
  Json j;
  j["report"] = "energy";
  j["descriptor"] = r.descriptor;
  j["size"] = r.size;
  j["energy"] = r.energy;
  j["exponent"] = number_or_null(r.exponent);
  j["method"] = energy_method_name(r.method);
  return j;
}

Json to_json(const ExponentScan& scan) {
  Json rows = Json::array();
  for (const ScanRow& row : scan.rows) {
    Json r;
    r["p"] = row.p;
    r["d"] = row.d;
    r["family"] = scan_family_name(row.family);
    r["size"] = row.size;
    r["trial"] = row.trial;
    r["energy"] = row.energy;
    r["fitted_exponent"] = number_or_null(row.fitted_exponent);
    r["seed"] = row.seed;
    r["method"] = energy_method_name(row.method);
    rows.push_back(std::move(r));
  }
  Json j;
  j["report"] = "scan";
  j["rows"] = std::move(rows);
  j["slope"] = number_or_null(scan.slope);
  j["max_exponent"] = number_or_null(scan.max_exponent);
  j["inadmissible_field"] = scan.inadmissible_field;
  return j;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string to_csv_line(const MeasurementRow& row) {
  std::ostringstream out;
  out << row.p << ',' << row.n << ',' << row.size_a << ',' << row.size_b << ','
      << row.metric << ',' << format_number(row.value) << ',' << row.seed
      << ',' << format_number(row.millis);
  return out.str();
}

std::vector<MeasurementRow> measurement_rows(const BiasReport& r,
                                             std::uint64_t seed) {
  std::vector<MeasurementRow> rows;
  auto add = [&](const char* metric, double value) {
    rows.push_back({r.p, r.n, r.x_size, r.y_size, metric, value, seed,
                    r.wall_time_ms});
  };
  add("sd", r.sd);
  add("sd_fourier", r.sd_fourier);
  add("max_exp_sum", r.max_exp_sum);
  add("coefficient_sum", r.coefficient_sum);
  add("chain_bound", r.chain_bound);
  return rows;
}

std::string scan_to_csv(const ExponentScan& scan) {
  std::ostringstream out;
  out << kScanCsvHeader << '\n';
  for (const ScanRow& row : scan.rows) {
    out << row.p << ',' << row.d << ',' << scan_family_name(row.family) << ','
        << row.size << ',' << row.trial << ',' << row.energy << ','
        << format_number(row.fitted_exponent) << ',' << row.seed << '\n';
  }
  return out.str();
}

std::vector<std::string> validate_report(const Json& j, ReportKind kind) {
  std::vector<std::string> problems;
  switch (kind) {
    case ReportKind::kBias:
      check_fields(j, bias_schema(), "bias", problems);
      break;
    case ReportKind::kExpSum:
      check_fields(j, exp_sum_schema(), "exp_sum", problems);
      break;
    case ReportKind::kEnergy:
      check_fields(j, energy_schema(), "energy", problems);
      break;
    case ReportKind::kScan:
      check_fields(j, scan_schema(), "scan", problems);
      if (problems.empty()) {
        for (std::size_t i = 0; i < j.at("rows").size(); ++i) {
          check_fields(j.at("rows")[i], scan_row_schema(),
                       "scan.rows[" + std::to_string(i) + "]", problems);
        }
      }
      break;
    case ReportKind::kSource:
      check_fields(j, source_schema(), "source", problems);
      if (problems.empty() && j.at("kind") == "general" &&
          !(j.contains("weights") && j.at("weights").is_array())) {
        problems.push_back("source: general source without weights");
      }
      break;
    case ReportKind::kEnvelope:
      check_fields(j, envelope_schema(), "envelope", problems);
      break;
  }
  return problems;
}

}  // namespace extractorlab
