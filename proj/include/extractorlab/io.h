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
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "extractorlab/analysis.h"
#include "extractorlab/bounds.h"
#include "extractorlab/sources.h"

namespace extractorlab {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kVersion = "0.1.0";

// Source fixtures:
//   {"p": int, "n": int, "kind": "flat"|"general",
//    "support": [[int, ...], ...], "weights": [num, ...], "seed": int}
// "weights" is present only for general sources, "seed" only when known.
Json source_to_json(const Source& s);
Source source_from_json(const Json& j, const Limits& limits = {});
Source load_source(const std::string& path, const Limits& limits = {});
void save_source(const Source& s, const std::string& path);

// 64-bit FNV-1a of the compact dump, as 16 hex digits.
std::string fingerprint(const Json& j);
std::string fingerprint(const Source& s);

Json to_json(const BiasReport& r);
Json to_json(const ExpSumReport& r);
Json to_json(const EnergyReport& r);
Json to_json(const ExponentScan& scan);

// Locale-independent shortest round-trip rendering; "nan" for NaN.
std::string format_number(double v);

// Analysis sweep rows: p,n,|A|,|B|,metric,value,seed,millis
inline constexpr std::string_view kMeasurementCsvHeader =
    "p,n,|A|,|B|,metric,value,seed,millis";

struct MeasurementRow {
  std::uint64_t p = 0;
  int n = 0;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  std::string metric;
  double value = 0;
  std::uint64_t seed = 0;
  double millis = 0;
};

std::string to_csv_line(const MeasurementRow& row);
std::vector<MeasurementRow> measurement_rows(const BiasReport& r,
                                             std::uint64_t seed);

inline constexpr std::string_view kScanCsvHeader =
    "p,d,family,size,trial,energy,fitted_exponent,seed";

// Header line plus one line per row, LF terminated.
std::string scan_to_csv(const ExponentScan& scan);

enum class ReportKind { kBias, kExpSum, kEnergy, kScan, kSource, kEnvelope };

// Structural check of a report against its schema: required fields present
// with the right JSON types. Returns the list of problems (empty = valid).
std::vector<std::string> validate_report(const Json& j, ReportKind kind);

}  // namespace extractorlab
