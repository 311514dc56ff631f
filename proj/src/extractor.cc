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

#include <algorithm>
#include <string>

#include "extractorlab/error.h"
#include "extractorlab/parallel.h"
#include "extractorlab/signal.h"
#include "extractorlab/sources.h"

namespace extractorlab {
namespace {

// Upper bound on the number of per-chunk bucket entries held at once.
constexpr std::uint64_t kChunkBucketBudget = std::uint64_t{1} << 22;
constexpr std::size_t kMaxChunks = 64;

// Coordinates and self-dot of each point, laid out for the pair loop.
struct PackedPoints {
  int n = 0;
  std::vector<std::uint64_t> coords;  // row-major, size * n
  std::vector<std::uint64_t> norms;   // x.x

  PackedPoints(const PrimeField& f, const std::vector<FieldVector>& pts) {
    n = pts.empty() ? 0 : pts.front().dimension();
    coords.reserve(pts.size() * static_cast<std::size_t>(n));
    norms.reserve(pts.size());
    for (const FieldVector& x : pts) {
      if (x.dimension() != n || x.modulus() != f.modulus()) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "point set mixes dimensions or fields");
      }
      coords.insert(coords.end(), x.coords().begin(), x.coords().end());
      norms.push_back(dot(x, x).value());
    }
  }
};

class PairKernel {
 public:
  PairKernel(const PrimeField& f, Form form, const PackedPoints& a,
             const PackedPoints& b)
      : f_(f), form_(form), a_(a), b_(b) {}

  std::uint64_t operator()(std::size_t i, std::size_t j) const {
    const std::size_t n = static_cast<std::size_t>(a_.n);
    const std::uint64_t* x = &a_.coords[i * n];
    const std::uint64_t* y = &b_.coords[j * n];
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < n; ++k) acc = f_.add(acc, f_.mul(x[k], y[k]));
    if (form_ == Form::kExtractor) {
      acc = f_.add(acc, f_.mul(a_.norms[i], b_.norms[j]));
    }
    return acc;
  }

 private:
  const PrimeField& f_;
  Form form_;
  const PackedPoints& a_;
  const PackedPoints& b_;
};

void check_pair_space(const PrimeField& f, int dim_a, int dim_b,
                      std::size_t size_a, std::size_t size_b,
                      const Limits& limits) {
  if (dim_a != dim_b) {
    throw Error(ErrorCode::kDimensionMismatch,
                "supports of dimensions " + std::to_string(dim_a) + " and " +
                    std::to_string(dim_b));
  }
  const unsigned __int128 pairs =
      static_cast<unsigned __int128>(size_a) * size_b;
  if (pairs > limits.max_pairs) {
    throw Error(ErrorCode::kUniverseTooLarge,
                std::to_string(size_a) + " x " + std::to_string(size_b) +
                    " pairs exceed pair cap " +
                    std::to_string(limits.max_pairs));
  }
  if (f.modulus() > limits.max_transform_length) {
    throw Error(ErrorCode::kUniverseTooLarge,
                "p = " + std::to_string(f.modulus()) +
                    " exceeds histogram cap " +
                    std::to_string(limits.max_transform_length));
  }
}

std::size_t chunk_count(std::size_t rows, std::uint64_t p) {
  const std::uint64_t by_memory = std::max<std::uint64_t>(1, kChunkBucketBudget / p);
  return static_cast<std::size_t>(std::max<std::uint64_t>(
      1, std::min<std::uint64_t>({rows, kMaxChunks, by_memory})));
}

std::size_t chunk_begin(std::size_t chunk, std::size_t chunks, std::size_t rows) {
  return static_cast<std::size_t>(
      static_cast<unsigned __int128>(chunk) * rows / chunks);
}

}  // namespace

const char* form_name(Form form) {
  return form == Form::kBilinear ? "bilinear" : "extractor";
}

ExtractorSpec::ExtractorSpec(PrimeField field, int n, const Limits& limits)
    : field_(field),
      n_(n),
      admissible_(n == 3 || (n == 2 && !minus_one_is_square(field))),
      universe_(std::move(field), n, limits) {}

FieldElement inner_form(const FieldVector& x, const FieldVector& y) {
  return dot(x, y) + dot(x, x) * dot(y, y);
}

FieldElement evaluate_form(Form form, const FieldVector& x,
                           const FieldVector& y) {
  return form == Form::kBilinear ? dot(x, y) : inner_form(x, y);
}

int extract(const ExtractorSpec& spec, const FieldVector& x,
            const FieldVector& y) {
  if (x.dimension() != spec.dimension() || y.dimension() != spec.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "extractor over F^" + std::to_string(spec.dimension()) +
                    " given vectors of dimension " +
                    std::to_string(x.dimension()) + " and " +
                    std::to_string(y.dimension()));
  }
  if (x.modulus() != spec.field().modulus()) {
    throw Error(ErrorCode::kInvalidArgument, "vector from another field");
  }
  return rho_bit(inner_form(x, y));
}

ValueHistogram::ValueHistogram(PrimeField field, std::vector<Complex> buckets)
    : field_(std::move(field)), buckets_(std::move(buckets)) {
  if (buckets_.size() != field_.modulus()) {
    throw Error(ErrorCode::kDimensionMismatch, "histogram needs p buckets");
  }
}

Complex ValueHistogram::total() const {
  Complex acc = 0;
  for (const Complex& z : buckets_) acc += z;
  return acc;
}

Complex ValueHistogram::twisted_sum(std::uint64_t lambda) const {
  const std::uint64_t p = field_.modulus();
  lambda %= p;
  Complex acc = 0;
  std::uint64_t phase = 0;
  for (std::uint64_t t = 0; t < p; ++t) {
    acc += buckets_[t] * field_.character(phase);
    phase = field_.add(phase, lambda);
  }
  return acc;
}

std::vector<Complex> ValueHistogram::all_twisted_sums(unsigned threads) const {
  std::vector<Complex> out(field_.modulus());
  parallel_for(out.size(), threads,
               [&](std::size_t lambda) { out[lambda] = twisted_sum(lambda); });
  return out;
}

ValueHistogram form_histogram(Form form, const WeightedSet& a,
                              const WeightedSet& b, const RunOptions& options) {
  if (!(a.universe() == b.universe())) {
    throw Error(ErrorCode::kDimensionMismatch,
                "weighted sets live in different universes");
  }
  const PrimeField& f = a.universe().field();
  const std::uint64_t p = f.modulus();
  check_pair_space(f, a.universe().dimension(), b.universe().dimension(),
                   a.size(), b.size(), options.limits);

  const PackedPoints pa(f, a.support());
  const PackedPoints pb(f, b.support());
  const PairKernel kernel(f, form, pa, pb);
  const auto& wa = a.weights();
  const auto& wb = b.weights();

  const std::size_t rows = a.size();
  const std::size_t chunks = chunk_count(rows, p);
  std::vector<std::vector<Complex>> partial(chunks);
  parallel_for(chunks, options.threads, [&](std::size_t c) {
    std::vector<Complex> buckets(p);
    const std::size_t end = chunk_begin(c + 1, chunks, rows);
    for (std::size_t i = chunk_begin(c, chunks, rows); i < end; ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        buckets[kernel(i, j)] += wa[i] * wb[j];
      }
    }
    partial[c] = std::move(buckets);
  });

  std::vector<Complex> merged(p);
  for (const auto& part : partial) {
    if (part.empty()) continue;
    for (std::uint64_t t = 0; t < p; ++t) merged[t] += part[t];
  }
  return ValueHistogram(f, std::move(merged));
}

ValueHistogram value_histogram(const ExtractorSpec& spec, const WeightedSet& a,
                               const WeightedSet& b,
                               const RunOptions& options) {
  if (a.universe().dimension() != spec.dimension() ||
      b.universe().dimension() != spec.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "weighted sets do not live in F^" +
                    std::to_string(spec.dimension()));
  }
  if (!(a.universe().field() == spec.field())) {
    throw Error(ErrorCode::kInvalidArgument, "weighted set from another field");
  }
  return form_histogram(Form::kExtractor, a, b, options);
}

std::vector<std::uint64_t> form_counts(Form form,
                                       const std::vector<FieldVector>& a,
                                       const std::vector<FieldVector>& b,
                                       const RunOptions& options) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::kEmptySupport, "form_counts on an empty set");
  }
  const PrimeField f(a.front().modulus());
  if (b.front().modulus() != f.modulus()) {
    throw Error(ErrorCode::kInvalidArgument, "sets from different fields");
  }
  const std::uint64_t p = f.modulus();
  check_pair_space(f, a.front().dimension(), b.front().dimension(), a.size(),
                   b.size(), options.limits);

  const PackedPoints pa(f, a);
  const PackedPoints pb(f, b);
  const PairKernel kernel(f, form, pa, pb);
  const std::size_t chunks = chunk_count(a.size(), p);
  std::vector<std::vector<std::uint64_t>> partial(chunks);
  parallel_for(chunks, options.threads, [&](std::size_t c) {
    std::vector<std::uint64_t> counts(p);
    const std::size_t end = chunk_begin(c + 1, chunks, a.size());
    for (std::size_t i = chunk_begin(c, chunks, a.size()); i < end; ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) ++counts[kernel(i, j)];
    }
    partial[c] = std::move(counts);
  });
  std::vector<std::uint64_t> merged(p);
  for (const auto& part : partial) {
    if (part.empty()) continue;
    for (std::uint64_t t = 0; t < p; ++t) merged[t] += part[t];
  }
  return merged;
}

}  // namespace extractorlab
