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
#include <vector>

#include "extractorlab/field.h"
#include "extractorlab/options.h"

namespace extractorlab {

class WeightedSet;

// The two pairings analysed in this library.
enum class Form {
  kBilinear,   // x.y
  kExtractor,  // x.y + (x.x)(y.y)
};

const char* form_name(Form form);

// The map (x, y) -> rho(x.y + (x.x)(y.y)) on F^n x F^n.
class ExtractorSpec {
 public:
  ExtractorSpec(PrimeField field, int n, const Limits& limits = {});

  const PrimeField& field() const noexcept { return field_; }
  int dimension() const noexcept { return n_; }
  // n = 2 needs -1 to be a non-residue; n = 3 needs nothing. Other
  // dimensions are accepted for experiments but never admissible.
  bool admissible() const noexcept { return admissible_; }
  const Universe& universe() const noexcept { return universe_; }

 private:
  PrimeField field_;
  int n_;
  bool admissible_;
  Universe universe_;
};

// x.y + (x.x)(y.y) mod p.
FieldElement inner_form(const FieldVector& x, const FieldVector& y);

FieldElement evaluate_form(Form form, const FieldVector& x,
                           const FieldVector& y);

// rho_bit(inner_form(x, y)). Inadmissible specs still extract; callers that
// care check spec.admissible().
int extract(const ExtractorSpec& spec, const FieldVector& x,
            const FieldVector& y);

// buckets[t] = sum of a(x) b(y) over pairs with f(x, y) = t.
class ValueHistogram {
 public:
  ValueHistogram(PrimeField field, std::vector<Complex> buckets);

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<Complex>& buckets() const noexcept { return buckets_; }
  Complex total() const;

  // sum_t buckets[t] e(lambda t).
  Complex twisted_sum(std::uint64_t lambda) const;
  // twisted_sum for every lambda in [0, p), O(p^2), parallel over lambda.
  std::vector<Complex> all_twisted_sums(unsigned threads = 1) const;

 private:
  PrimeField field_;
  std::vector<Complex> buckets_;
};

// One pass over supp(A) x supp(B). The pair space is cut into chunks whose
// boundaries depend only on |A|, never on the thread count, and chunk
// partials are merged in chunk order, so the result is bit-identical for
// every `threads`.
ValueHistogram form_histogram(Form form, const WeightedSet& a,
                              const WeightedSet& b,
                              const RunOptions& options = {});

ValueHistogram value_histogram(const ExtractorSpec& spec, const WeightedSet& a,
                               const WeightedSet& b,
                               const RunOptions& options = {});

// Integer variant for unit weights: counts[t] = #{(x, y) : f(x, y) = t}.
std::vector<std::uint64_t> form_counts(Form form,
                                       const std::vector<FieldVector>& a,
                                       const std::vector<FieldVector>& b,
                                       const RunOptions& options = {});

}  // namespace extractorlab
