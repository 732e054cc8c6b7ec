// Copyright 2026 The topicsum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

// Data-parallel inner loops shared by the sampler, the ranker and the
// similarity code. Every kernel has a portable scalar reference; SIMD
// variants are chosen once at runtime from what the CPU supports.
//
// Element-wise kernels (axpy, gibbs_weights) are bit-identical across
// variants. Reductions (dot, l1_distance) may differ in the last few ulps
// because lane-wise partial sums are added in a different order.

namespace topicsum::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

struct KernelTable {
  Isa isa;
  const char* name;
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // out[k] = (doc_topic[k] + alpha) * (word_topic[k] + beta) / (topic_total[k] + vbeta)
  void (*gibbs_weights)(const std::int32_t* doc_topic, const std::int32_t* word_topic,
                        const std::int32_t* topic_total, double alpha, double beta,
                        double vbeta, double* out, std::size_t k);
  double (*l1_distance)(const double* a, const double* b, std::size_t n);
};

// Variants compiled in and supported by the running CPU, scalar first.
std::vector<Isa> available();

// nullptr when the variant is not compiled in or not supported here.
const KernelTable* table_for(Isa isa);

// The table used by the library. Picks the widest supported variant unless
// TOPICSUM_KERNELS=scalar|avx2|neon names another available one.
const KernelTable& active();

std::string_view isa_name(Isa isa);

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}

inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active().axpy(alpha, x.data(), y.data(), x.size());
}

inline double l1_distance(std::span<const double> a, std::span<const double> b) {
  return active().l1_distance(a.data(), b.data(), a.size());
}

}  // namespace topicsum::kernels
