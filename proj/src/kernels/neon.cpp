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

#include <arm_neon.h>

#include <cmath>

#include "variants.hpp"

namespace topicsum::kernels::neon {

double dot(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vaddq_f64(acc0, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    acc1 = vaddq_f64(acc1, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
  }
  double sum = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    // Separate multiply and add; vfmaq would round differently from scalar.
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(va, vld1q_f64(x + i))));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void gibbs_weights(const std::int32_t* doc_topic, const std::int32_t* word_topic,
                   const std::int32_t* topic_total, double alpha, double beta,
                   double vbeta, double* out, std::size_t k) {
  const float64x2_t va = vdupq_n_f64(alpha);
  const float64x2_t vb = vdupq_n_f64(beta);
  const float64x2_t vvb = vdupq_n_f64(vbeta);
  std::size_t t = 0;
  for (; t + 2 <= k; t += 2) {
    const float64x2_t dt = vcvtq_f64_s64(vmovl_s32(vld1_s32(doc_topic + t)));
    const float64x2_t wt = vcvtq_f64_s64(vmovl_s32(vld1_s32(word_topic + t)));
    const float64x2_t tt = vcvtq_f64_s64(vmovl_s32(vld1_s32(topic_total + t)));
    const float64x2_t num = vmulq_f64(vaddq_f64(dt, va), vaddq_f64(wt, vb));
    vst1q_f64(out + t, vdivq_f64(num, vaddq_f64(tt, vvb)));
  }
  for (; t < k; ++t) {
    const double left = static_cast<double>(doc_topic[t]) + alpha;
    const double right = static_cast<double>(word_topic[t]) + beta;
    out[t] = left * right / (static_cast<double>(topic_total[t]) + vbeta);
  }
}

double l1_distance(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = vaddq_f64(acc, vabsq_f64(vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i))));
  }
  double sum = vaddvq_f64(acc);
  for (; i < n; ++i) sum += std::fabs(a[i] - b[i]);
  return sum;
}

}  // namespace topicsum::kernels::neon
