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

#include <cstdlib>
#include <string>

#include "variants.hpp"

namespace topicsum::kernels {

namespace {

constexpr KernelTable kScalarTable{Isa::kScalar, "scalar", scalar::dot, scalar::axpy,
                                   scalar::gibbs_weights, scalar::l1_distance};

#if defined(TOPICSUM_HAVE_AVX2)
constexpr KernelTable kAvx2Table{Isa::kAvx2, "avx2", avx2::dot, avx2::axpy,
                                 avx2::gibbs_weights, avx2::l1_distance};
#endif

#if defined(TOPICSUM_HAVE_NEON)
constexpr KernelTable kNeonTable{Isa::kNeon, "neon", neon::dot, neon::axpy,
                                 neon::gibbs_weights, neon::l1_distance};
#endif

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(TOPICSUM_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(TOPICSUM_HAVE_NEON)
      return true;  // mandatory on aarch64
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& select() {
  const auto avail = available();
  if (const char* forced = std::getenv("TOPICSUM_KERNELS")) {
    const std::string want(forced);
    for (Isa isa : avail) {
      if (isa_name(isa) == want) return *table_for(isa);
    }
  }
  return *table_for(avail.back());
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

std::vector<Isa> available() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
    if (cpu_supports(isa)) out.push_back(isa);
  }
  return out;
}

const KernelTable* table_for(Isa isa) {
  if (!cpu_supports(isa)) return nullptr;
  switch (isa) {
    case Isa::kScalar:
      return &kScalarTable;
#if defined(TOPICSUM_HAVE_AVX2)
    case Isa::kAvx2:
      return &kAvx2Table;
#endif
#if defined(TOPICSUM_HAVE_NEON)
    case Isa::kNeon:
      return &kNeonTable;
#endif
    default:
      return nullptr;
  }
}

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace topicsum::kernels
