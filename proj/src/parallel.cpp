// Copyright 2026 The stabtool Authors
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

#include "stab/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stab {

namespace {
std::atomic<bool> g_parallel_enabled{true};
}

void set_parallel_enabled(bool enabled) { g_parallel_enabled.store(enabled); }

bool parallel_enabled() {
#ifdef _OPENMP
  return g_parallel_enabled.load();
#else
  return false;
#endif
}

int parallel_thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

ScopedSerialMode::ScopedSerialMode() : previous_(g_parallel_enabled.load()) {
  set_parallel_enabled(false);
}

ScopedSerialMode::~ScopedSerialMode() { set_parallel_enabled(previous_); }

}  // namespace stab
