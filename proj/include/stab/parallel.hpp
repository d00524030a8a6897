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

#pragma once

#include <cstddef>

namespace stab {

/// Globally enables or disables the OpenMP kernel variants. The serial
/// reference kernels are used when disabled (or when built without OpenMP).
/// All kernels produce identical results in either mode.
void set_parallel_enabled(bool enabled);
bool parallel_enabled();

/// Number of OpenMP threads the parallel kernels would use (1 without OpenMP).
int parallel_thread_count();

/// Problem sizes below this stay on the serial path even when parallelism is
/// enabled; forking threads costs more than the loop at small sizes.
inline constexpr size_t kParallelGrainSize = 1u << 12;

/// Serial-mode guard for timing code that wants comparable single-thread runs.
class ScopedSerialMode {
 public:
  ScopedSerialMode();
  ~ScopedSerialMode();
  ScopedSerialMode(const ScopedSerialMode&) = delete;
  ScopedSerialMode& operator=(const ScopedSerialMode&) = delete;

 private:
  bool previous_;
};

}  // namespace stab
