// Copyright 2026 The pwclock Authors
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
#include <functional>

namespace pwclock {

/// Worker count from PWCLOCK_THREADS, else hardware concurrency (min 1).
std::size_t worker_count();

/// Splits [0, count) into contiguous chunks and runs `body(begin, end)` on
/// up to worker_count() threads. Chunks never overlap, so callers that write
/// only to their own index range get results independent of the thread count.
/// The first exception thrown by any chunk is rethrown after all join.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace pwclock
