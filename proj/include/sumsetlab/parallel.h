// Copyright 2026 The sumsetlab Authors
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

namespace sumsetlab {

// requested > 0 wins; otherwise SUMSETLAB_THREADS; otherwise the number of
// hardware threads (at least 1).
int ResolveThreads(int requested);

// Runs body(i) for every i in [0, n) on up to `threads` workers. Callers
// write results into slot i so that the merge order never depends on
// scheduling. The first exception thrown by any body is rethrown.
void ParallelFor(std::size_t n, int threads,
                 const std::function<void(std::size_t)>& body);

}  // namespace sumsetlab
