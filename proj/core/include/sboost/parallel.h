// Copyright 2026 The sboost Authors
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

#ifndef SBOOST_PARALLEL_H_
#define SBOOST_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace sboost {

// Environment variable capping internal parallelism.
inline constexpr const char* kThreadsEnvVar = "SBOOST_NUM_THREADS";

// requested > 0 is honoured (still capped by the environment variable);
// requested <= 0 means hardware concurrency under the same cap.
int ResolveThreads(int requested);

// Runs fn(i) for i in [0, n) on up to `threads` threads. Each index is
// processed exactly once; callers must write only to per-index outputs.
void ParallelFor(std::size_t n, int threads,
                 const std::function<void(std::size_t)>& fn);

}  // namespace sboost

#endif  // SBOOST_PARALLEL_H_
