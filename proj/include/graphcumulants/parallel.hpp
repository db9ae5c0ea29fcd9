// Copyright 2026 The graphcumulants Authors
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

#ifndef GRAPHCUMULANTS_PARALLEL_HPP_
#define GRAPHCUMULANTS_PARALLEL_HPP_

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace gc {

// Worker count: the request if positive, else $GC_THREADS, else the
// hardware concurrency.
int ResolveThreads(int requested);

// Splits [0, total) into one contiguous chunk per worker and runs
// fn(worker, begin, end). Chunking depends only on (total, workers), so
// exact reductions over per-worker partials are schedule independent.
template <typename F>
void ParallelChunks(int64_t total, int workers, F&& fn) {
  workers = static_cast<int>(std::max<int64_t>(
      1, std::min<int64_t>(workers, std::max<int64_t>(total, 1))));
  if (workers == 1) {
    fn(0, int64_t{0}, total);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (int t = 0; t < workers; ++t) {
    const int64_t b = total * t / workers, e = total * (t + 1) / workers;
    pool.emplace_back([&, t, b, e] {
      try {
        fn(t, b, e);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace gc

#endif  // GRAPHCUMULANTS_PARALLEL_HPP_
