// Copyright 2026 The surfdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SURFDEC_PARALLEL_H
#define SURFDEC_PARALLEL_H

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace surfdec {

// Splits [0, count) into `workers` contiguous chunks and runs fn(worker, begin,
// end) on each, one thread per chunk. Exceptions are rethrown on the caller.
template <typename Fn>
inline void parallel_chunks(unsigned workers, std::uint64_t count, Fn &&fn) {
    workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, count)));
    if (workers == 1) {
        fn(0u, std::uint64_t{0}, count);
        return;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; w++) {
        std::uint64_t begin = count / workers * w + std::min<std::uint64_t>(w, count % workers);
        std::uint64_t end = begin + count / workers + (w < count % workers ? 1 : 0);
        threads.emplace_back([&, w, begin, end]() {
            try {
                fn(w, begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace surfdec

#endif
