// Copyright 2026 The carlitz Authors
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

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace carlitz {

// Worker count: CARLITZ_THREADS if set and positive, else the hardware count.
inline unsigned worker_count() {
    if (const char* s = std::getenv("CARLITZ_THREADS")) {
        const long v = std::strtol(s, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

inline thread_local bool in_worker = false;

// out[i] = fn(i) for i < n, spread over worker_count() threads. The result
// does not depend on the thread count. The first exception is rethrown.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn fn) {
    std::vector<T> out(n);
    const unsigned w = std::min<std::size_t>(worker_count(), n);
    if (w <= 1 || n < 16 || in_worker) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto work = [&] {
        const bool was = in_worker;
        in_worker = true;
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(err_mu);
                if (!err) err = std::current_exception();
                next = n;
            }
        }
        in_worker = was;
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < w; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return out;
}

// Sum of fn(i) for i < n, added in index order.
template <class T, class Fn>
T parallel_sum(std::size_t n, const T& zero, Fn fn) {
    auto parts = parallel_map<T>(n, fn);
    T s = zero;
    for (auto& x : parts) s = s + x;
    return s;
}

}  // namespace carlitz
