// Copyright 2026 The QAQC Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qaqc/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace qaqc {

namespace {

std::atomic<int> g_threads{0};

int env_threads() {
    const char *raw = std::getenv("QAQC_THREADS");
    if (raw == nullptr) {
        return 1;
    }
    try {
        const int v = std::stoi(raw);
        return v >= 1 ? v : 1;
    } catch (const std::exception &) {
        return 1;
    }
}

} // namespace

int num_threads() {
    const int t = g_threads.load();
    return t >= 1 ? t : env_threads();
}

void set_num_threads(int threads) { g_threads.store(threads >= 1 ? threads : 0); }

void parallel_for(std::size_t count, const std::function<void(std::size_t)> &fn) {
    const auto workers =
        std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, num_threads())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) {
        pool.emplace_back(work);
    }
    work();
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace qaqc
