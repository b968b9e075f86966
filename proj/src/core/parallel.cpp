#include "core/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sarchroma {

namespace {

int default_threads() {
    if (const char* env = std::getenv("SARCHROMA_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::atomic<int> g_max_threads{0};  // 0 = use default_threads()

}  // namespace

void set_max_threads(int n) { g_max_threads.store(n > 0 ? n : 0); }

int max_threads() {
    int n = g_max_threads.load();
    return n > 0 ? n : default_threads();
}

void parallel_for(std::int64_t count,
                  const std::function<void(std::int64_t, std::int64_t)>& body) {
    if (count <= 0) return;
    int threads = std::min<std::int64_t>(max_threads(), count);
    if (threads <= 1) {
        body(0, count);
        return;
    }

    // Block t covers [t*q + min(t,r), ...) where q = count/threads, r = count%threads.
    std::int64_t q = count / threads, r = count % threads;
    auto block_begin = [&](int t) { return t * q + std::min<std::int64_t>(t, r); };

    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto run = [&](int t) {
        try {
            body(block_begin(t), block_begin(t + 1));
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };
    for (int t = 1; t < threads; ++t) pool.emplace_back(run, t);
    run(0);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace sarchroma
