#include "besov/threads.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace besov {
namespace {

int g_override = 0;

int env_threads() {
    if (const char* env = std::getenv("BESOV_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

} // namespace

int thread_count() { return g_override >= 1 ? g_override : env_threads(); }

void set_thread_override(int n) { g_override = n; }

void parallel_for(size_t n, const std::function<void(size_t)>& body) {
    if (n == 0) return;
    int workers = thread_count();
    if (workers <= 1 || n == 1) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }
    if (size_t(workers) > n) workers = int(n);

    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto run = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(size_t(workers) - 1);
    for (int t = 1; t < workers; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace besov
