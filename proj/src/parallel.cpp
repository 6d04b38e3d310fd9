#include "revlab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

#include "revlab/errors.hpp"

namespace revlab {

namespace {

int initial_worker_count() {
    if (const char* env = std::getenv("REVLAB_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::atomic<int>& worker_slot() {
    static std::atomic<int> workers{initial_worker_count()};
    return workers;
}

}  // namespace

int worker_count() { return worker_slot().load(); }

void set_worker_count(int n) {
    if (n < 1) throw validation_error("worker count must be >= 1");
    worker_slot().store(n);
}

void parallel_chunks(std::int64_t total, std::int64_t chunk_size,
                     const std::function<void(std::int64_t, std::int64_t)>& fn) {
    if (total <= 0) return;
    if (chunk_size < 1) chunk_size = 1;
    const std::int64_t n_chunks = (total + chunk_size - 1) / chunk_size;
    const int workers = std::min<std::int64_t>(worker_count(), n_chunks);

    if (workers <= 1) {
        for (std::int64_t c = 0; c < n_chunks; ++c)
            fn(c * chunk_size, std::min(total, (c + 1) * chunk_size));
        return;
    }

    std::atomic<std::int64_t> next{0};
    auto run = [&] {
        for (;;) {
            std::int64_t c = next.fetch_add(1);
            if (c >= n_chunks) return;
            fn(c * chunk_size, std::min(total, (c + 1) * chunk_size));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int t = 1; t < workers; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
}

}  // namespace revlab
