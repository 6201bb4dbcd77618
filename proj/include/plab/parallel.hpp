#pragma once

#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

namespace plab {

/// Worker cap from PRICING_LAB_THREADS (0 or unset = hardware concurrency).
int max_threads();

/// Runs fn(chunk_index) for chunk_index in [0, chunks) across up to
/// max_threads() workers; results come back indexed by chunk, so reducing
/// them in index order is independent of the parallel schedule.
template <class Fn>
std::vector<std::pair<double, double>> run_chunks_ordered(std::uint64_t chunks, Fn&& fn) {
    std::vector<std::pair<double, double>> results(chunks);
    const int workers = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(max_threads()), chunks));
    if (workers <= 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) results[c] = fn(c);
        return results;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&results, &fn, w, workers, chunks] {
            for (std::uint64_t c = static_cast<std::uint64_t>(w); c < chunks;
                 c += static_cast<std::uint64_t>(workers))
                results[c] = fn(c);
        });
    }
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace plab
